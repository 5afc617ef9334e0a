#pragma once

#include "tokenslide/reconfiguration.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tokenslide {

// What `solve` computes before printing: the decision, the witness, and the
// self-checks its output already passed.
struct RunReport {
    bool reconfigurable = false;
    std::size_t seq_length = 0;
    ReconfigSequence seq;
    double elapsed_seconds = 0.0;
    bool bounds_ok = false; // witness validated and within its length bound
};

// Runs one subcommand (solve, canon, validate, oracle, gen, bench) against
// the given streams. Returns the process exit code: 0 when the command
// completed (YES and NO both count), 2 on usage or input errors, 3 when an
// internal invariant check failed. Identical inputs produce byte-identical
// stdout.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tokenslide
