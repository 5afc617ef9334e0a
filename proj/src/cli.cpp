#include "tokenslide/cli.hpp"

#include "tokenslide/generators.hpp"
#include "tokenslide/instance_io.hpp"
#include "tokenslide/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>

namespace tokenslide {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Results go to the -o file when given, to stdout otherwise.
void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw InputError("cannot write '" + out_path + "'");
    f << text;
}

const IntervalGraph& require_interval(const InstanceFile& file, const char* command) {
    if (file.abstract)
        throw InputError(std::string(command) + " needs an interval instance, got an abstract one");
    return *file.graph;
}

const Configuration& require_target(const InstanceFile& file, const char* command) {
    if (!file.J)
        throw InputError(std::string(command) + " needs a J line in the instance file");
    return *file.J;
}

std::string id_line(const Configuration& cfg) {
    std::string out;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (i)
            out += " ";
        out += cfg[i];
    }
    out += "\n";
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* what) {
    auto parts = split(text, ':');
    auto to_count = [&](const std::string& tok) -> std::size_t {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos == tok.size() && v >= 1)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw InputError(std::string(what) + ": malformed range '" + text + "' (expected LO:HI)");
    };
    if (parts.size() == 1) {
        std::size_t v = to_count(parts[0]);
        return {v, v};
    }
    if (parts.size() != 2)
        throw InputError(std::string(what) + ": malformed range '" + text + "' (expected LO:HI)");
    std::size_t lo = to_count(parts[0]);
    std::size_t hi = to_count(parts[1]);
    if (lo > hi)
        throw InputError(std::string(what) + ": empty range '" + text + "'");
    return {lo, hi};
}

Configuration greedy_independent(const IntervalGraph& g, std::size_t k, bool leftmost) {
    std::vector<std::size_t> scan;
    if (leftmost) {
        scan = g.order(LineOrder::right);
    } else {
        scan = g.order(LineOrder::left);
        std::reverse(scan.begin(), scan.end());
    }
    std::vector<std::size_t> picked;
    for (std::size_t idx : scan) {
        if (picked.size() == k)
            break;
        bool clears = picked.empty() || (leftmost ? g.entirely_left_idx(picked.back(), idx)
                                                  : g.entirely_left_idx(idx, picked.back()));
        if (clears)
            picked.push_back(idx);
    }
    if (picked.size() < k)
        throw InputError("graph has no independent set of size " + std::to_string(k));
    if (!leftmost)
        std::reverse(picked.begin(), picked.end());
    Configuration out;
    for (std::size_t idx : picked)
        out.push_back(g.id_at(idx));
    return out;
}

// The witness printed by solve is re-validated first; emitting a broken or
// oversized sequence is an internal error, never silent.
RunReport checked_solve(const IntervalGraph& g, std::size_t k, const Configuration& I,
                        const Configuration& J) {
    auto t0 = std::chrono::steady_clock::now();
    Decision decision = decide_and_construct(g, k, I, J);
    auto t1 = std::chrono::steady_clock::now();

    RunReport report;
    report.reconfigurable = decision.reconfigurable;
    report.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.bounds_ok = true;
    if (decision.reconfigurable) {
        report.seq = std::move(decision.seq);
        report.seq_length = report.seq.size();
        ValidationReport check = validate_sequence(g, I, report.seq, J);
        if (!check.valid || !check.end_matches.value_or(false))
            throw InternalError("solver produced an invalid witness sequence");
        if (report.seq_length > 2 * sequence_length_bound(g.size(), k))
            throw InternalError("solver witness has " + std::to_string(report.seq_length) +
                                " slides, above twice the per-side bound " +
                                std::to_string(sequence_length_bound(g.size(), k)));
    }
    return report;
}

void cmd_solve(const std::string& path, std::ostream& out) {
    InstanceFile file = parse_instance(read_file(path));
    const IntervalGraph& g = require_interval(file, "solve");
    const Configuration& J = require_target(file, "solve");
    RunReport report = checked_solve(g, file.k, file.I, J);
    if (report.reconfigurable)
        out << "YES\n" << format_sequence(report.seq);
    else
        out << "NO\n";
}

void cmd_canon(const std::string& path, std::ostream& out) {
    InstanceFile file = parse_instance(read_file(path));
    const IntervalGraph& g = require_interval(file, "canon");
    ExtremeResult result = canonical_form(g, file.k, file.I);
    ValidationReport check = validate_sequence(g, file.I, result.seq, result.extreme);
    if (!check.valid || !check.end_matches.value_or(false))
        throw InternalError("canonicalization produced an invalid sequence");
    if (result.seq.size() > sequence_length_bound(g.size(), file.k))
        throw InternalError("canonicalization sequence exceeds its length bound");
    out << id_line(result.extreme) << format_sequence(result.seq);
}

void cmd_validate(const std::string& path, const std::string& seq_path, std::ostream& out) {
    InstanceFile file = parse_instance(read_file(path));
    const IntervalGraph& g = require_interval(file, "validate");
    ReconfigSequence seq = parse_sequence(read_file(seq_path));
    ValidationReport report = validate_sequence(g, file.I, seq, file.J);
    if (!report.valid) {
        out << "INVALID step " << report.failed_step << " "
            << move_error_name(report.failure_kind) << "\n";
        return;
    }
    out << "VALID\n" << id_line(report.end);
    if (file.J)
        out << (report.end_matches.value_or(false) ? "END-MATCH\n" : "END-MISMATCH\n");
}

void cmd_oracle(const std::string& path, std::size_t state_cap, std::ostream& out) {
    InstanceFile file = parse_instance(read_file(path));
    const Configuration& J = require_target(file, "oracle");
    AbstractGraph g =
        file.abstract ? *file.agraph : AbstractGraph::from_interval_graph(*file.graph);
    BfsResult result = bfs_reconfigurable(g, file.k, file.I, J, state_cap);
    if (result.reachable)
        out << "YES\n" << *result.distance << "\n";
    else
        out << "NO\n";
}

Digraph digraph_from_options(const std::string& vertices_csv, const std::string& edges_csv) {
    Digraph h;
    h.vertices = split(vertices_csv, ',');
    for (const std::string& v : h.vertices)
        if (v.empty())
            throw InputError("--vertices has an empty entry");
    if (!edges_csv.empty()) {
        for (const std::string& e : split(edges_csv, ',')) {
            auto ends = split(e, '>');
            if (ends.size() != 2 || ends[0].empty() || ends[1].empty())
                throw InputError("--edges entry '" + e + "' is not of the form x>y");
            h.edges.emplace(ends[0], ends[1]);
        }
    }
    return h;
}

void cmd_bench(std::size_t m_lo, std::size_t m_hi, std::size_t k_lo, std::size_t k_hi,
               bool with_oracle, std::size_t state_cap, const std::string& out_path,
               std::ostream& out) {
    std::string csv = "m,k,n,solver_len,bound_8kn2_2kn";
    if (with_oracle)
        csv += ",bfs_len";
    csv += "\n";
    for (std::size_t m = m_lo; m <= m_hi; ++m) {
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
            LowerBoundInstance inst = gen_lower_bound(m, k);
            RunReport report = checked_solve(inst.graph, k, inst.I, inst.J);
            if (!report.reconfigurable)
                throw InternalError("lower-bound instance m=" + std::to_string(m) +
                                    " k=" + std::to_string(k) + " came back not reconfigurable");
            csv += std::to_string(m) + "," + std::to_string(k) + "," +
                   std::to_string(inst.graph.size()) + "," + std::to_string(report.seq_length) +
                   "," + std::to_string(sequence_length_bound(inst.graph.size(), k));
            if (with_oracle) {
                BfsResult bfs = bfs_reconfigurable(AbstractGraph::from_interval_graph(inst.graph),
                                                   k, inst.I, inst.J, state_cap);
                if (!bfs.reachable)
                    throw InternalError("oracle disagrees on lower-bound instance m=" +
                                        std::to_string(m) + " k=" + std::to_string(k));
                csv += "," + std::to_string(*bfs.distance);
            }
            csv += "\n";
        }
    }
    deliver(csv, out_path, out);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"token-sliding reconfiguration of independent sets on interval graphs"};
    app.require_subcommand(1);

    std::string instance_path, sequence_path, out_path;
    std::size_t state_cap = kDefaultStateCap;

    CLI::App* solve = app.add_subcommand(
        "solve", "decide I -> J reconfigurability and print a witness sequence");
    solve->add_option("file", instance_path, "instance file (needs a J line)")->required();

    CLI::App* canon = app.add_subcommand(
        "canon", "print the canonical extreme configuration of I and a sequence reaching it");
    canon->add_option("file", instance_path, "instance file")->required();

    CLI::App* validate =
        app.add_subcommand("validate", "replay a sequence file against an instance");
    validate->add_option("file", instance_path, "instance file")->required();
    validate->add_option("seqfile", sequence_path, "sequence file")->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "answer by brute-force state-space search (interval or abstract instance)");
    oracle->add_option("file", instance_path, "instance file (needs a J line)")->required();
    oracle->add_option("--state-cap", state_cap, "abort beyond this many states");

    CLI::App* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);

    std::size_t gen_m = 1, gen_k = 1, gen_n = 1;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_lb = gen->add_subcommand(
        "lower-bound", "adversarial corridor family with long reconfiguration sequences");
    gen_lb->add_option("--m", gen_m, "path-length parameter (>= 1)")->required();
    gen_lb->add_option("--k", gen_k, "token count (>= 1)")->required();
    gen_lb->add_option("-o,--out", out_path, "write to a file instead of stdout");

    CLI::App* gen_rand = gen->add_subcommand("random", "seeded random interval instance");
    gen_rand->add_option("--n", gen_n, "interval count (>= 1)")->required();
    gen_rand->add_option("--seed", gen_seed, "rng seed")->required();
    gen_rand->add_option("--k", gen_k, "token count (default 1)");
    gen_rand->add_option("-o,--out", out_path, "write to a file instead of stdout");

    std::string hv, he, ha, hb;
    CLI::App* gen_hard = gen->add_subcommand(
        "hardness", "layered-order instance equivalent to walk reconfiguration");
    gen_hard->add_option("--vertices", hv, "digraph vertices, comma separated")->required();
    gen_hard->add_option("--edges", he, "directed edges x>y, comma separated (loops allowed)");
    gen_hard->add_option("--word-a", ha, "start walk, letters comma separated")->required();
    gen_hard->add_option("--word-b", hb, "target walk, letters comma separated")->required();
    gen_hard->add_option("-o,--out", out_path, "write to a file instead of stdout");

    std::string family = "lower-bound", m_range, k_range;
    bool bench_oracle = false;
    CLI::App* bench = app.add_subcommand("bench", "sequence-length growth data as CSV");
    bench->add_option("--family", family, "instance family (lower-bound)");
    bench->add_option("--m-range", m_range, "LO:HI")->required();
    bench->add_option("--k-range", k_range, "LO:HI")->required();
    bench->add_flag("--oracle", bench_oracle, "also report exact BFS distances");
    bench->add_option("--state-cap", state_cap, "abort beyond this many states");
    bench->add_option("-o,--out", out_path, "write to a file instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tokenslide");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            cmd_solve(instance_path, out);
        } else if (canon->parsed()) {
            cmd_canon(instance_path, out);
        } else if (validate->parsed()) {
            cmd_validate(instance_path, sequence_path, out);
        } else if (oracle->parsed()) {
            cmd_oracle(instance_path, state_cap, out);
        } else if (gen->parsed()) {
            if (gen_lb->parsed()) {
                LowerBoundInstance inst = gen_lower_bound(gen_m, gen_k);
                deliver(format_instance(inst.graph, inst.k, inst.I, inst.J), out_path, out);
            } else if (gen_rand->parsed()) {
                IntervalGraph g = gen_random_interval(gen_n, gen_seed);
                Configuration I = greedy_independent(g, gen_k, true);
                Configuration J = greedy_independent(g, gen_k, false);
                deliver(format_instance(g, gen_k, I, J), out_path, out);
            } else if (gen_hard->parsed()) {
                Digraph h = digraph_from_options(hv, he);
                HardnessInstance inst = gen_hardness(h, split(ha, ','), split(hb, ','));
                deliver(format_abstract_instance(inst.graph, inst.n, inst.A, inst.B), out_path,
                        out);
            }
        } else if (bench->parsed()) {
            if (family != "lower-bound")
                throw InputError("unknown bench family '" + family + "'");
            auto [m_lo, m_hi] = parse_range(m_range, "--m-range");
            auto [k_lo, k_hi] = parse_range(k_range, "--k-range");
            cmd_bench(m_lo, m_hi, k_lo, k_hi, bench_oracle, state_cap, out_path, out);
        }
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace tokenslide
