#include "tokenslide/rational.hpp"

#include "tokenslide/errors.hpp"

#include <cstdlib>

namespace tokenslide {

namespace {

bool parse_int(const std::string& text, long long& out) {
    if (text.empty())
        return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(text, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == text.size();
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    long long num = 0;
    long long den = 1;
    bool ok = false;
    if (slash == std::string::npos) {
        ok = parse_int(text, num);
    } else {
        ok = parse_int(text.substr(0, slash), num) &&
             parse_int(text.substr(slash + 1), den) && den > 0;
    }
    if (!ok)
        throw InputError("malformed rational '" + text + "' (expected p or p/q with q > 0)");
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    std::string out = std::to_string(value.numerator());
    if (value.denominator() != 1)
        out += "/" + std::to_string(value.denominator());
    return out;
}

const char* move_error_name(MoveErrorKind kind) {
    switch (kind) {
    case MoveErrorKind::from_not_in_config: return "from-not-in-config";
    case MoveErrorKind::to_occupied: return "to-occupied";
    case MoveErrorKind::non_edge: return "non-edge";
    case MoveErrorKind::independence_violated: return "independence-violated";
    }
    return "unknown";
}

} // namespace tokenslide
