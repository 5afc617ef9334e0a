#include "tokenslide/instance_io.hpp"

#include <algorithm>
#include <sstream>

namespace tokenslide {

namespace {

struct TokenLine {
    std::size_t number = 0; // 1-based source line
    std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
    std::vector<TokenLine> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        TokenLine line;
        line.number = number;
        std::string tok;
        while (ls >> tok)
            line.tokens.push_back(tok);
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw InputError("line " + std::to_string(line) + ": " + message);
}

std::size_t parse_count(const TokenLine& line, const std::string& token, const char* what) {
    try {
        std::size_t pos = 0;
        long long value = std::stoll(token, &pos);
        if (pos == token.size() && value >= 0)
            return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    fail(line.number, std::string("expected ") + what + ", got '" + token + "'");
}

Configuration parse_id_list(const TokenLine& line, std::size_t k) {
    if (line.tokens.size() != k + 1)
        fail(line.number, "expected " + std::to_string(k) + " ids after '" + line.tokens[0] +
                              "', got " + std::to_string(line.tokens.size() - 1));
    return Configuration(line.tokens.begin() + 1, line.tokens.end());
}

// Abstract configurations have no line order; canonicalize by id and check
// independence directly.
Configuration canonical_abstract_configuration(const AbstractGraph& g, Configuration cfg,
                                               std::size_t line) {
    std::sort(cfg.begin(), cfg.end());
    for (const std::string& id : cfg)
        if (!g.has_vertex(id))
            fail(line, "unknown vertex id '" + id + "'");
    for (std::size_t a = 0; a < cfg.size(); ++a) {
        for (std::size_t b = a + 1; b < cfg.size(); ++b) {
            if (cfg[a] == cfg[b])
                fail(line, "configuration repeats vertex '" + cfg[a] + "'");
            if (g.adjacent(cfg[a], cfg[b]))
                fail(line, "configuration is not independent: '" + cfg[a] + "' and '" + cfg[b] +
                               "' are adjacent");
        }
    }
    return cfg;
}

} // namespace

InstanceFile parse_instance(const std::string& text) {
    std::vector<TokenLine> lines = tokenize(text);
    if (lines.empty())
        throw InputError("instance file has no content");

    InstanceFile out;
    std::size_t cursor = 0;
    const TokenLine& header = lines[cursor++];

    std::size_t n = 0;
    if (header.tokens[0] == "abstract") {
        out.abstract = true;
        if (header.tokens.size() != 3)
            fail(header.number, "expected 'abstract n k'");
        n = parse_count(header, header.tokens[1], "a vertex count");
        out.k = parse_count(header, header.tokens[2], "a token count");
    } else {
        if (header.tokens.size() != 2)
            fail(header.number, "expected 'n k' on the first line");
        n = parse_count(header, header.tokens[0], "a vertex count");
        out.k = parse_count(header, header.tokens[1], "a token count");
    }
    if (n < 1)
        fail(header.number, "instance needs at least one vertex");
    if (out.k < 1)
        fail(header.number, "instance needs at least one token");

    if (out.abstract) {
        std::vector<std::string> ids;
        for (std::size_t i = 0; i < n; ++i) {
            if (cursor >= lines.size())
                throw InputError("unexpected end of file: expected " + std::to_string(n) +
                                 " vertex lines");
            const TokenLine& line = lines[cursor++];
            if (line.tokens.size() != 1)
                fail(line.number, "expected a single vertex id");
            ids.push_back(line.tokens[0]);
        }
        if (cursor >= lines.size())
            throw InputError("unexpected end of file: expected an edge count line");
        const TokenLine& mline = lines[cursor++];
        if (mline.tokens.size() != 1)
            fail(mline.number, "expected an edge count");
        std::size_t m = parse_count(mline, mline.tokens[0], "an edge count");
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t i = 0; i < m; ++i) {
            if (cursor >= lines.size())
                throw InputError("unexpected end of file: expected " + std::to_string(m) +
                                 " edge lines");
            const TokenLine& line = lines[cursor++];
            if (line.tokens.size() != 2)
                fail(line.number, "expected 'u v'");
            edges.emplace_back(line.tokens[0], line.tokens[1]);
        }
        try {
            out.agraph = AbstractGraph::from_edges(ids, edges);
        } catch (const InputError& e) {
            throw InputError(std::string("graph section: ") + e.what());
        }
    } else {
        std::vector<Interval> intervals;
        for (std::size_t i = 0; i < n; ++i) {
            if (cursor >= lines.size())
                throw InputError("unexpected end of file: expected " + std::to_string(n) +
                                 " interval lines");
            const TokenLine& line = lines[cursor++];
            if (line.tokens.size() != 3)
                fail(line.number, "expected 'id left right'");
            try {
                intervals.push_back({line.tokens[0], parse_rational(line.tokens[1]),
                                     parse_rational(line.tokens[2])});
            } catch (const InputError& e) {
                fail(line.number, e.what());
            }
        }
        try {
            out.graph = build_graph(intervals);
        } catch (const InputError& e) {
            throw InputError(std::string("graph section: ") + e.what());
        }
    }

    if (cursor >= lines.size())
        throw InputError("unexpected end of file: expected an I line");
    const TokenLine& iline = lines[cursor++];
    if (iline.tokens[0] != "I")
        fail(iline.number, "expected an I line, got '" + iline.tokens[0] + "'");
    Configuration rawI = parse_id_list(iline, out.k);

    std::optional<Configuration> rawJ;
    std::size_t jnumber = 0;
    if (cursor < lines.size()) {
        const TokenLine& jline = lines[cursor++];
        if (jline.tokens[0] != "J")
            fail(jline.number, "expected a J line or end of file, got '" + jline.tokens[0] + "'");
        rawJ = parse_id_list(jline, out.k);
        jnumber = jline.number;
    }
    if (cursor < lines.size())
        fail(lines[cursor].number, "unexpected content after the instance");

    if (out.abstract) {
        out.I = canonical_abstract_configuration(*out.agraph, rawI, iline.number);
        if (rawJ)
            out.J = canonical_abstract_configuration(*out.agraph, *rawJ, jnumber);
    } else {
        try {
            out.I = make_configuration(*out.graph, rawI);
        } catch (const InputError& e) {
            fail(iline.number, e.what());
        }
        if (rawJ) {
            try {
                out.J = make_configuration(*out.graph, *rawJ);
            } catch (const InputError& e) {
                fail(jnumber, e.what());
            }
        }
    }
    return out;
}

std::string format_instance(const IntervalGraph& g, std::size_t k, const Configuration& I,
                            const std::optional<Configuration>& J) {
    std::string out = std::to_string(g.size()) + " " + std::to_string(k) + "\n";
    for (const std::string& id : g.vertex_ids()) {
        const Interval& iv = g.interval(id);
        out += id + " " + format_rational(iv.left) + " " + format_rational(iv.right) + "\n";
    }
    out += "I";
    for (const std::string& id : I)
        out += " " + id;
    out += "\n";
    if (J) {
        out += "J";
        for (const std::string& id : *J)
            out += " " + id;
        out += "\n";
    }
    return out;
}

std::string format_abstract_instance(const AbstractGraph& g, std::size_t k,
                                     const Configuration& I,
                                     const std::optional<Configuration>& J) {
    std::string out = "abstract " + std::to_string(g.size()) + " " + std::to_string(k) + "\n";
    for (const std::string& id : g.vertex_ids())
        out += id + "\n";
    auto edges = g.edge_list();
    out += std::to_string(edges.size()) + "\n";
    for (const auto& [u, v] : edges)
        out += u + " " + v + "\n";
    out += "I";
    for (const std::string& id : I)
        out += " " + id;
    out += "\n";
    if (J) {
        out += "J";
        for (const std::string& id : *J)
            out += " " + id;
        out += "\n";
    }
    return out;
}

ReconfigSequence parse_sequence(const std::string& text) {
    std::vector<TokenLine> lines = tokenize(text);
    if (lines.empty())
        throw InputError("sequence file has no content");
    if (lines[0].tokens.size() != 1)
        fail(lines[0].number, "expected a move count");
    std::size_t m = parse_count(lines[0], lines[0].tokens[0], "a move count");
    if (lines.size() != m + 1)
        throw InputError("sequence file announces " + std::to_string(m) + " moves but has " +
                         std::to_string(lines.size() - 1) + " move lines");
    ReconfigSequence out;
    out.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        const TokenLine& line = lines[i];
        if (line.tokens.size() != 2)
            fail(line.number, "expected 'from to'");
        out.push_back({line.tokens[0], line.tokens[1]});
    }
    return out;
}

std::string format_sequence(const ReconfigSequence& s) {
    std::string out = std::to_string(s.size()) + "\n";
    for (const Move& mv : s)
        out += mv.from + " " + mv.to + "\n";
    return out;
}

} // namespace tokenslide
