#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mct/graph.hpp"
#include "mct/partition.hpp"

namespace mct {

// Positioned syntax error in a certificate file. Semantic problems with an
// otherwise well-formed decomposition surface as ValidationError instead.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_) + ": " + reason),
          line(line_) {}
};

struct ParsedCertificate {
    ColoredGraph graph;
    std::optional<BlowupPartition> partition;
};

// Line-oriented text format, version header "mct 1":
//   mct 1
//   n <N>
//   cycle <v1> <v2> <v3> <v4> <v5>
//   part <v> <i>          (i in 1..5; all vertices or none)
//   # comment
// Unknown directives are an error, not a warning.
inline ParsedCertificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::optional<int> n;
    std::vector<CycleTuple> classes;
    std::vector<int> part_of;      // -1 = unassigned
    long long parts_assigned = 0;

    auto parse_int = [&](const std::string& tok, const char* what) {
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
        }
        if (pos != tok.size())
            throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
        return v;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;

        if (!saw_header) {
            if (tok.size() != 2 || tok[0] != "mct")
                throw ParseError(lineno, "expected header 'mct 1'");
            if (tok[1] != "1")
                throw ParseError(lineno, "unsupported format version '" + tok[1] + "'");
            saw_header = true;
            continue;
        }

        if (tok[0] == "n") {
            if (n) throw ParseError(lineno, "duplicate 'n' directive");
            if (tok.size() != 2) throw ParseError(lineno, "'n' takes one count");
            long long v = parse_int(tok[1], "a vertex count");
            if (v < 0) throw ParseError(lineno, "vertex count must be nonnegative");
            n = static_cast<int>(v);
            part_of.assign(*n, -1);
        } else if (tok[0] == "cycle") {
            if (!n) throw ParseError(lineno, "'cycle' before 'n'");
            if (tok.size() != 6) throw ParseError(lineno, "'cycle' takes five vertices");
            CycleTuple c;
            for (int i = 0; i < 5; ++i)
                c[i] = static_cast<int>(parse_int(tok[i + 1], "a vertex"));
            classes.push_back(c);
        } else if (tok[0] == "part") {
            if (!n) throw ParseError(lineno, "'part' before 'n'");
            if (tok.size() != 3) throw ParseError(lineno, "'part' takes a vertex and a part index");
            long long v = parse_int(tok[1], "a vertex");
            long long p = parse_int(tok[2], "a part index");
            if (v < 0 || v >= *n)
                throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
            if (p < 1 || p > 5)
                throw ParseError(lineno, "part index must be in 1..5");
            if (part_of[v] != -1)
                throw ParseError(lineno, "vertex " + std::to_string(v) + " assigned twice");
            part_of[v] = static_cast<int>(p - 1);
            ++parts_assigned;
        } else {
            throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!saw_header) throw ParseError(lineno, "missing header 'mct 1'");
    if (!n) throw ParseError(lineno, "missing 'n' directive");
    if (parts_assigned != 0 && parts_assigned != *n)
        throw ParseError(lineno, "partition covers " + std::to_string(parts_assigned) +
                                     " of " + std::to_string(*n) + " vertices");

    ParsedCertificate cert{ColoredGraph(*n, std::move(classes)), std::nullopt};
    if (parts_assigned == *n && *n > 0) cert.partition = BlowupPartition{std::move(part_of)};
    return cert;
}

inline std::string render_certificate(const ColoredGraph& g,
                                      const std::optional<BlowupPartition>& partition = std::nullopt) {
    std::ostringstream out;
    out << "mct 1\n";
    out << "n " << g.n() << "\n";
    for (const CycleTuple& c : g.classes()) {
        out << "cycle";
        for (int v : c) out << ' ' << v;
        out << "\n";
    }
    if (partition)
        for (int v = 0; v < g.n(); ++v)
            out << "part " << v << ' ' << partition->part_of[v] + 1 << "\n";
    return out.str();
}

// Best-effort Graphviz rendering; class index doubles as the edge label.
inline std::string render_dot(const ColoredGraph& g) {
    std::ostringstream out;
    out << "graph mct {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges())
        out << "  " << e.u << " -- " << e.v << " [label=" << g.edge_color(e.u, e.v)
            << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace mct
