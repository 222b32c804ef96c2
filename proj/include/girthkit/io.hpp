#ifndef GIRTHKIT_IO_HPP
#define GIRTHKIT_IO_HPP

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "girthkit/graph.hpp"

namespace girthkit {

// Text graph format:
//   c <comment>
//   p <n> <m> <w|u>
//   e <tail> <head> [<weight>]     (weight present iff header says w)
// Vertices are 0-indexed. A weight of 0 is only accepted with
// allow_auxiliary and marks the edge auxiliary.
struct ReadOptions {
    bool allow_auxiliary = false;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
bool parse_int(std::string_view s, T& out) {
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace detail

inline DirectedGraph read_graph(std::istream& in, ReadOptions opts = {}) {
    std::string line;
    std::size_t lineno = 0, header_line = 0;
    bool have_header = false, weighted = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<bool> aux;
    std::set<std::pair<Vertex, Vertex>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (tok.size() != 4 || !detail::parse_int(tok[1], n) || !detail::parse_int(tok[2], m) ||
                (tok[3] != "w" && tok[3] != "u"))
                throw ParseError(lineno, "expected 'p <n> <m> <w|u>'");
            if (n >= kNoVertex) throw ParseError(lineno, "vertex count too large");
            weighted = tok[3] == "w";
            have_header = true;
            header_line = lineno;
            continue;
        }
        if (tok[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge before header");
            const std::size_t want = weighted ? 4 : 3;
            Edge e;
            if (tok.size() != want || !detail::parse_int(tok[1], e.tail) ||
                !detail::parse_int(tok[2], e.head) ||
                (weighted && !detail::parse_int(tok[3], e.weight)))
                throw ParseError(lineno, weighted ? "expected 'e <tail> <head> <weight>'"
                                                  : "expected 'e <tail> <head>'");
            if (e.tail >= n || e.head >= n) throw ParseError(lineno, "vertex out of range");
            if (e.tail == e.head) throw ParseError(lineno, "self-loop");
            if (e.weight < 0 || (e.weight == 0 && !opts.allow_auxiliary))
                throw ParseError(lineno, "non-positive weight");
            if (!seen.insert({e.tail, e.head}).second) throw ParseError(lineno, "duplicate edge");
            aux.push_back(e.weight == 0);
            edges.push_back(e);
            continue;
        }
        throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    }
    if (!have_header) throw ParseError(lineno + 1, "missing header");
    if (edges.size() != m)
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    return DirectedGraph::from_edges(n, std::move(edges), std::move(aux), weighted);
}

inline DirectedGraph read_graph(const std::string& path, ReadOptions opts = {}) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open " + path);
    return read_graph(in, opts);
}

inline DirectedGraph parse_graph(const std::string& text, ReadOptions opts = {}) {
    std::istringstream in(text);
    return read_graph(in, opts);
}

inline void write_graph(std::ostream& out, const DirectedGraph& g,
                        const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p " << g.n() << ' ' << g.m() << ' ' << (g.weighted() ? 'w' : 'u') << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.tail << ' ' << e.head;
        if (g.weighted()) out << ' ' << e.weight;
        out << '\n';
    }
}

inline void write_graph(const std::string& path, const DirectedGraph& g,
                        const std::vector<std::string>& comments = {}) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::IoError, "cannot write " + path);
    write_graph(out, g, comments);
    if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

inline std::string to_text(const DirectedGraph& g, const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    write_graph(out, g, comments);
    return out.str();
}

}  // namespace girthkit

#endif  // GIRTHKIT_IO_HPP
