#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gcolor/coloring.hpp"
#include "gcolor/graph.hpp"

namespace gcolor {

enum class GraphFormat { dimacs_col, edge_list };

struct ParseOptions {
    /// Remove degree-0 vertices after reading (relabeling the rest).
    bool drop_isolated = false;
    /// Non-fatal diagnostics, e.g. a declared edge count that does not match.
    std::vector<std::string>* warnings = nullptr;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line_no)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '"
                         + std::string(tok) + "'");
    return value;
}

inline void warn(const ParseOptions& opt, std::string msg)
{
    if (opt.warnings)
        opt.warnings->push_back(std::move(msg));
}

inline Graph finish(Graph g, const ParseOptions& opt)
{
    return opt.drop_isolated ? drop_isolated(g) : g;
}

inline Graph parse_dimacs(std::istream& in, const ParseOptions& opt)
{
    std::optional<std::uint64_t> n;
    std::uint64_t declared_m = 0;
    std::vector<Edge> edges;
    std::size_t edge_lines = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (n)
                throw InputError("line " + std::to_string(line_no) + ": second 'p' header");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "edges" && tok[1] != "col"))
                throw InputError("line " + std::to_string(line_no)
                                 + ": malformed header, expected 'p edge N M'");
            n = parse_uint(tok[2], line_no);
            declared_m = parse_uint(tok[3], line_no);
            if (*n > std::numeric_limits<Vertex>::max())
                throw InputError("vertex count too large");
            continue;
        }
        if (tok[0] == "e") {
            if (!n)
                throw InputError("line " + std::to_string(line_no) + ": edge before 'p' header");
            if (tok.size() != 3)
                throw InputError("line " + std::to_string(line_no) + ": malformed edge line");
            auto u = parse_uint(tok[1], line_no);
            auto v = parse_uint(tok[2], line_no);
            if (u < 1 || v < 1 || u > *n || v > *n)
                throw InputError("line " + std::to_string(line_no) + ": vertex index out of range 1.."
                                 + std::to_string(*n));
            ++edge_lines;
            if (u == v) {
                warn(opt, "line " + std::to_string(line_no) + ": self-loop ignored");
                continue;
            }
            edges.emplace_back(Vertex(u - 1), Vertex(v - 1));
            continue;
        }
        throw InputError("line " + std::to_string(line_no) + ": unknown line type '"
                         + std::string(tok[0]) + "'");
    }
    if (!n)
        throw InputError("empty input: no 'p edge N M' header");
    Graph g(*n, std::move(edges));
    if (edge_lines != declared_m)
        warn(opt, "header declares " + std::to_string(declared_m) + " edges, found "
                      + std::to_string(edge_lines) + " edge lines (" + std::to_string(g.size())
                      + " distinct)");
    return finish(std::move(g), opt);
}

/// Header comment understood by the edge-list reader: "# n=<N> base=<0|1>".
inline void read_edge_list_header(std::string_view comment, std::optional<std::uint64_t>& n,
                                  std::optional<int>& base)
{
    for (auto tok : split_ws(comment)) {
        if (tok.rfind("n=", 0) == 0)
            n = parse_uint(tok.substr(2), 0);
        else if (tok.rfind("base=", 0) == 0)
            base = int(parse_uint(tok.substr(5), 0));
    }
}

inline Graph parse_edge_list(std::istream& in, const ParseOptions& opt)
{
    std::optional<std::uint64_t> declared_n;
    std::optional<int> base;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        auto first = view.find_first_not_of(" \t\r");
        if (first == std::string_view::npos)
            continue;
        if (view[first] == '#' || view[first] == '%') {
            read_edge_list_header(view.substr(first + 1), declared_n, base);
            continue;
        }
        auto tok = split_ws(view);
        if (tok.size() < 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
        raw.emplace_back(parse_uint(tok[0], line_no), parse_uint(tok[1], line_no));
    }
    if (raw.empty() && !declared_n)
        throw InputError("empty input: no edges and no '# n=' header");
    std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t hi = 0;
    for (auto [u, v] : raw) {
        lo = std::min({lo, u, v});
        hi = std::max({hi, u, v});
    }
    if (base && *base != 0 && *base != 1)
        throw InputError("base must be 0 or 1");
    // No explicit base: a label 0 means 0-based, otherwise 1-based.
    int b = base ? *base : (raw.empty() || lo == 0 ? 0 : 1);
    if (!raw.empty() && lo < std::uint64_t(b))
        throw InputError("vertex label 0 in a 1-based edge list");
    std::uint64_t n = raw.empty() ? 0 : hi - std::uint64_t(b) + 1;
    if (declared_n) {
        if (*declared_n < n)
            throw InputError("vertex index out of range: header declares n=" + std::to_string(*declared_n));
        n = *declared_n;
    }
    if (n > std::numeric_limits<Vertex>::max())
        throw InputError("vertex count too large");
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) {
        if (u == v) {
            warn(opt, "self-loop on " + std::to_string(u) + " ignored");
            continue;
        }
        edges.emplace_back(Vertex(u - std::uint64_t(b)), Vertex(v - std::uint64_t(b)));
    }
    return finish(Graph(n, std::move(edges)), opt);
}

} // namespace detail

inline Graph parse_graph(std::istream& in, GraphFormat format, const ParseOptions& opt = {})
{
    return format == GraphFormat::dimacs_col ? detail::parse_dimacs(in, opt)
                                             : detail::parse_edge_list(in, opt);
}

inline Graph parse_graph(std::string_view text, GraphFormat format, const ParseOptions& opt = {})
{
    std::istringstream in{std::string(text)};
    return parse_graph(in, format, opt);
}

/// ".col" files are DIMACS, anything else is an edge list.
inline GraphFormat format_for_path(const std::string& path)
{
    auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".col")
        return GraphFormat::dimacs_col;
    return GraphFormat::edge_list;
}

inline Graph load_graph(const std::string& path, const ParseOptions& opt = {})
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open graph file '" + path + "'");
    return parse_graph(in, format_for_path(path), opt);
}

/// Writes "# n=<N> base=0" followed by one "u v" line per edge.
inline void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "# n=" << g.order() << " base=0\n";
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

inline void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

/// One color per line.
inline void write_coloring(std::ostream& out, const HardColoring& c)
{
    for (Color x : c.colors)
        out << x << '\n';
}

inline HardColoring read_coloring(std::istream& in, std::size_t k)
{
    std::vector<Color> colors;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tok = detail::split_ws(line);
        if (tok.empty())
            continue;
        colors.push_back(Color(detail::parse_uint(tok[0], line_no)));
    }
    if (k == 0) {
        k = 1;
        for (Color c : colors)
            k = std::max<std::size_t>(k, c + 1);
    }
    return HardColoring(std::move(colors), k);
}

/// CSV, one row of probabilities per vertex.
inline void write_soft_coloring(std::ostream& out, const SoftColoring& s)
{
    auto old = out.precision(17);
    for (Eigen::Index i = 0; i < s.probs.rows(); ++i) {
        for (Eigen::Index j = 0; j < s.probs.cols(); ++j)
            out << (j ? "," : "") << s.probs(i, j);
        out << '\n';
    }
    out.precision(old);
}

inline SoftColoring read_soft_coloring(std::istream& in)
{
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw InputError("ragged soft coloring CSV");
        rows.push_back(std::move(row));
    }
    Matrix p(Eigen::Index(rows.size()), Eigen::Index(rows.empty() ? 0 : rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            p(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
    return SoftColoring(std::move(p));
}

} // namespace gcolor
