#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kdom/graph.hpp"
#include "kdom/street_network.hpp"

namespace kdom {

/// Parse failure in an edge-list stream; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reads an unweighted edge list: one `u v` pair per line, `#` starts a
/// comment, names are whitespace-free tokens mapped to dense indices in
/// first-appearance order. Duplicate edge lines collapse; self-loops throw.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

/// Reads a weighted edge list (`u v w`, w in meters, w > 0). Duplicate lines
/// must agree on the weight exactly; conflicts throw.
StreetNetwork load_street_network(std::istream& in);
StreetNetwork load_street_network_file(const std::string& path);

/// Canonical text form: one line per edge, endpoints in lexicographic label
/// order, lines sorted. Loading the result reproduces the graph (isolated
/// vertices excepted, as the format cannot express them).
std::string write_edge_list(const Graph& g);

void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace kdom
