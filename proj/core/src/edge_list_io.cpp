#include "kdom/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace kdom {

namespace {

struct LineTokens {
    std::size_t line_no;
    std::vector<std::string> tokens;
};

std::vector<LineTokens> tokenize(std::istream& in) {
    std::vector<LineTokens> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tok(line);
        LineTokens lt{line_no, {}};
        std::string t;
        while (tok >> t) lt.tokens.push_back(std::move(t));
        if (!lt.tokens.empty()) out.push_back(std::move(lt));
    }
    return out;
}

double parse_weight(const std::string& token, std::size_t line_no) {
    double w = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, w);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line_no, "weight '" + token + "' is not a number");
    if (!(w > 0.0) || !std::isfinite(w))
        throw ParseError(line_no, "weight '" + token + "' must be positive");
    return w;
}

class VertexInterner {
public:
    Vertex intern(const std::string& name) {
        auto [it, inserted] = index_.emplace(name, static_cast<Vertex>(labels_.size()));
        if (inserted) labels_.push_back(name);
        return it->second;
    }

    std::vector<std::string> take_labels() { return std::move(labels_); }

private:
    std::map<std::string, Vertex> index_;
    std::vector<std::string> labels_;
};

}  // namespace

Graph load_graph(std::istream& in) {
    VertexInterner names;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& [line_no, tokens] : tokenize(in)) {
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected 'u v', got " + std::to_string(tokens.size()) +
                                          " token(s)");
        Vertex u = names.intern(tokens[0]);
        Vertex v = names.intern(tokens[1]);
        if (u == v) throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(names.take_labels(), edges);
}

StreetNetwork load_street_network(std::istream& in) {
    VertexInterner names;
    std::vector<std::tuple<Vertex, Vertex, double>> edges;
    // Remember where each edge first appeared so weight conflicts name the line.
    std::map<std::pair<Vertex, Vertex>, std::pair<double, std::size_t>> seen;
    for (const auto& [line_no, tokens] : tokenize(in)) {
        if (tokens.size() != 3)
            throw ParseError(line_no, "expected 'u v w', got " + std::to_string(tokens.size()) +
                                          " token(s)");
        Vertex u = names.intern(tokens[0]);
        Vertex v = names.intern(tokens[1]);
        if (u == v) throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
        double w = parse_weight(tokens[2], line_no);
        auto key = std::minmax(u, v);
        auto [it, inserted] = seen.emplace(std::pair{key.first, key.second},
                                           std::pair{w, line_no});
        if (!inserted && it->second.first != w)
            throw ParseError(line_no,
                             "edge '" + tokens[0] + " " + tokens[1] + "' already has weight " +
                                 std::to_string(it->second.first) + " from line " +
                                 std::to_string(it->second.second));
        if (inserted) edges.emplace_back(u, v, w);
    }
    return StreetNetwork::from_edges(names.take_labels(), edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_graph(in);
}

StreetNetwork load_street_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_street_network(in);
}

std::string write_edge_list(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        std::string a = g.label(u);
        std::string b = g.label(v);
        if (b < a) std::swap(a, b);
        lines.emplace_back(std::move(a), std::move(b));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& [a, b] : lines) {
        out += a;
        out += ' ';
        out += b;
        out += '\n';
    }
    return out;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_edge_list(g);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace kdom
