#include "kdom/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdom {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    return from_edges(default_labels(n), edges);
}

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
    const std::size_t n = labels.size();

    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop on vertex " + labels[u]);
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    Graph g;
    g.labels_ = std::move(labels);
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adj[v].size();
    g.neighbors_.reserve(g.offsets_[n]);
    for (const auto& list : adj) g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
    g.build_label_index();
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nbrs = neighbors(u);
    check_vertex(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<Vertex> Graph::index_of(std::string_view label) const {
    auto it = label_to_index_.find(std::string(label));
    if (it == label_to_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    const std::size_t n = vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::validate() const {
    const std::size_t n = vertex_count();
    if (labels_.size() != n || label_to_index_.size() != n)
        throw std::logic_error("label map is not a bijection");
    for (Vertex v = 0; v < n; ++v) {
        auto it = label_to_index_.find(labels_[v]);
        if (it == label_to_index_.end() || it->second != v)
            throw std::logic_error("label map disagrees with labels");
        auto nbrs = neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            Vertex w = nbrs[i];
            if (w >= n) throw std::logic_error("neighbor index out of range");
            if (w == v) throw std::logic_error("self-loop at vertex " + labels_[v]);
            if (i > 0 && nbrs[i - 1] >= w)
                throw std::logic_error("adjacency list not sorted/deduplicated");
            auto back = neighbors(w);
            if (!std::binary_search(back.begin(), back.end(), v))
                throw std::logic_error("asymmetric edge " + labels_[v] + "-" + labels_[w]);
        }
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex index " + std::to_string(v));
}

void Graph::build_label_index() {
    label_to_index_.clear();
    label_to_index_.reserve(labels_.size());
    for (Vertex v = 0; v < labels_.size(); ++v) {
        auto [it, inserted] = label_to_index_.emplace(labels_[v], v);
        if (!inserted) throw std::invalid_argument("duplicate vertex label " + labels_[v]);
    }
}

}  // namespace kdom
