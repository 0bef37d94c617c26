#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kdom {

using Vertex = std::uint32_t;

/// Immutable simple undirected graph with dense vertex indices.
///
/// Adjacency lists are kept sorted. Construction rejects self-loops and
/// duplicate vertex labels; parallel edges collapse. Once built, a Graph
/// never changes and can be shared freely across threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` vertices labelled "0".."n-1".
    static Graph from_edges(std::size_t n,
                            std::span<const std::pair<Vertex, Vertex>> edges);

    /// Builds a graph whose vertex `i` carries `labels[i]`. Labels must be
    /// pairwise distinct; edges may repeat but self-loops throw.
    static Graph from_edges(std::vector<std::string> labels,
                            std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

    /// Sorted open neighborhood N(v).
    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }

    /// |N(v)|. Throws std::out_of_range for an invalid index.
    std::size_t degree(Vertex v) const {
        check_vertex(v);
        return offsets_[v + 1] - offsets_[v];
    }

    /// Position of v's first neighbor in the flat CSR array. Lets parallel
    /// per-edge attributes (e.g. street lengths) align with neighbors(v).
    std::size_t adjacency_offset(Vertex v) const {
        check_vertex(v);
        return offsets_[v];
    }

    bool has_edge(Vertex u, Vertex v) const;

    const std::string& label(Vertex v) const {
        check_vertex(v);
        return labels_[v];
    }

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Dense index for an external name, if known.
    std::optional<Vertex> index_of(std::string_view label) const;

    /// All edges as index pairs with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Re-checks the representation invariants (no self-loops, no duplicates,
    /// symmetry, label bijection). Throws std::logic_error on violation.
    void validate() const;

private:
    void check_vertex(Vertex v) const;
    void build_label_index();

    // CSR adjacency: neighbors of v live in neighbors_[offsets_[v] .. offsets_[v+1]).
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbors_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> label_to_index_;
};

}  // namespace kdom
