#include "kdom/coverage.hpp"

#include <stdexcept>
#include <string>

namespace kdom {

CoverageState::CoverageState(const Graph& g, int k) : graph_(&g), k_(k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const std::size_t n = g.vertex_count();
    in_d_.assign(n, 0);
    cov_.assign(n, 0);
    undom_nbrs_.resize(n);
    for (Vertex v = 0; v < n; ++v)
        undom_nbrs_[v] = static_cast<std::int32_t>(g.degree(v));
    deficient_ = static_cast<std::int64_t>(n);  // every vertex starts uncovered
}

void CoverageState::add_vertex(Vertex u) {
    require_outside(u);
    objective_ += gain(u);

    // u leaves the pool of vertices needing coverage.
    const bool u_was_deficient = cov_[u] < k_;
    in_d_[u] = 1;
    ++size_d_;
    if (u_was_deficient) {
        --deficient_;
        for (Vertex w : graph_->neighbors(u)) --undom_nbrs_[w];
    }

    // u now covers each neighbor once more.
    for (Vertex w : graph_->neighbors(u)) {
        ++cov_[w];
        if (!in_d_[w] && cov_[w] == k_) {
            // w just became dominated enough.
            --deficient_;
            for (Vertex x : graph_->neighbors(w)) --undom_nbrs_[x];
        }
    }
}

std::vector<Vertex> CoverageState::solution() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size_d_));
    for (Vertex v = 0; v < in_d_.size(); ++v)
        if (in_d_[v]) out.push_back(v);
    return out;
}

Vertex CoverageState::check(Vertex v) const {
    if (v >= in_d_.size()) throw std::out_of_range("vertex index " + std::to_string(v));
    return v;
}

void CoverageState::require_outside(Vertex u) const {
    if (in_d_[check(u)])
        throw std::invalid_argument("vertex " + graph_->label(u) + " is already in the solution");
}

bool is_k_dominating_set(const Graph& g, int k, std::span<const Vertex> members) {
    return domination_violations(g, k, members).empty();
}

std::vector<std::pair<Vertex, int>> domination_violations(const Graph& g, int k,
                                                          std::span<const Vertex> members) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> in_d(n, 0);
    for (Vertex v : members) {
        if (v >= n) throw std::out_of_range("member index " + std::to_string(v));
        if (in_d[v]) throw std::invalid_argument("duplicate member " + g.label(v));
        in_d[v] = 1;
    }
    std::vector<std::pair<Vertex, int>> violations;
    for (Vertex v = 0; v < n; ++v) {
        if (in_d[v]) continue;
        int c = 0;
        for (Vertex w : g.neighbors(v))
            if (in_d[w]) ++c;
        if (c < k) violations.emplace_back(v, c);
    }
    return violations;
}

}  // namespace kdom
