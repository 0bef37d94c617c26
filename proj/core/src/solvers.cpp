#include "kdom/solvers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kdom {

namespace {

void validate_config(const SolveConfig& cfg, bool uses_beam) {
    if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
    if (uses_beam && cfg.beam_width < 1) throw std::invalid_argument("beam width must be >= 1");
}

void verify_result(const Graph& g, int k, const std::vector<Vertex>& members) {
    if (!is_k_dominating_set(g, k, members))
        throw std::logic_error("solver returned a set that is not k-dominating");
}

/// One expansion candidate: beam entry `parent` extended by `added`.
struct ChildRef {
    std::uint32_t parent = 0;
    Vertex added = 0;
    std::size_t insert_pos = 0;  // where `added` lands in the parent's members
    std::int64_t objective = 0;
    std::uint64_t tie_key = 0;
};

/// Lexicographic comparison of the child member sets (parent ∪ {added})
/// without materializing them. Entries of one round all have equal length.
int compare_child_sets(const Beam& beam, const ChildRef& a, const ChildRef& b) {
    const auto& ma = beam[a.parent].members;
    const auto& mb = beam[b.parent].members;
    const std::size_t len = ma.size() + 1;
    for (std::size_t i = 0; i < len; ++i) {
        const Vertex xa = i < a.insert_pos ? ma[i] : (i == a.insert_pos ? a.added : ma[i - 1]);
        const Vertex xb = i < b.insert_pos ? mb[i] : (i == b.insert_pos ? b.added : mb[i - 1]);
        if (xa != xb) return xa < xb ? -1 : 1;
    }
    return 0;
}

/// Expands every beam entry by one vertex in all ways, removes duplicate
/// member sets, and draws one tie key per surviving candidate. Candidates
/// are produced by a k-way merge in canonical (lexicographic) member-set
/// order, which makes duplicates adjacent and fixes the RNG draw order
/// independently of how entries were expanded.
std::vector<ChildRef> expand_and_dedup(const Graph& g, const Beam& beam, Rng& rng) {
    const std::size_t n = g.vertex_count();

    struct Cursor {
        std::uint32_t parent;
        Vertex next = 0;                // next candidate vertex, skipping members
        std::size_t member_pos = 0;     // members consumed so far (== insert_pos)
        bool exhausted = false;
    };
    auto advance = [&](Cursor& c) {
        const auto& members = beam[c.parent].members;
        while (c.next < n || c.member_pos < members.size()) {
            if (c.member_pos < members.size() && members[c.member_pos] == c.next) {
                ++c.member_pos;
                ++c.next;
                continue;
            }
            if (c.next >= n) break;
            return;  // c.next is a non-member candidate
        }
        c.exhausted = true;
    };

    std::vector<Cursor> cursors;
    cursors.reserve(beam.size());
    for (std::uint32_t p = 0; p < beam.size(); ++p) {
        Cursor c{p};
        advance(c);
        if (!c.exhausted) cursors.push_back(c);
    }

    auto ref_of = [&](const Cursor& c) {
        return ChildRef{c.parent, c.next, c.member_pos,
                        beam[c.parent].objective_value + beam[c.parent].state.gain(c.next), 0};
    };

    std::vector<ChildRef> out;
    out.reserve(cursors.size() * n);
    bool have_prev = false;
    ChildRef prev{};
    while (!cursors.empty()) {
        // smallest head in canonical child order
        std::size_t best = 0;
        ChildRef best_ref = ref_of(cursors[0]);
        for (std::size_t i = 1; i < cursors.size(); ++i) {
            ChildRef ref = ref_of(cursors[i]);
            if (compare_child_sets(beam, ref, best_ref) < 0) {
                best = i;
                best_ref = ref;
            }
        }
        // equal sets imply equal objective, so a cheap mismatch skips the walk
        const bool duplicate = have_prev && prev.objective == best_ref.objective &&
                               compare_child_sets(beam, prev, best_ref) == 0;
        if (!duplicate) {
            best_ref.tie_key = rng();
            out.push_back(best_ref);
            prev = best_ref;
            have_prev = true;
        }
        Cursor& c = cursors[best];
        ++c.next;
        advance(c);
        if (c.exhausted) cursors.erase(cursors.begin() + best);
    }
    return out;
}

}  // namespace

std::vector<Vertex> greedy_k_domination(const Graph& g, const SolveConfig& cfg,
                                        const StepObserver& observe) {
    validate_config(cfg, false);
    const std::size_t n = g.vertex_count();
    CoverageState state(g, cfg.k);
    Rng rng(cfg.seed);

    while (!state.is_k_dominating()) {
        bool have = false;
        Vertex best_u = 0;
        std::int64_t best_gain = std::numeric_limits<std::int64_t>::min();
        std::uint64_t best_key = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (state.in_solution(u)) continue;
            // One draw per candidate, in index order. The minimum key inside
            // the argmax set is uniform over it, and the consumption pattern
            // matches beam search with width one.
            const std::uint64_t key = rng();
            const std::int64_t gain = state.gain(u);
            if (!have || gain > best_gain || (gain == best_gain && key < best_key)) {
                have = true;
                best_u = u;
                best_gain = gain;
                best_key = key;
            }
        }
        if (!have) throw std::logic_error("no candidate despite unsatisfied vertices");
        if (observe) observe(state, best_u);
        state.add_vertex(best_u);
    }

    auto members = state.solution();
    verify_result(g, cfg.k, members);
    return members;
}

std::vector<Vertex> beam_k_domination(const Graph& g, const SolveConfig& cfg,
                                      const BeamObserver& observe) {
    validate_config(cfg, true);
    const std::size_t n = g.vertex_count();
    if (n == 0) return {};
    Rng rng(cfg.seed);

    Beam beam;
    beam.push_back({{}, 0, CoverageState(g, cfg.k)});

    for (int round = 1; round <= static_cast<int>(n); ++round) {
        std::vector<ChildRef> candidates = expand_and_dedup(g, beam, rng);
        if (candidates.empty()) throw std::logic_error("beam expansion produced no candidates");

        std::sort(candidates.begin(), candidates.end(),
                  [](const ChildRef& a, const ChildRef& b) {
                      if (a.objective != b.objective) return a.objective > b.objective;
                      if (a.tie_key != b.tie_key) return a.tie_key < b.tie_key;
                      return std::pair(a.parent, a.added) < std::pair(b.parent, b.added);
                  });
        if (candidates.size() > static_cast<std::size_t>(cfg.beam_width))
            candidates.resize(static_cast<std::size_t>(cfg.beam_width));

        Beam next;
        next.reserve(candidates.size());
        for (const ChildRef& c : candidates) {
            const PartialSolution& parent = beam[c.parent];
            PartialSolution child{parent.members, c.objective, parent.state};
            child.members.insert(child.members.begin() + static_cast<std::ptrdiff_t>(c.insert_pos),
                                 c.added);
            child.state.add_vertex(c.added);
            next.push_back(std::move(child));
        }
        beam = std::move(next);

        if (observe) observe(round, beam);

        for (const PartialSolution& s : beam) {
            if (s.state.is_k_dominating()) {
                verify_result(g, cfg.k, s.members);
                return s.members;
            }
        }
    }
    throw std::logic_error("beam search exceeded the vertex-count round bound");
}

std::vector<Vertex> gain_argmax(const CoverageState& state) {
    const std::size_t n = state.graph().vertex_count();
    std::vector<Vertex> best;
    std::int64_t best_gain = std::numeric_limits<std::int64_t>::min();
    for (Vertex u = 0; u < n; ++u) {
        if (state.in_solution(u)) continue;
        const std::int64_t gain = state.gain(u);
        if (gain > best_gain) {
            best_gain = gain;
            best.clear();
        }
        if (gain == best_gain) best.push_back(u);
    }
    return best;
}

}  // namespace kdom
