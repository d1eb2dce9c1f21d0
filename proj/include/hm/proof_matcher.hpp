#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/matching.hpp"
#include "hm/solver.hpp"
#include "hm/vertex_set.hpp"

namespace hm {

/// Degree-threshold split: U holds the vertices with deg > s*n - (eps/2)*n^2,
/// W the rest. At desk scale U is frequently empty or everything; the
/// pipeline treats both as ordinary inputs.
struct DegreePartition {
    int s = 0;
    double epsilon = 0.0;
    double threshold = 0.0;
    VertexSet U;
    VertexSet W;
};

inline DegreePartition classify_UW(const Hypergraph3& h, int s, double epsilon) {
    const int n = h.vertex_count();
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("classify_UW: epsilon must lie in (0,1)");
    if (s < 1 || 3 * s > n) throw std::invalid_argument("classify_UW: requires 1 <= s <= n/3");

    DegreePartition part;
    part.s = s;
    part.epsilon = epsilon;
    part.threshold = double(s) * n - epsilon * double(n) * n / 2.0;
    part.U = VertexSet(n);
    part.W = VertexSet(n);
    for (int v = 1; v <= n; ++v)
        (double(h.degree(v)) > part.threshold ? part.U : part.W).insert(v);
    return part;
}

/// Vertices of W at or below the secondary threshold s*n - s^2/2 + gamma'*n^2.
/// Diagnostic report only; no pipeline step keys off it.
inline VertexSet w_prime(const Hypergraph3& h, const DegreePartition& part, double gamma_prime) {
    const double n = h.vertex_count();
    const double thr = double(part.s) * n - double(part.s) * part.s / 2.0 + gamma_prime * n * n;
    VertexSet out(h.vertex_count());
    part.W.for_each([&](int v) {
        if (double(h.degree(v)) <= thr) out.insert(v);
    });
    return out;
}

/// A matching with its W-meeting submatching and the five region sets the
/// augmentation arguments track.
struct OptimalMatchingState {
    Matching m;   // all edges
    Matching m1;  // edges meeting W
    Matching m2;  // edges inside U
    VertexSet u1;  // V(m1) & U
    VertexSet u2;  // V(m2)
    VertexSet u3;  // U - V(m)
    VertexSet w1;  // V(m1) & W
    VertexSet w2;  // W - w1
};

inline OptimalMatchingState build_state(const DegreePartition& part, const Matching& m) {
    const int n = part.U.universe_size();
    OptimalMatchingState st;
    st.m = m;
    st.m1 = Matching(n);
    st.m2 = Matching(n);
    for (const Triple& e : m.edges()) {
        const bool meets_w = part.W.contains(e[0]) || part.W.contains(e[1]) || part.W.contains(e[2]);
        (meets_w ? st.m1 : st.m2).try_add(e);
    }
    st.u1 = st.m1.covered() & part.U;
    st.u2 = st.m2.covered();
    st.u3 = part.U - m.covered();
    st.w1 = st.m1.covered() & part.W;
    st.w2 = part.W - st.w1;
    return st;
}

inline bool validate_state(const Hypergraph3& h, const DegreePartition& part,
                           const OptimalMatchingState& st) {
    if (!st.m.valid() || !st.m1.valid() || !st.m2.valid()) return false;
    if (!st.m.contained_in(h)) return false;
    if (st.m1.size() + st.m2.size() != st.m.size()) return false;
    for (const Triple& e : st.m.edges()) {
        const bool meets_w = part.W.contains(e[0]) || part.W.contains(e[1]) || part.W.contains(e[2]);
        const auto& side = meets_w ? st.m1 : st.m2;
        if (std::find(side.edges().begin(), side.edges().end(), e) == side.edges().end())
            return false;
    }
    if (st.u1 != (st.m1.covered() & part.U)) return false;
    if (st.u2 != st.m2.covered()) return false;
    if (!st.u2.is_subset_of(part.U)) return false;
    if (st.u3 != part.U - st.m.covered()) return false;
    if (st.w1 != (st.m1.covered() & part.W)) return false;
    if (st.w2 != part.W - st.w1) return false;
    return st.u1.count() + st.w1.count() == 3 * st.m1.size();
}

/// Required size of the W-covering matching: 3s - |U|, clamped at zero.
inline int covering_requirement(const DegreePartition& part) {
    return std::max(0, 3 * part.s - part.U.count());
}

/// Lexicographic objective: covering feasibility, then |M|, then |M1|.
struct MatchKey {
    bool feasible = false;
    int size = 0;
    int w_edges = 0;
    auto operator<=>(const MatchKey&) const = default;
};

inline MatchKey key_of(const DegreePartition& part, const Matching& m) {
    int w_edges = 0;
    for (const Triple& e : m.edges())
        if (part.W.contains(e[0]) || part.W.contains(e[1]) || part.W.contains(e[2])) ++w_edges;
    return {w_edges >= covering_requirement(part), m.size(), w_edges};
}

enum class CoverStatus { found, trivial, none, budget_exhausted };

struct CoveringResult {
    CoverStatus status = CoverStatus::trivial;
    std::optional<Matching> matching;  // set for found / trivial
    Matching best_partial;
    int required = 0;
    long long nodes = 0;
};

/// Searches for a matching of size 3s-|U| whose edges each contain exactly
/// one W-vertex, branching over W-vertices in ascending order and the
/// U-pairs of their links. Outside the 2s <= |U| <= 3s window the demand is
/// void and an empty matching is returned as trivially sufficient.
inline CoveringResult find_covering_matching(const Hypergraph3& h, const DegreePartition& part,
                                             long long node_budget = 10'000'000) {
    const int n = h.vertex_count();
    CoveringResult res;
    res.best_partial = Matching(n);
    res.required = covering_requirement(part);
    const int u_size = part.U.count();
    if (u_size < 2 * part.s || u_size > 3 * part.s) {
        res.status = CoverStatus::trivial;
        res.matching = Matching(n);
        return res;
    }
    if (res.required == 0) {
        res.status = CoverStatus::found;
        res.matching = Matching(n);
        return res;
    }

    const std::vector<int> w_list = part.W.to_vector();
    Matching cur(n);
    VertexSet avail_u = part.U;
    bool exhausted = false;

    auto rec = [&](auto&& self, std::size_t wi, int need) -> bool {
        if (need == 0) return true;
        if (exhausted) return false;
        if (++res.nodes > node_budget && node_budget > 0) {
            exhausted = true;
            return false;
        }
        if (w_list.size() - wi < std::size_t(need)) return false;
        const int w = w_list[wi];
        for (int e : h.incident_edges(w)) {
            const Triple& t = h.edges()[e];
            int u = 0, v = 0;
            if (t[0] == w) {
                u = t[1];
                v = t[2];
            } else if (t[1] == w) {
                u = t[0];
                v = t[2];
            } else {
                u = t[0];
                v = t[1];
            }
            if (!part.U.contains(u) || !part.U.contains(v)) continue;  // exactly one W vertex
            if (!avail_u.contains(u) || !avail_u.contains(v)) continue;
            cur.try_add(t);
            avail_u.erase(u);
            avail_u.erase(v);
            if (cur.size() > res.best_partial.size()) res.best_partial = cur;
            if (self(self, wi + 1, need - 1)) return true;
            cur.remove(t);
            avail_u.insert(u);
            avail_u.insert(v);
        }
        return self(self, wi + 1, need);
    };

    if (rec(rec, 0, res.required)) {
        res.status = CoverStatus::found;
        res.matching = cur;
    } else {
        res.status = exhausted ? CoverStatus::budget_exhausted : CoverStatus::none;
    }
    return res;
}

struct OptimalResult {
    OptimalMatchingState state;
    bool condition_i_feasible = false;
    bool proved = false;
    MatchKey key;
    int required = 0;
    long long nodes = 0;
};

/// Exact optimum under the lexicographic objective (covering feasibility,
/// |M|, |M1|) by depth-first search over edges in lexicographic order.
/// When no matching meets the covering demand the result degrades to the
/// plain (|M|, |M1|) optimum and is flagged infeasible.
inline OptimalResult optimal_matching(const Hypergraph3& h, const DegreePartition& part,
                                      long long node_budget = 10'000'000,
                                      const std::optional<Matching>& seed = std::nullopt) {
    const int n = h.vertex_count();
    const int k = covering_requirement(part);
    const auto& edges = h.edges();
    const int m_edges = int(edges.size());

    std::vector<VertexSet> masks;
    masks.reserve(m_edges);
    std::vector<char> meets_w(m_edges, 0);
    for (int e = 0; e < m_edges; ++e) {
        masks.push_back(h.edge_vertices(e));
        meets_w[e] = masks[e].intersects(part.W) ? 1 : 0;
    }

    MatchKey best_key{false, -1, -1};
    Matching best_m(n);
    auto consider = [&](const Matching& m) {
        MatchKey key = key_of(part, m);
        if (key > best_key) {
            best_key = key;
            best_m = m;
        }
    };
    consider(Matching(n));
    if (seed && seed->valid() && seed->contained_in(h)) consider(*seed);

    Matching cur(n);
    long long nodes = 0;
    bool exhausted = false;

    // Any key-optimal matching is maximal (adding an edge strictly raises the
    // key), so only maximal leaves need evaluating.
    auto rec = [&](auto&& self, int i, const VertexSet& avail, int w_edges) -> void {
        if (exhausted) return;
        if (++nodes > node_budget && node_budget > 0) {
            exhausted = true;
            return;
        }
        int j = i;
        while (j < m_edges && !masks[j].is_subset_of(avail)) ++j;
        if (j == m_edges) {
            consider(cur);
            return;
        }
        // componentwise key bound for the whole suffix
        VertexSet active(n);
        for (int e = j; e < m_edges; ++e)
            if (masks[e].is_subset_of(avail)) active |= masks[e];
        const int extra = active.count() / 3;
        const int extra_w = std::min(extra, (active & part.W).count());
        const MatchKey ub{w_edges + extra_w >= k, cur.size() + extra, w_edges + extra_w};
        if (ub <= best_key) return;

        cur.try_add(edges[j]);
        self(self, j + 1, avail - masks[j], w_edges + meets_w[j]);
        cur.remove(edges[j]);
        self(self, j + 1, avail, w_edges);
    };
    rec(rec, 0, VertexSet::full(n), 0);

    OptimalResult res;
    res.state = build_state(part, best_m);
    res.condition_i_feasible = best_key.feasible;
    res.proved = !exhausted;
    res.key = best_key;
    res.required = k;
    res.nodes = nodes;
    return res;
}

/// One augmentation step. Move (a) adds a disjoint edge inside the uncovered
/// region U3 + W2; move (c) trades one matched edge for two disjoint edges
/// drawn from it plus the uncovered region, at least one touching W2; move
/// (b) is the same trade without the W2 requirement. Moves are tried in the
/// order a, c, b and the first one that strictly improves the objective is
/// applied.
inline std::optional<OptimalMatchingState> augment_once(const Hypergraph3& h,
                                                        const DegreePartition& part,
                                                        const OptimalMatchingState& st,
                                                        std::string* description = nullptr) {
    const int n = h.vertex_count();
    const MatchKey cur_key = key_of(part, st.m);
    const VertexSet uncovered = st.u3 | st.w2;

    auto finish = [&](Matching m, const std::string& what) {
        if (description) *description = what;
        return build_state(part, m);
    };

    // (a) add an edge inside the uncovered region
    for (int e = 0; e < h.edge_count(); ++e) {
        if (!h.edge_vertices(e).is_subset_of(uncovered)) continue;
        Matching next = st.m;
        next.try_add(h.edges()[e]);
        if (key_of(part, next) > cur_key)
            return finish(next, "add " + triple_to_string(h.edges()[e]));
    }

    // (c) then (b): replace one matched edge by two disjoint edges from
    // e + uncovered
    for (const bool require_w2 : {true, false}) {
        for (const Triple& removed : st.m.edges()) {
            VertexSet pool = uncovered;
            for (int v : removed) pool.insert(v);
            std::vector<int> inside;
            for (int e = 0; e < h.edge_count(); ++e)
                if (h.edge_vertices(e).is_subset_of(pool)) inside.push_back(e);
            for (std::size_t a = 0; a < inside.size(); ++a)
                for (std::size_t b = a + 1; b < inside.size(); ++b) {
                    const VertexSet ma = h.edge_vertices(inside[a]);
                    const VertexSet mb = h.edge_vertices(inside[b]);
                    if (ma.intersects(mb)) continue;
                    if (require_w2 && !ma.intersects(st.w2) && !mb.intersects(st.w2)) continue;
                    Matching next = st.m;
                    next.remove(removed);
                    next.try_add(h.edges()[inside[a]]);
                    next.try_add(h.edges()[inside[b]]);
                    if (key_of(part, next) > cur_key)
                        return finish(next, std::string(require_w2 ? "swap-w " : "swap ") +
                                                triple_to_string(removed) + " -> " +
                                                triple_to_string(h.edges()[inside[a]]) + " + " +
                                                triple_to_string(h.edges()[inside[b]]));
                }
        }
    }
    return std::nullopt;
}

struct GrowConfig {
    double epsilon = 0.05;
    bool hybrid = false;  // fall back to the exact solver when the pipeline stalls
    SolverConfig solver;
};

struct GrowResult {
    std::optional<Matching> matching;
    DegreePartition partition;
    CoveringResult cover;
    OptimalResult optimal;
    OptimalMatchingState final_state;  // after the augmentation loop
    int augment_iterations = 0;
    std::vector<std::string> move_log;
    bool used_exact_fallback = false;
};

/// The full pipeline: classify, find the W-covering matching, compute the
/// objective optimum, then run augmentation moves to a fixpoint. Returns the
/// first s edges when the final matching is large enough; in hybrid mode a
/// stalled pipeline falls back to the exact solver before giving up.
inline GrowResult grow_matching(const Hypergraph3& h, int s, const GrowConfig& cfg = {}) {
    const int n = h.vertex_count();
    GrowResult res;
    if (s <= 0) {
        res.matching = Matching(n);
        return res;
    }
    if (3 * s > n) return res;  // no s disjoint triples fit in n vertices

    res.partition = classify_UW(h, s, cfg.epsilon);
    res.cover = find_covering_matching(h, res.partition, cfg.solver.node_budget);
    res.optimal = optimal_matching(h, res.partition, cfg.solver.node_budget,
                                   res.cover.matching);

    OptimalMatchingState state = res.optimal.state;
    const int iter_cap = n / 3 + n + 1;
    while (res.augment_iterations < iter_cap) {
        std::string what;
        auto next = augment_once(h, res.partition, state, &what);
        if (!next) break;
        state = std::move(*next);
        res.move_log.push_back(what);
        ++res.augment_iterations;
    }
    res.final_state = state;

    if (state.m.size() >= s) {
        res.matching = state.m.truncated(s);
        return res;
    }
    if (cfg.hybrid) {
        MatchDecision d = has_matching_of_size(h, s, cfg.solver);
        if (d.found) {
            res.matching = *d.witness;
            res.used_exact_fallback = true;
        }
    }
    return res;
}

}  // namespace hm
