#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/pair_graph.hpp"
#include "hm/partition_certificate.hpp"
#include "hm/vertex_set.hpp"

namespace hm {

/// 2-graph on all of 1..n joining u,v whenever some edge of h contains both.
/// Its independent sets are exactly the candidate S sides for the ell=2
/// containment test.
inline PairGraph cooccurrence_graph(const Hypergraph3& h) {
    const int n = h.vertex_count();
    PairGraph g = PairGraph::on_all(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (h.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

namespace detail {

/// Maximum independent set by branch and bound with a greedy clique-cover
/// bound (a greedy coloring of the complement); subtree sizes are memoized
/// on the candidate word when the universe fits one.
class MisSolver {
public:
    explicit MisSolver(PairGraph g) : g_(std::move(g)), n_(g_.vertex_count()) {}

    int size(const VertexSet& candidates) { return search(candidates); }

    /// The lexicographically smallest maximum independent set, found by
    /// forcing vertices in ascending order.
    VertexSet lex_maximum() {
        VertexSet chosen(n_);
        VertexSet pool = g_.universe();
        const int alpha = search(pool);
        int have = 0;
        for (int v = 1; v <= n_; ++v) {
            if (!pool.contains(v)) continue;
            VertexSet next = pool - g_.neighbors(v);
            next.erase(v);
            if (have + 1 + search(next) == alpha) {
                chosen.insert(v);
                ++have;
                pool = next;
            } else {
                pool.erase(v);
            }
        }
        return chosen;
    }

private:
    int clique_cover_bound(const VertexSet& pool) const {
        std::vector<VertexSet> cliques;
        pool.for_each([&](int v) {
            for (auto& c : cliques)
                if (c.is_subset_of(g_.neighbors(v))) {
                    c.insert(v);
                    return;
                }
            VertexSet c(n_);
            c.insert(v);
            cliques.push_back(std::move(c));
        });
        return int(cliques.size());
    }

    int search(const VertexSet& pool) {
        if (pool.empty()) return 0;
        const bool memoizable = n_ <= 64;
        if (memoizable)
            if (auto it = memo_.find(pool.word()); it != memo_.end()) return it->second;

        const int ub = clique_cover_bound(pool);

        // branch on the pool vertex with the most pool neighbors
        int v = 0, vdeg = -1;
        pool.for_each([&](int u) {
            const int d = (g_.neighbors(u) & pool).count();
            if (d > vdeg) {
                v = u;
                vdeg = d;
            }
        });

        VertexSet take = pool - g_.neighbors(v);
        take.erase(v);
        int value = 1 + search(take);
        if (value < ub) {
            VertexSet skip = pool;
            skip.erase(v);
            value = std::max(value, search(skip));
        }
        if (memoizable && memo_.size() < (std::size_t(1) << 22)) memo_.emplace(pool.word(), value);
        return value;
    }

    PairGraph g_;
    int n_;
    std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

/// Containment in the ell=2 family: some S of size >= n-2s+1 such that no
/// edge has two vertices in S, i.e. S independent in the co-occurrence
/// graph. The certificate uses the lexicographically smallest maximum such
/// S, truncated to exactly n-2s+1 vertices.
inline std::optional<PartitionCertificate> is_subgraph_of_H2(const Hypergraph3& h, int s) {
    const int n = h.vertex_count();
    if (s < 1 || 3 * s > n)
        throw std::invalid_argument("is_subgraph_of_H2: requires 1 <= s and 3s <= n");
    const int target = n - 2 * s + 1;

    detail::MisSolver mis(cooccurrence_graph(h));
    const VertexSet smax = mis.lex_maximum();
    if (smax.count() < target) return std::nullopt;

    PartitionCertificate cert;
    cert.ell = 2;
    cert.s = s;
    cert.S = VertexSet(n);
    int kept = 0;
    smax.for_each([&](int v) {
        if (kept < target) {
            cert.S.insert(v);
            ++kept;
        }
    });
    cert.T = cert.S.complement();
    return cert;
}

namespace detail {

inline bool cover_search(const Hypergraph3& h, VertexSet& t, int depth_left) {
    const Triple* uncovered = nullptr;
    for (const Triple& e : h.edges()) {
        if (!t.contains(e[0]) && !t.contains(e[1]) && !t.contains(e[2])) {
            uncovered = &e;
            break;
        }
    }
    if (!uncovered) return true;
    if (depth_left == 0) return false;
    for (int v : *uncovered) {
        t.insert(v);
        if (cover_search(h, t, depth_left - 1)) return true;
        t.erase(v);
    }
    return false;
}

}  // namespace detail

/// Containment in the ell=1 family: some T of size s-1 meeting every edge.
/// Exact vertex-cover style branching on an uncovered edge's three vertices.
inline std::optional<PartitionCertificate> is_subgraph_of_H1(const Hypergraph3& h, int s) {
    const int n = h.vertex_count();
    if (s < 1 || s - 1 > n) throw std::invalid_argument("is_subgraph_of_H1: bad s");
    VertexSet t(n);
    if (!detail::cover_search(h, t, s - 1)) return std::nullopt;
    for (int v = 1; v <= n && t.count() < s - 1; ++v)
        if (!t.contains(v)) t.insert(v);

    PartitionCertificate cert;
    cert.ell = 1;
    cert.s = s;
    cert.T = t;
    cert.S = t.complement();
    return cert;
}

/// Containment in the ell=3 family: the non-isolated vertices fit inside
/// 3s-1 vertices.
inline std::optional<PartitionCertificate> is_subgraph_of_H3(const Hypergraph3& h, int s) {
    const int n = h.vertex_count();
    if (s < 1 || 3 * s - 1 > n) throw std::invalid_argument("is_subgraph_of_H3: bad s");
    VertexSet t = h.support();
    if (t.count() > 3 * s - 1) return std::nullopt;
    for (int v = 1; v <= n && t.count() < 3 * s - 1; ++v)
        if (!t.contains(v)) t.insert(v);

    PartitionCertificate cert;
    cert.ell = 3;
    cert.s = s;
    cert.T = t;
    cert.S = t.complement();
    return cert;
}

}  // namespace hm
