#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hm/pair_graph.hpp"
#include "hm/vertex_set.hpp"

namespace hm {

/// An edge of a 3-uniform hypergraph, stored strictly increasing.
using Triple = std::array<int, 3>;

/// Sorts and validates a raw triple. Throws when two entries coincide.
inline Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("triple has a repeated vertex");
    return t;
}

inline std::string triple_to_string(const Triple& t) {
    return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

/// Minimum degree sum over adjacent vertex pairs. Empty when the hypergraph
/// has no edge (no two vertices are adjacent), so theorem predicates can
/// treat that case explicitly instead of comparing a sentinel.
using Sigma2Value = std::optional<int>;

inline long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline long long choose3(long long n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

/// Immutable 3-uniform hypergraph on vertices 1..n.
///
/// Construction canonicalizes (sorts, deduplicates) the edge list and builds
/// three indices: per-vertex incident edge ids, per-pair codegree
/// neighborhoods, and an edge-presence bitset over the C(n,3) triple space.
/// All queries are read-only and safe to run concurrently.
class Hypergraph3 {
public:
    explicit Hypergraph3(int n) : Hypergraph3(n, {}) {}

    Hypergraph3(int n, std::span<const Triple> triples) : n_(n) {
        if (n < 1) throw std::invalid_argument("Hypergraph3: vertex count must be positive");
        edges_.reserve(triples.size());
        for (const Triple& raw : triples) {
            Triple t = make_triple(raw[0], raw[1], raw[2]);
            if (t[0] < 1 || t[2] > n_)
                throw std::out_of_range("Hypergraph3: vertex out of range in edge " +
                                        triple_to_string(raw));
            edges_.push_back(t);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        build_indices();
    }

    Hypergraph3(int n, std::initializer_list<Triple> triples)
        : Hypergraph3(n, std::span<const Triple>(triples.begin(), triples.size())) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(const Triple& raw) const {
        Triple t = make_triple(raw[0], raw[1], raw[2]);
        if (t[0] < 1 || t[2] > n_) return false;
        const std::size_t r = triple_rank(t);
        return (triple_bits_[r >> 6] >> (r & 63)) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        return degree_[v - 1];
    }

    /// Edge ids (indices into edges()) incident to v, ascending.
    std::span<const int> incident_edges(int v) const {
        check_vertex(v);
        return {inc_edges_.data() + inc_offsets_[v - 1],
                inc_edges_.data() + inc_offsets_[v]};
    }

    /// All w with {u,v,w} an edge.
    const VertexSet& codegree_set(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("codegree_set: vertices must differ");
        return pair_codeg_[pair_rank(u, v)];
    }

    bool adjacent(int u, int v) const { return !codegree_set(u, v).empty(); }

    Sigma2Value sigma2() const {
        std::optional<int> best;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v) {
                if (pair_codeg_[pair_rank(u, v)].empty()) continue;
                const int s = degree_[u - 1] + degree_[v - 1];
                if (!best || s < *best) best = s;
            }
        return best;
    }

    /// Minimum degree over all ell-element vertex sets, ell in {1,2}.
    int delta_ell(int ell) const {
        if (ell != 1 && ell != 2) throw std::invalid_argument("delta_ell: ell must be 1 or 2");
        if (n_ < ell) throw std::invalid_argument("delta_ell: universe smaller than ell");
        if (ell == 1) {
            int m = degree_[0];
            for (int v = 2; v <= n_; ++v) m = std::min(m, degree_[v - 1]);
            return m;
        }
        int m = -1;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v) {
                const int c = pair_codeg_[pair_rank(u, v)].count();
                if (m < 0 || c < m) m = c;
            }
        return m;
    }

    /// Link of v inside A: pairs {u,w} in A with {u,v,w} an edge.
    PairGraph link(int v, const VertexSet& a) const {
        check_vertex(v);
        if (a.contains(v)) throw std::invalid_argument("link: v must not lie in A");
        PairGraph g(n_, a);
        for (int e : incident_edges(v)) {
            auto [x, y] = other_two(edges_[e], v);
            if (a.contains(x) && a.contains(y)) g.add_edge(x, y);
        }
        return g;
    }

    /// Bipartite link of v across disjoint A and B.
    PairGraph link_bipartite(int v, const VertexSet& a, const VertexSet& b) const {
        check_vertex(v);
        if (a.contains(v) || b.contains(v))
            throw std::invalid_argument("link_bipartite: v must not lie in A or B");
        if (a.intersects(b)) throw std::invalid_argument("link_bipartite: A and B must be disjoint");
        PairGraph g(n_, a | b);
        for (int e : incident_edges(v)) {
            auto [x, y] = other_two(edges_[e], v);
            if ((a.contains(x) && b.contains(y)) || (a.contains(y) && b.contains(x)))
                g.add_edge(x, y);
        }
        return g;
    }

    /// Number of edges admitting an assignment v1,v2,v3 with vi in Vi.
    /// Sets may overlap; an edge counts once however many assignments exist.
    int count_edges_of_type(const VertexSet& v1, const VertexSet& v2,
                            const VertexSet& v3) const {
        int count = 0;
        for (const Triple& e : edges_)
            if (edge_has_type(e, v1, v2, v3)) ++count;
        return count;
    }

    static bool edge_has_type(const Triple& e, const VertexSet& v1, const VertexSet& v2,
                              const VertexSet& v3) {
        static constexpr int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perm)
            if (v1.contains(e[p[0]]) && v2.contains(e[p[1]]) && v3.contains(e[p[2]]))
                return true;
        return false;
    }

    VertexSet isolated_vertices() const {
        VertexSet s(n_);
        for (int v = 1; v <= n_; ++v)
            if (degree_[v - 1] == 0) s.insert(v);
        return s;
    }

    VertexSet support() const {
        VertexSet s(n_);
        for (int v = 1; v <= n_; ++v)
            if (degree_[v - 1] > 0) s.insert(v);
        return s;
    }

    VertexSet edge_vertices(int edge_id) const {
        VertexSet s(n_);
        for (int v : edges_[edge_id]) s.insert(v);
        return s;
    }

    Hypergraph3 with_edge(const Triple& t) const {
        std::vector<Triple> es = edges_;
        es.push_back(make_triple(t[0], t[1], t[2]));
        return Hypergraph3(n_, es);
    }

    /// Rebuilds every index from the edge list and compares; used by
    /// consistency checks.
    bool indices_consistent() const {
        Hypergraph3 fresh(n_, edges_);
        return fresh.degree_ == degree_ && fresh.inc_offsets_ == inc_offsets_ &&
               fresh.inc_edges_ == inc_edges_ && fresh.pair_codeg_ == pair_codeg_ &&
               fresh.triple_bits_ == triple_bits_;
    }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("Hypergraph3: vertex out of range");
    }

    static std::pair<int, int> other_two(const Triple& e, int v) {
        if (e[0] == v) return {e[1], e[2]};
        if (e[1] == v) return {e[0], e[2]};
        return {e[0], e[1]};
    }

    /// Rank of an unordered pair u != v within C(n,2), zero-based.
    std::size_t pair_rank(int u, int v) const {
        int i = u - 1, j = v - 1;
        if (i > j) std::swap(i, j);
        return std::size_t(i) * (2 * n_ - i - 1) / 2 + std::size_t(j - i - 1);
    }

    /// Colex rank of a sorted triple within C(n,3), zero-based.
    static std::size_t triple_rank(const Triple& t) {
        const long long i = t[0] - 1, j = t[1] - 1, k = t[2] - 1;
        return std::size_t(i + choose2(j) + choose3(k));
    }

    void build_indices() {
        degree_.assign(n_, 0);
        for (const Triple& e : edges_)
            for (int v : e) ++degree_[v - 1];

        inc_offsets_.assign(n_ + 1, 0);
        for (int v = 1; v <= n_; ++v) inc_offsets_[v] = inc_offsets_[v - 1] + degree_[v - 1];
        inc_edges_.assign(inc_offsets_[n_], 0);
        std::vector<int> cursor(inc_offsets_.begin(), inc_offsets_.end() - 1);
        for (int e = 0; e < int(edges_.size()); ++e)
            for (int v : edges_[e]) inc_edges_[cursor[v - 1]++] = e;

        pair_codeg_.assign(std::size_t(choose2(n_)), VertexSet(n_));
        for (const Triple& e : edges_) {
            pair_codeg_[pair_rank(e[0], e[1])].insert(e[2]);
            pair_codeg_[pair_rank(e[0], e[2])].insert(e[1]);
            pair_codeg_[pair_rank(e[1], e[2])].insert(e[0]);
        }

        triple_bits_.assign((std::size_t(choose3(n_)) + 63) / 64, 0);
        for (const Triple& e : edges_) {
            const std::size_t r = triple_rank(e);
            triple_bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
        }
    }

    int n_;
    std::vector<Triple> edges_;
    std::vector<int> degree_;
    std::vector<int> inc_offsets_;
    std::vector<int> inc_edges_;
    std::vector<VertexSet> pair_codeg_;
    std::vector<std::uint64_t> triple_bits_;
};

/// All triples over 1..n in lexicographic order; the bit order used by
/// exhaustive campaigns.
inline std::vector<Triple> all_triples(int n) {
    std::vector<Triple> out;
    out.reserve(std::size_t(choose3(n)));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
    return out;
}

}  // namespace hm
