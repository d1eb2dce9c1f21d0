#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/vertex_set.hpp"

namespace hm {

/// A set of pairwise disjoint triples together with the vertices it covers.
/// Edges are kept in lexicographic order; `covered` always holds exactly
/// 3 * size() vertices.
class Matching {
public:
    Matching() = default;
    explicit Matching(int n) : covered_(n) {}

    static Matching from_edges(int n, std::span<const Triple> triples) {
        Matching m(n);
        for (const Triple& t : triples)
            if (!m.try_add(make_triple(t[0], t[1], t[2])))
                throw std::invalid_argument("Matching: edges are not pairwise disjoint");
        return m;
    }

    static Matching from_edges(int n, std::initializer_list<Triple> triples) {
        return from_edges(n, std::span<const Triple>(triples.begin(), triples.size()));
    }

    /// Adds an edge when it is disjoint from everything present.
    bool try_add(const Triple& t) {
        const int n = covered_.universe_size();
        if (t[0] < 1 || t[2] > n) throw std::out_of_range("Matching: vertex out of range");
        if (covered_.contains(t[0]) || covered_.contains(t[1]) || covered_.contains(t[2]))
            return false;
        edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), t), t);
        for (int v : t) covered_.insert(v);
        return true;
    }

    void remove(const Triple& t) {
        auto it = std::find(edges_.begin(), edges_.end(), t);
        if (it == edges_.end()) throw std::invalid_argument("Matching: edge not present");
        edges_.erase(it);
        for (int v : t) covered_.erase(v);
    }

    int size() const { return int(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }
    const VertexSet& covered() const { return covered_; }
    bool covers(int v) const { return covered_.contains(v); }

    /// First k edges in lexicographic order.
    Matching truncated(int k) const {
        Matching m(covered_.universe_size());
        for (int i = 0; i < k && i < size(); ++i) m.try_add(edges_[i]);
        return m;
    }

    /// Recomputes the disjointness certificate from scratch.
    bool valid() const {
        VertexSet seen(covered_.universe_size());
        for (const Triple& t : edges_)
            for (int v : t) {
                if (seen.contains(v)) return false;
                seen.insert(v);
            }
        return seen == covered_ && covered_.count() == 3 * size() &&
               std::is_sorted(edges_.begin(), edges_.end());
    }

    /// True when every edge belongs to H.
    bool contained_in(const Hypergraph3& h) const {
        for (const Triple& t : edges_)
            if (!h.has_edge(t)) return false;
        return true;
    }

    bool operator==(const Matching& o) const = default;

private:
    std::vector<Triple> edges_;
    VertexSet covered_;
};

}  // namespace hm
