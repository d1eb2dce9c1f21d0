#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hm/vertex_set.hpp"

namespace hm {

/// Simple 2-graph over an explicit vertex universe (a subset of 1..n).
/// Serves as the link graph L_v(A), the bipartite link L_v(A,B), the
/// co-occurrence graph, and the graphs handled by the lemma verifiers.
class PairGraph {
public:
    PairGraph() = default;

    PairGraph(int n, VertexSet universe) : n_(n), universe_(std::move(universe)) {
        if (universe_.universe_size() != n)
            throw std::invalid_argument("PairGraph: universe size mismatch");
        adj_.assign(n_, VertexSet(n_));
    }

    static PairGraph on_all(int n) { return PairGraph(n, VertexSet::full(n)); }

    int vertex_count() const { return n_; }
    const VertexSet& universe() const { return universe_; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("PairGraph: loops not allowed");
        if (!universe_.contains(u) || !universe_.contains(v))
            throw std::invalid_argument("PairGraph: endpoint outside universe");
        if (adj_[u - 1].contains(v)) return;
        adj_[u - 1].insert(v);
        adj_[v - 1].insert(u);
        ++edge_count_;
    }

    bool has_edge(int u, int v) const {
        return u != v && u >= 1 && u <= n_ && v >= 1 && v <= n_ && adj_[u - 1].contains(v);
    }

    int degree(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("PairGraph: vertex out of range");
        return adj_[v - 1].count();
    }

    const VertexSet& neighbors(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("PairGraph: vertex out of range");
        return adj_[v - 1];
    }

    int edge_count() const { return edge_count_; }

    /// Edges as sorted (u < v) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 1; u <= n_; ++u)
            adj_[u - 1].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

private:
    int n_ = 0;
    VertexSet universe_;
    std::vector<VertexSet> adj_;
    int edge_count_ = 0;
};

}  // namespace hm
