#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hm/pair_graph.hpp"
#include "hm/rng.hpp"
#include "hm/vertex_set.hpp"

namespace hm {

/// n-balanced k-partite k-graph in per-part labels: a tuple's j-th entry is
/// a vertex of part j, numbered 1..part_size.
struct KPartiteKGraph {
    int k = 0;
    int part_size = 0;
    std::vector<std::vector<int>> tuples;

    KPartiteKGraph(int k_, int part_size_, std::vector<std::vector<int>> tuples_)
        : k(k_), part_size(part_size_), tuples(std::move(tuples_)) {
        if (k < 1 || part_size < 1) throw std::invalid_argument("KPartiteKGraph: bad sizes");
        for (const auto& t : tuples) {
            if (int(t.size()) != k) throw std::invalid_argument("KPartiteKGraph: tuple arity");
            for (int v : t)
                if (v < 1 || v > part_size)
                    throw std::invalid_argument("KPartiteKGraph: label out of range");
        }
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    }
};

inline bool tuples_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] == b[j]) return false;
    return true;
}

/// Exact search for s pairwise disjoint tuples.
inline bool has_disjoint_tuples(const KPartiteKGraph& g, int s) {
    if (s <= 0) return true;
    std::vector<const std::vector<int>*> chosen;
    auto rec = [&](auto&& self, std::size_t from, int need) -> bool {
        if (need == 0) return true;
        if (g.tuples.size() - from < std::size_t(need)) return false;
        for (std::size_t i = from; i < g.tuples.size(); ++i) {
            bool ok = true;
            for (const auto* c : chosen)
                if (!tuples_disjoint(*c, g.tuples[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(&g.tuples[i]);
            if (self(self, i + 1, need - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(rec, 0, s);
}

/// True when the instance does not violate the bound: either s disjoint
/// tuples exist or |F| <= (s-1) * n^(k-1).
inline bool check_AH_bound(const KPartiteKGraph& g, int s) {
    if (has_disjoint_tuples(g, s)) return true;
    long long cap = s - 1;
    for (int i = 0; i < g.k - 1; ++i) cap *= g.part_size;
    return static_cast<long long>(g.tuples.size()) <= cap;
}

/// Three 2-graphs on a common vertex set, optionally with the (A,B) split
/// the star-bound variant needs (B isolated in G1, every G2/G3 edge meets A).
struct GraphTriple {
    int n = 0;
    std::array<PairGraph, 3> g;
    std::optional<std::pair<VertexSet, VertexSet>> split;  // (A, B)

    explicit GraphTriple(int n_)
        : n(n_), g{PairGraph::on_all(n_), PairGraph::on_all(n_), PairGraph::on_all(n_)} {}
};

enum class LemmaVariant { L2, L3, L4K, L5 };

enum class CheckOutcome { holds, violated, inapplicable };

inline bool pair_edges_intersect(std::pair<int, int> a, std::pair<int, int> b) {
    return a.first == b.first || a.first == b.second || a.second == b.first ||
           a.second == b.second;
}

inline bool all_edges_intersect(const PairGraph& x, const PairGraph& y) {
    const auto ex = x.edge_list(), ey = y.edge_list();
    for (const auto& a : ex)
        for (const auto& b : ey)
            if (!pair_edges_intersect(a, b)) return false;
    return true;
}

/// The hypothesis predicate of each variant, exactly as stated.
inline bool hypothesis_holds(const GraphTriple& t, LemmaVariant variant) {
    switch (variant) {
        case LemmaVariant::L2:
            return t.n >= 4 && all_edges_intersect(t.g[0], t.g[1]) &&
                   all_edges_intersect(t.g[0], t.g[2]);
        case LemmaVariant::L3:
            return t.n >= 5 && all_edges_intersect(t.g[0], t.g[1]) &&
                   all_edges_intersect(t.g[0], t.g[2]) && all_edges_intersect(t.g[1], t.g[2]);
        case LemmaVariant::L4K:
            return t.n >= 4 && all_edges_intersect(t.g[0], t.g[1]) &&
                   all_edges_intersect(t.g[0], t.g[2]) && all_edges_intersect(t.g[1], t.g[2]);
        case LemmaVariant::L5: {
            if (!t.split) return false;
            const auto& [a_set, b_set] = *t.split;
            if (a_set.count() < 3 || b_set.count() < 1) return false;
            if (a_set.intersects(b_set)) return false;
            if ((a_set | b_set) != VertexSet::full(t.n)) return false;
            for (const auto& e : t.g[0].edge_list())
                if (b_set.contains(e.first) || b_set.contains(e.second)) return false;
            for (int i : {1, 2})
                for (const auto& e : t.g[i].edge_list())
                    if (!a_set.contains(e.first) && !a_set.contains(e.second)) return false;
            // no disjoint pair across G1 and G2 or G3
            for (const auto& e1 : t.g[0].edge_list())
                for (int i : {1, 2})
                    for (const auto& e2 : t.g[i].edge_list())
                        if (!pair_edges_intersect(e1, e2)) return false;
            // no disjoint G2/G3 pair touching B
            for (const auto& e2 : t.g[1].edge_list())
                for (const auto& e3 : t.g[2].edge_list())
                    if (!pair_edges_intersect(e2, e3) &&
                        (b_set.contains(e2.first) || b_set.contains(e2.second) ||
                         b_set.contains(e3.first) || b_set.contains(e3.second)))
                        return false;
            return true;
        }
    }
    return false;
}

inline int variant_probe_size(LemmaVariant v) { return v == LemmaVariant::L4K ? 2 : 3; }

/// Degree-sum check for one probe set. The probe is three distinct vertices
/// for L2/L3, two for L4K, and (u1, u2, v1) with u1,u2 in A and v1 in B for
/// L5. Returns `inapplicable` when the variant's hypothesis fails.
inline CheckOutcome check_intersecting_bound(const GraphTriple& t, LemmaVariant variant,
                                             const std::vector<int>& probe) {
    if (int(probe.size()) != variant_probe_size(variant))
        throw std::invalid_argument("check_intersecting_bound: bad probe size");
    for (int v : probe)
        if (v < 1 || v > t.n) throw std::invalid_argument("check_intersecting_bound: probe vertex");
    for (std::size_t i = 0; i < probe.size(); ++i)
        for (std::size_t j = i + 1; j < probe.size(); ++j)
            if (probe[i] == probe[j])
                throw std::invalid_argument("check_intersecting_bound: repeated probe vertex");
    if (variant == LemmaVariant::L5) {
        const auto& [a_set, b_set] = t.split ? *t.split
                                             : std::pair<VertexSet, VertexSet>{VertexSet(t.n),
                                                                               VertexSet(t.n)};
        if (!t.split || !a_set.contains(probe[0]) || !a_set.contains(probe[1]) ||
            !b_set.contains(probe[2]))
            throw std::invalid_argument("check_intersecting_bound: L5 probe must be (u1,u2,v1)");
    }
    if (!hypothesis_holds(t, variant)) return CheckOutcome::inapplicable;

    long long sum = 0;
    for (const auto& g : t.g)
        for (int v : probe) sum += g.degree(v);

    long long bound = 0;
    switch (variant) {
        case LemmaVariant::L2: bound = 6LL * (t.n - 1); break;
        case LemmaVariant::L3: bound = 3LL * (t.n + 1); break;
        case LemmaVariant::L4K: bound = 3LL * t.n; break;  // k*n with k = 3 graphs
        case LemmaVariant::L5: {
            const long long a = t.split->first.count();
            const long long b = t.split->second.count();
            bound = std::max(4 * a + 7, 3 * a + 2 * b + 5);
            break;
        }
    }
    return sum <= bound ? CheckOutcome::holds : CheckOutcome::violated;
}

// ---------------------------------------------------------------------------
// seeded generators: instances are grown edge by edge, rejecting any edge
// that would break the variant's hypothesis, so every emitted instance is
// hypothesis-satisfying and reproducible from the seed.

inline GraphTriple random_intersecting_triple(int n, LemmaVariant variant, std::mt19937_64& rng,
                                              int attempts = 0) {
    if (n < 2) throw std::invalid_argument("random_intersecting_triple: need at least 2 vertices");
    GraphTriple t(n);
    if (attempts <= 0) attempts = 3 * n;
    for (int it = 0; it < attempts; ++it) {
        const int gi = int(bounded(rng, 3));
        const int u = 1 + int(bounded(rng, std::uint64_t(n)));
        int v = 1 + int(bounded(rng, std::uint64_t(n - 1)));
        if (v >= u) ++v;
        if (t.g[gi].has_edge(u, v)) continue;
        GraphTriple trial = t;
        trial.g[gi].add_edge(u, v);
        if (hypothesis_holds(trial, variant)) t = std::move(trial);
    }
    return t;
}

inline GraphTriple random_split_triple(int a, int b, std::mt19937_64& rng, int attempts = 0) {
    if (a < 3 || b < 1) throw std::invalid_argument("random_split_triple: requires a >= 3, b >= 1");
    const int n = a + b;
    GraphTriple t(n);
    VertexSet a_set(n), b_set(n);
    for (int v = 1; v <= a; ++v) a_set.insert(v);
    for (int v = a + 1; v <= n; ++v) b_set.insert(v);
    t.split = {a_set, b_set};
    if (attempts <= 0) attempts = 4 * n;
    for (int it = 0; it < attempts; ++it) {
        const int gi = int(bounded(rng, 3));
        const int u = 1 + int(bounded(rng, std::uint64_t(n)));
        int v = 1 + int(bounded(rng, std::uint64_t(n - 1)));
        if (v >= u) ++v;
        if (t.g[gi].has_edge(u, v)) continue;
        GraphTriple trial = t;
        trial.g[gi].add_edge(u, v);
        if (hypothesis_holds(trial, LemmaVariant::L5)) t = std::move(trial);
    }
    return t;
}

inline KPartiteKGraph random_kpartite(int k, int part_size, double p, std::mt19937_64& rng) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> t(k, 1);
    for (;;) {
        if (chance(rng, p)) tuples.push_back(t);
        int j = k - 1;
        while (j >= 0 && t[j] == part_size) t[j--] = 1;
        if (j < 0) break;
        ++t[j];
    }
    return KPartiteKGraph(k, part_size, std::move(tuples));
}

// ---------------------------------------------------------------------------
// verification campaigns

struct LemmaParams {
    // k-partite variant
    int k = 3;
    int part_size = 2;
    int s = 2;
    // graph-triple variants
    int n = 6;
    int a = 3;
    int b = 1;
    int max_edges = 3;  // per graph, exhaustive sweeps
};

struct LemmaReport {
    std::string variant;
    bool exhaustive = false;
    long long instances = 0;
    long long applicable = 0;
    long long checks = 0;
    long long violations = 0;
    std::vector<std::string> violation_details;  // capped

    void record_violation(const std::string& what) {
        ++violations;
        if (violation_details.size() < 20) violation_details.push_back(what);
    }
};

namespace detail {

inline std::vector<std::vector<int>> all_probes(const GraphTriple& t, LemmaVariant variant) {
    std::vector<std::vector<int>> out;
    if (variant == LemmaVariant::L5) {
        const auto ua = t.split->first.to_vector();
        const auto ub = t.split->second.to_vector();
        for (std::size_t i = 0; i < ua.size(); ++i)
            for (std::size_t j = i + 1; j < ua.size(); ++j)
                for (int v : ub) out.push_back({ua[i], ua[j], v});
        return out;
    }
    if (variant == LemmaVariant::L4K) {
        for (int u = 1; u <= t.n; ++u)
            for (int v = u + 1; v <= t.n; ++v) out.push_back({u, v});
        return out;
    }
    for (int u = 1; u <= t.n; ++u)
        for (int v = u + 1; v <= t.n; ++v)
            for (int w = v + 1; w <= t.n; ++w) out.push_back({u, v, w});
    return out;
}

inline std::vector<int> random_probe(const GraphTriple& t, LemmaVariant variant,
                                     std::mt19937_64& rng) {
    if (variant == LemmaVariant::L5) {
        const auto ua = t.split->first.to_vector();
        const auto ub = t.split->second.to_vector();
        const int i = int(bounded(rng, ua.size()));
        int j = int(bounded(rng, ua.size() - 1));
        if (j >= i) ++j;
        const int v = int(bounded(rng, ub.size()));
        return {std::min(ua[i], ua[j]), std::max(ua[i], ua[j]), ub[v]};
    }
    const int size = variant_probe_size(variant);
    std::vector<int> probe;
    while (int(probe.size()) < size) {
        const int v = 1 + int(bounded(rng, std::uint64_t(t.n)));
        if (std::find(probe.begin(), probe.end(), v) == probe.end()) probe.push_back(v);
    }
    return probe;
}

inline void check_all_probes(const GraphTriple& t, LemmaVariant variant, LemmaReport& rep) {
    if (!hypothesis_holds(t, variant)) return;
    ++rep.applicable;
    for (const auto& probe : all_probes(t, variant)) {
        ++rep.checks;
        if (check_intersecting_bound(t, variant, probe) == CheckOutcome::violated)
            rep.record_violation("probe " + std::to_string(probe[0]) + "," +
                                 std::to_string(probe[1]));
    }
}

/// All graphs on n labeled vertices with at most max_edges edges, as edge
/// subsets of the C(n,2) pair list.
inline std::vector<std::vector<std::pair<int, int>>> small_graphs(int n, int max_edges,
                                                                  const std::vector<std::pair<int, int>>& pool) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        out.push_back(cur);
        if (int(cur.size()) == max_edges) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace detail

/// Exhaustive sweep for the AH variant: all 2^(n^k) labeled edge sets.
inline LemmaReport sweep_AH_exhaustive(int k, int part_size, int s) {
    long long space = 1;
    for (int i = 0; i < k; ++i) space *= part_size;
    if (space > 20) throw std::invalid_argument("sweep_AH_exhaustive: tuple space too large");

    std::vector<std::vector<int>> pool;
    std::vector<int> t(k, 1);
    for (;;) {
        pool.push_back(t);
        int j = k - 1;
        while (j >= 0 && t[j] == part_size) t[j--] = 1;
        if (j < 0) break;
        ++t[j];
    }

    LemmaReport rep;
    rep.variant = "AH";
    rep.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pool.size()); ++mask) {
        std::vector<std::vector<int>> tuples;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if ((mask >> i) & 1) tuples.push_back(pool[i]);
        KPartiteKGraph g(k, part_size, std::move(tuples));
        ++rep.instances;
        ++rep.applicable;
        ++rep.checks;
        if (!check_AH_bound(g, s))
            rep.record_violation("mask " + std::to_string(mask));
    }
    return rep;
}

/// Exhaustive sweep over all graph triples with at most max_edges edges per
/// graph on n vertices; every probe set of the variant is checked.
inline LemmaReport sweep_triples_exhaustive(LemmaVariant variant, const LemmaParams& params) {
    if (variant == LemmaVariant::L5) {
        const int n = params.a + params.b;
        VertexSet a_set(n), b_set(n);
        for (int v = 1; v <= params.a; ++v) a_set.insert(v);
        for (int v = params.a + 1; v <= n; ++v) b_set.insert(v);

        std::vector<std::pair<int, int>> pool_a, pool_meet;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                if (a_set.contains(u) && a_set.contains(v)) pool_a.emplace_back(u, v);
                if (a_set.contains(u) || a_set.contains(v)) pool_meet.emplace_back(u, v);
            }
        const auto g1s = detail::small_graphs(n, params.max_edges, pool_a);
        const auto g23s = detail::small_graphs(n, params.max_edges, pool_meet);

        LemmaReport rep;
        rep.variant = "L5";
        rep.exhaustive = true;
        for (const auto& e1 : g1s)
            for (const auto& e2 : g23s)
                for (const auto& e3 : g23s) {
                    GraphTriple t(n);
                    t.split = {a_set, b_set};
                    for (auto [u, v] : e1) t.g[0].add_edge(u, v);
                    for (auto [u, v] : e2) t.g[1].add_edge(u, v);
                    for (auto [u, v] : e3) t.g[2].add_edge(u, v);
                    ++rep.instances;
                    detail::check_all_probes(t, variant, rep);
                }
        return rep;
    }

    std::vector<std::pair<int, int>> pool;
    for (int u = 1; u <= params.n; ++u)
        for (int v = u + 1; v <= params.n; ++v) pool.emplace_back(u, v);
    const auto graphs = detail::small_graphs(params.n, params.max_edges, pool);

    LemmaReport rep;
    rep.variant = variant == LemmaVariant::L2 ? "L2" : variant == LemmaVariant::L3 ? "L3" : "L4k";
    rep.exhaustive = true;
    for (const auto& e1 : graphs)
        for (const auto& e2 : graphs)
            for (const auto& e3 : graphs) {
                GraphTriple t(params.n);
                for (auto [u, v] : e1) t.g[0].add_edge(u, v);
                for (auto [u, v] : e2) t.g[1].add_edge(u, v);
                for (auto [u, v] : e3) t.g[2].add_edge(u, v);
                ++rep.instances;
                detail::check_all_probes(t, variant, rep);
            }
    return rep;
}

/// Seeded sampled sweep: `iterations` hypothesis-satisfying instances, each
/// checked on 50 random probes (AH instances carry no probe and are checked
/// directly).
inline LemmaReport sample_violations(const std::string& variant_name, const LemmaParams& params,
                                     std::uint64_t seed, long long iterations) {
    LemmaReport rep;
    rep.variant = variant_name;
    rep.exhaustive = false;

    for (long long it = 0; it < iterations; ++it) {
        auto rng = rng_for(seed, std::uint64_t(it));
        if (variant_name == "AH") {
            KPartiteKGraph g = random_kpartite(params.k, params.part_size, 0.5, rng);
            ++rep.instances;
            ++rep.applicable;
            ++rep.checks;
            if (!check_AH_bound(g, params.s)) rep.record_violation("iteration " + std::to_string(it));
            continue;
        }
        LemmaVariant variant;
        GraphTriple t(1);
        if (variant_name == "L2") {
            variant = LemmaVariant::L2;
            t = random_intersecting_triple(params.n, variant, rng);
        } else if (variant_name == "L3") {
            variant = LemmaVariant::L3;
            t = random_intersecting_triple(params.n, variant, rng);
        } else if (variant_name == "L4k") {
            variant = LemmaVariant::L4K;
            t = random_intersecting_triple(params.n, variant, rng);
        } else if (variant_name == "L5") {
            variant = LemmaVariant::L5;
            t = random_split_triple(params.a, params.b, rng);
        } else {
            throw std::invalid_argument("sample_violations: unknown variant " + variant_name);
        }
        ++rep.instances;
        if (!hypothesis_holds(t, variant)) continue;  // generator guarantees this
        ++rep.applicable;
        for (int p = 0; p < 50; ++p) {
            ++rep.checks;
            const auto probe = detail::random_probe(t, variant, rng);
            if (check_intersecting_bound(t, variant, probe) == CheckOutcome::violated)
                rep.record_violation("iteration " + std::to_string(it));
        }
    }
    return rep;
}

}  // namespace hm
