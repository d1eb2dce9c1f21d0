#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hm/hypergraph.hpp"

namespace hm {

/// splitmix64 step; used to derive independent streams from (seed, index)
/// pairs so that chunked parallel runs are reproducible.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(mix64(mix64(seed) ^ (stream + 0x51ed2701)));
}

/// Bernoulli draw without distribution objects, identical on every platform.
inline bool chance(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return double(rng() >> 11) < p * 9007199254740992.0;  // 2^53
}

/// Uniform draw from [0, k). Modulo bias is irrelevant at desk scale;
/// determinism is what matters here.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    return k ? rng() % k : 0;
}

/// Each triple present independently with probability p.
inline Hypergraph3 random_hypergraph(int n, double p, std::mt19937_64& rng) {
    std::vector<Triple> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                if (chance(rng, p)) edges.push_back({a, b, c});
    return Hypergraph3(n, edges);
}

/// Exactly m distinct triples drawn uniformly.
inline Hypergraph3 random_hypergraph_m(int n, int m, std::mt19937_64& rng) {
    const auto pool = all_triples(n);
    if (m > int(pool.size())) m = int(pool.size());
    std::vector<int> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    // partial Fisher-Yates
    std::vector<Triple> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        const int j = i + int(bounded(rng, idx.size() - i));
        std::swap(idx[i], idx[j]);
        edges.push_back(pool[idx[i]]);
    }
    return Hypergraph3(n, edges);
}

}  // namespace hm
