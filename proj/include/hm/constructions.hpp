#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/partition_certificate.hpp"

namespace hm {

/// Parameters of the extremal family: n vertices split into S and T with
/// |T| = s*ell - 1, edges being all triples with at least ell vertices in T.
struct ExtremalSpec {
    int ell = 2;
    int n = 0;
    int s = 0;

    void validate() const {
        if (ell < 1 || ell > 3) throw std::invalid_argument("ExtremalSpec: ell must be 1, 2 or 3");
        if (s < 1) throw std::invalid_argument("ExtremalSpec: s must be positive");
        if (s * ell - 1 > n) throw std::invalid_argument("ExtremalSpec: T does not fit (s*ell-1 > n)");
        if (n < 1) throw std::invalid_argument("ExtremalSpec: n must be positive");
    }
};

/// Builds the family member. T occupies the highest s*ell-1 labels, which
/// keeps generated files and certificates reproducible.
inline std::pair<Hypergraph3, PartitionCertificate> build_extremal(const ExtremalSpec& spec) {
    spec.validate();
    const int t_size = spec.s * spec.ell - 1;
    const int t_min = spec.n - t_size + 1;  // T = {t_min, ..., n}

    std::vector<Triple> edges;
    for (int a = 1; a <= spec.n; ++a)
        for (int b = a + 1; b <= spec.n; ++b)
            for (int c = b + 1; c <= spec.n; ++c) {
                const int in_t = (a >= t_min) + (b >= t_min) + (c >= t_min);
                if (in_t >= spec.ell) edges.push_back({a, b, c});
            }

    PartitionCertificate cert;
    cert.ell = spec.ell;
    cert.s = spec.s;
    cert.S = VertexSet(spec.n);
    cert.T = VertexSet(spec.n);
    for (int v = 1; v <= spec.n; ++v)
        (v >= t_min ? cert.T : cert.S).insert(v);

    return {Hypergraph3(spec.n, edges), std::move(cert)};
}

/// The displayed closed forms for sigma2 of the three families. Undefined
/// for s < 2: those members have no adjacent vertex pair to minimize over.
inline Sigma2Value sigma2_closed_form(const ExtremalSpec& spec) {
    spec.validate();
    if (spec.s < 2) return std::nullopt;
    const long long n = spec.n, s = spec.s;
    switch (spec.ell) {
        case 1: return int(2 * (choose2(n - 1) - choose2(n - s)));
        case 2: return int((2 * s - 2) * (n - 1));
        case 3: return int(2 * choose2(3 * s - 2));
        default: return std::nullopt;  // unreachable
    }
}

/// Whether the ell=2 family dominates the ell=3 family in sigma2,
/// equivalently s <= (2n+4)/9.
inline bool crossover_holds(int n, int s) {
    if (s < 2) throw std::invalid_argument("crossover_holds: s must be at least 2");
    return 9LL * s <= 2LL * n + 4;
}

/// Maximum matching size of the family member: s-1 whenever n >= 3s-3.
inline int nu_extremal(const ExtremalSpec& spec) {
    spec.validate();
    if (spec.n < 3 * spec.s - 3)
        throw std::invalid_argument("nu_extremal: requires n >= 3s-3");
    return spec.s - 1;
}

}  // namespace hm
