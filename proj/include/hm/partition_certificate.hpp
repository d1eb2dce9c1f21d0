#pragma once

#include <stdexcept>

#include "hm/hypergraph.hpp"
#include "hm/vertex_set.hpp"

namespace hm {

/// An (S,T) vertex partition witnessing containment in the extremal family
/// with parameter ell: every edge has at least ell vertices inside T, and
/// |T| = s*ell - 1.
struct PartitionCertificate {
    int ell = 0;
    int s = 0;
    VertexSet S;
    VertexSet T;
};

/// Checks certificate shape, throwing on malformed input, then reports
/// whether every edge of h has at least ell vertices in T.
inline bool verify_certificate(const Hypergraph3& h, const PartitionCertificate& cert) {
    const int n = h.vertex_count();
    if (cert.ell < 1 || cert.ell > 3) throw std::invalid_argument("certificate: bad ell");
    if (cert.s < 1) throw std::invalid_argument("certificate: bad s");
    if (cert.S.universe_size() != n || cert.T.universe_size() != n)
        throw std::invalid_argument("certificate: universe mismatch");
    if (cert.S.intersects(cert.T) || (cert.S | cert.T) != VertexSet::full(n))
        throw std::invalid_argument("certificate: S,T must partition the vertices");
    if (cert.T.count() != cert.s * cert.ell - 1)
        throw std::invalid_argument("certificate: |T| must equal s*ell-1");

    for (const Triple& e : h.edges()) {
        int in_t = 0;
        for (int v : e)
            if (cert.T.contains(v)) ++in_t;
        if (in_t < cert.ell) return false;
    }
    return true;
}

}  // namespace hm
