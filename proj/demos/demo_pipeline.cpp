// Runs the degree-partition pipeline on a random hypergraph and compares the
// result with the exact solver.

#include <iostream>

#include "hm/proof_matcher.hpp"
#include "hm/rng.hpp"
#include "hm/solver.hpp"

int main() {
    auto rng = hm::rng_for(7, 0);
    const hm::Hypergraph3 h = hm::random_hypergraph(9, 0.25, rng);
    std::cout << "random hypergraph: n=9 m=" << h.edge_count() << '\n';

    const int s = 3;
    hm::GrowConfig cfg;
    cfg.hybrid = true;
    const hm::GrowResult grown = hm::grow_matching(h, s, cfg);
    const hm::SolverResult exact = hm::max_matching_exact(h);

    std::cout << "|U|=" << grown.partition.U.count() << " |W|=" << grown.partition.W.count()
              << '\n';
    std::cout << "pipeline: " << (grown.matching ? "matching of size 3" : "none")
              << ", exact nu=" << exact.optimum << '\n';
    for (const auto& move : grown.move_log) std::cout << "  move: " << move << '\n';
    return 0;
}
