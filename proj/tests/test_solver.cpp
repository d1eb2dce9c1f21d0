#include <catch2/catch_amalgamated.hpp>

#include "hm/constructions.hpp"
#include "hm/rng.hpp"
#include "hm/solver.hpp"

using hm::Hypergraph3;
using hm::SolverConfig;
using hm::Triple;

namespace {
Hypergraph3 complete3(int n) { return Hypergraph3(n, hm::all_triples(n)); }
}  // namespace

TEST_CASE("small complete graphs") {
    const auto k5 = hm::max_matching_exact(complete3(5));
    REQUIRE(k5.optimum == 1);  // two disjoint triples need six vertices
    REQUIRE(k5.proved_optimal);
    REQUIRE(k5.witness.valid());

    const auto k6 = hm::max_matching_exact(complete3(6));
    REQUIRE(k6.optimum == 2);
    REQUIRE(k6.proved_optimal);

    REQUIRE(hm::max_matching_bruteforce(complete3(5)) == 1);
    REQUIRE(hm::max_matching_bruteforce(complete3(6)) == 2);
}

TEST_CASE("extremal instance H2_{12,4}") {
    const auto h = hm::build_extremal({.ell = 2, .n = 12, .s = 4}).first;
    const auto r = hm::max_matching_exact(h);
    REQUIRE(r.optimum == 3);
    REQUIRE(r.proved_optimal);
    REQUIRE(r.witness.size() == 3);
    REQUIRE(r.witness.valid());
    REQUIRE(r.witness.contained_in(h));
    REQUIRE(hm::max_matching_bruteforce(h, 1 << 20) == 3);
}

TEST_CASE("has_matching_of_size") {
    const Hypergraph3 k6 = complete3(6);
    const auto yes = hm::has_matching_of_size(k6, 2);
    REQUIRE(yes.found);
    REQUIRE(yes.witness->size() == 2);
    REQUIRE(yes.witness->edges()[0] == Triple{1, 2, 3});
    REQUIRE(yes.witness->edges()[1] == Triple{4, 5, 6});

    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const auto no = hm::has_matching_of_size(h2, 3);
    REQUIRE(!no.found);
    REQUIRE(no.proved);

    const auto empty = hm::has_matching_of_size(Hypergraph3(4), 0);
    REQUIRE(empty.found);
    REQUIRE(empty.witness->size() == 0);
}

TEST_CASE("oracle equivalence on random instances") {
    auto rng = hm::rng_for(21, 0);
    for (int round = 0; round < 300; ++round) {
        const int n = 4 + int(hm::bounded(rng, 6));  // up to 9
        const Hypergraph3 h = hm::random_hypergraph(n, 0.18, rng);
        const auto r = hm::max_matching_exact(h);
        REQUIRE(r.proved_optimal);
        REQUIRE(r.optimum == hm::max_matching_bruteforce(h));
        REQUIRE(r.witness.size() == r.optimum);
        REQUIRE(r.witness.valid());
        REQUIRE(r.witness.contained_in(h));
    }
}

TEST_CASE("both branch rules agree") {
    auto rng = hm::rng_for(22, 0);
    SolverConfig lex;
    lex.rule = hm::BranchRule::lexicographic_vertex;
    for (int round = 0; round < 100; ++round) {
        const int n = 5 + int(hm::bounded(rng, 5));
        const Hypergraph3 h = hm::random_hypergraph(n, 0.2, rng);
        REQUIRE(hm::max_matching_exact(h).optimum == hm::max_matching_exact(h, lex).optimum);
    }
}

TEST_CASE("adding an edge never shrinks the optimum") {
    auto rng = hm::rng_for(23, 0);
    for (int round = 0; round < 200; ++round) {
        const int n = 6 + int(hm::bounded(rng, 4));
        const Hypergraph3 h = hm::random_hypergraph(n, 0.1, rng);
        const auto pool = hm::all_triples(n);
        const Triple t = pool[hm::bounded(rng, pool.size())];
        const Hypergraph3 grown = h.with_edge(t);
        REQUIRE(hm::max_matching_exact(grown).optimum >= hm::max_matching_exact(h).optimum);
    }
}

TEST_CASE("root bound never falls below the optimum") {
    auto rng = hm::rng_for(24, 0);
    for (int round = 0; round < 200; ++round) {
        const int n = 4 + int(hm::bounded(rng, 6));
        const Hypergraph3 h = hm::random_hypergraph(n, 0.2, rng);
        REQUIRE(hm::packing_upper_bound(h) >= hm::max_matching_bruteforce(h));
    }
}

TEST_CASE("budget exhaustion degrades gracefully") {
    // the ell=2 member defeats the root bound, so a tiny budget cannot finish
    const auto h = hm::build_extremal({.ell = 2, .n = 15, .s = 5}).first;
    SolverConfig starved;
    starved.node_budget = 10;
    const auto r = hm::max_matching_exact(h, starved);
    REQUIRE(!r.proved_optimal);
    REQUIRE(r.witness.valid());
    REQUIRE(r.optimum == r.witness.size());

    const auto full = hm::max_matching_exact(h);
    REQUIRE(full.proved_optimal);
    REQUIRE(full.optimum == 4);
    REQUIRE(r.optimum <= full.optimum);

    // the transversal refinement certifies the ell=1 member at the root
    const auto h1 = hm::build_extremal({.ell = 1, .n = 15, .s = 5}).first;
    const auto rooted = hm::max_matching_exact(h1, starved);
    REQUIRE(rooted.proved_optimal);
    REQUIRE(rooted.optimum == 4);
}

TEST_CASE("witnesses are deterministic") {
    const auto h = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const auto a = hm::max_matching_exact(h);
    const auto b = hm::max_matching_exact(h);
    REQUIRE(a.witness.edges() == b.witness.edges());
}

TEST_CASE("spill path solves instances beyond 64 vertices") {
    // planted structure at n = 70, sparse enough for the oracle cap
    std::vector<Triple> edges{{1, 2, 3},    {4, 5, 6},    {7, 8, 9},   {1, 4, 70},
                              {2, 5, 69},   {10, 20, 30}, {40, 50, 60}, {11, 21, 31},
                              {12, 22, 32}, {13, 23, 33}};
    const Hypergraph3 h(70, edges);
    const auto r = hm::max_matching_exact(h);
    REQUIRE(r.proved_optimal);
    REQUIRE(r.optimum == hm::max_matching_bruteforce(h));
    REQUIRE(r.witness.valid());
}

TEST_CASE("word path and spill path agree on embedded instances") {
    auto rng = hm::rng_for(25, 0);
    for (int round = 0; round < 60; ++round) {
        const int n = 5 + int(hm::bounded(rng, 5));
        const Hypergraph3 h = hm::random_hypergraph(n, 0.12, rng);
        const Hypergraph3 wide(70, h.edges());  // same edges, spill-path universe
        const auto small = hm::max_matching_exact(h);
        const auto large = hm::max_matching_exact(wide);
        REQUIRE(small.proved_optimal);
        REQUIRE(large.proved_optimal);
        REQUIRE(small.optimum == large.optimum);
    }
}

TEST_CASE("bruteforce rejects oversized instances") {
    REQUIRE_THROWS_AS(hm::max_matching_bruteforce(complete3(12)), std::invalid_argument);
    REQUIRE(hm::max_matching_bruteforce(complete3(9)) == 3);  // n <= 9 passes the cap
}
