#include <catch2/catch_amalgamated.hpp>

#include "hm/constructions.hpp"
#include "hm/proof_matcher.hpp"
#include "hm/rng.hpp"
#include "hm/solver.hpp"

using hm::Hypergraph3;
using hm::Triple;
using hm::VertexSet;

namespace {

Hypergraph3 complete3(int n) { return Hypergraph3(n, hm::all_triples(n)); }

hm::DegreePartition manual_partition(int n, int s, std::initializer_list<int> w_side) {
    hm::DegreePartition p;
    p.s = s;
    p.epsilon = 0.5;
    p.W = VertexSet(n);
    for (int v : w_side) p.W.insert(v);
    p.U = p.W.complement();
    return p;
}

}  // namespace

TEST_CASE("degree threshold classification") {
    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const auto small_eps = hm::classify_UW(h2, 3, 0.01);
    REQUIRE(small_eps.U.empty());  // degrees 10 and 22 against threshold 26.595
    REQUIRE(small_eps.W.count() == 9);

    const auto k6 = hm::classify_UW(complete3(6), 2, 0.01);
    REQUIRE(k6.U.empty());  // degree 10 against threshold 11.82

    // threshold inside (0,1): every non-isolated vertex clears it
    const Hypergraph3 h(9, {Triple{1, 2, 3}});
    const auto part = hm::classify_UW(h, 1, 0.21);
    REQUIRE(part.threshold > 0.0);
    REQUIRE(part.threshold < 1.0);
    REQUIRE(part.U.to_vector() == std::vector<int>{1, 2, 3});

    REQUIRE_THROWS_AS(hm::classify_UW(h, 1, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(hm::classify_UW(h, 4, 0.1), std::invalid_argument);
}

TEST_CASE("w_prime diagnostic") {
    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const auto part = hm::classify_UW(h2, 3, 0.01);
    REQUIRE(hm::w_prime(h2, part, 0.1).count() == 9);   // generous threshold takes all of W
    REQUIRE(hm::w_prime(h2, part, -0.4).count() == 0);  // negative gamma' empties it
}

TEST_CASE("covering matching trivial windows") {
    const Hypergraph3 h(9, {Triple{1, 2, 3}});

    // |U| = 3s: demand is zero edges
    const auto all_u = manual_partition(9, 3, {});
    const auto zero = hm::find_covering_matching(h, all_u);
    REQUIRE(zero.status == hm::CoverStatus::found);
    REQUIRE(zero.matching->size() == 0);

    // |U| = 2s-1 is below the window
    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const auto u_is_t = manual_partition(9, 3, {1, 2, 3, 4});  // U = T (5 = 2s-1 vertices)
    const auto trivial = hm::find_covering_matching(h2, u_is_t);
    REQUIRE(trivial.status == hm::CoverStatus::trivial);
    REQUIRE(trivial.matching->size() == 0);
}

TEST_CASE("covering matching recovers a planted cover") {
    // W = {3, 6}; edges (1,2,3) and (4,5,6) each hold exactly one W vertex
    std::vector<Triple> edges{{1, 2, 3}, {4, 5, 6}, {1, 2, 4}, {2, 3, 6}, {3, 6, 7}};
    const Hypergraph3 h(9, edges);
    const auto part = manual_partition(9, 3, {3, 6});
    REQUIRE(hm::covering_requirement(part) == 2);

    const auto res = hm::find_covering_matching(h, part);
    REQUIRE(res.status == hm::CoverStatus::found);
    REQUIRE(res.matching->size() == 2);
    REQUIRE(res.matching->valid());
    for (const Triple& e : res.matching->edges()) {
        int in_w = 0;
        for (int v : e)
            if (part.W.contains(v)) ++in_w;
        REQUIRE(in_w == 1);
    }
}

TEST_CASE("covering matching reports nonexistence") {
    const Hypergraph3 h(9, {Triple{1, 2, 4}});
    const auto part = manual_partition(9, 3, {3});  // |U| = 8, demand 1
    const auto res = hm::find_covering_matching(h, part);
    REQUIRE(res.status == hm::CoverStatus::none);
    REQUIRE(!res.matching.has_value());
}

TEST_CASE("optimal matching on a perfect matching instance") {
    const Hypergraph3 h(9, {Triple{1, 2, 3}, Triple{4, 5, 6}, Triple{7, 8, 9}});
    const auto part = manual_partition(9, 3, {});
    const auto res = hm::optimal_matching(h, part);
    REQUIRE(res.condition_i_feasible);  // demand 0
    REQUIRE(res.proved);
    REQUIRE(res.state.m.size() == 3);
    REQUIRE(res.state.m1.size() == 0);
    REQUIRE(hm::validate_state(h, part, res.state));
}

TEST_CASE("optimal matching degrades when the demand is infeasible") {
    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const auto part = manual_partition(9, 3, {1, 2, 3, 4});  // U = T, W = S, demand 4
    const auto res = hm::optimal_matching(h2, part);
    REQUIRE(!res.condition_i_feasible);  // nu = 2 < 4
    REQUIRE(res.proved);
    REQUIRE(res.state.m.size() == 2);
    REQUIRE(res.state.m1.size() == 2);  // both edges meet W = S
    for (const Triple& e : res.state.m.edges()) {
        int in_s = 0;
        for (int v : e)
            if (part.W.contains(v)) ++in_s;
        REQUIRE(in_s == 1);
    }
    REQUIRE(hm::validate_state(h2, part, res.state));

    const auto empty = hm::optimal_matching(Hypergraph3(9), manual_partition(9, 3, {1, 2, 3}));
    REQUIRE(!empty.condition_i_feasible);
    REQUIRE(empty.state.m.size() == 0);
}

TEST_CASE("augmentation move (a) adds an uncovered edge") {
    const Hypergraph3 h(9, {Triple{1, 2, 3}});
    const auto part = manual_partition(9, 3, {});
    const auto state = hm::build_state(part, hm::Matching(9));
    std::string what;
    const auto next = hm::augment_once(h, part, state, &what);
    REQUIRE(next.has_value());
    REQUIRE(next->m.size() == 1);
    REQUIRE(what == "add 1 2 3");
}

TEST_CASE("augmentation move (b) trades one edge for two") {
    const Hypergraph3 h(7, {Triple{1, 2, 3}, Triple{1, 4, 5}, Triple{2, 6, 7}});
    const auto part = manual_partition(7, 2, {});
    const auto state = hm::build_state(part, hm::Matching::from_edges(7, {Triple{1, 2, 3}}));
    std::string what;
    const auto next = hm::augment_once(h, part, state, &what);
    REQUIRE(next.has_value());
    REQUIRE(next->m.size() == 2);
    REQUIRE(next->m.covers(4));
    REQUIRE(next->m.covers(6));
    REQUIRE(hm::validate_state(h, part, *next));
}

TEST_CASE("augmentation move (c) uses a W2 vertex") {
    // replacing (1,2,3) by (1,4,7) and (2,5,6) frees nothing else; 7 sits in W
    const Hypergraph3 h(7, {Triple{1, 2, 3}, Triple{1, 4, 7}, Triple{2, 5, 6}});
    const auto part = manual_partition(7, 2, {7});
    const auto state = hm::build_state(part, hm::Matching::from_edges(7, {Triple{1, 2, 3}}));
    std::string what;
    const auto next = hm::augment_once(h, part, state, &what);
    REQUIRE(next.has_value());
    REQUIRE(next->m.size() == 2);
    REQUIRE(what.substr(0, 6) == "swap-w");
    REQUIRE(next->m1.size() == 1);
}

TEST_CASE("no move applies at an exact optimum") {
    auto rng = hm::rng_for(41, 0);
    for (int round = 0; round < 120; ++round) {
        const int n = 6 + int(hm::bounded(rng, 4));
        const Hypergraph3 h = hm::random_hypergraph(n, 0.15, rng);
        const int s = std::max(1, int(hm::bounded(rng, std::uint64_t(n / 3))) + 1);
        const double eps = 0.05 + 0.9 * double(hm::bounded(rng, 1000)) / 1000.0 * 0.9;
        const auto part = hm::classify_UW(h, s, std::min(eps, 0.99));
        const auto opt = hm::optimal_matching(h, part);
        REQUIRE(opt.proved);
        REQUIRE(hm::validate_state(h, part, opt.state));
        REQUIRE(!hm::augment_once(h, part, opt.state).has_value());
    }
}

TEST_CASE("no edge of type W2U3U3 or W2U2U3 at exact optima") {
    auto rng = hm::rng_for(42, 0);
    for (int round = 0; round < 150; ++round) {
        const int n = 6 + int(hm::bounded(rng, 4));
        const Hypergraph3 h = hm::random_hypergraph(n, 0.2, rng);
        for (int s = 1; 3 * s <= n; ++s) {
            const auto part = hm::classify_UW(h, s, 0.3);
            const auto opt = hm::optimal_matching(h, part);
            REQUIRE(opt.proved);
            const auto& st = opt.state;
            REQUIRE(h.count_edges_of_type(st.w2, st.u3, st.u3) == 0);
            REQUIRE(h.count_edges_of_type(st.w2, st.u2, st.u3) == 0);
        }
    }
}

TEST_CASE("pipeline examples") {
    hm::GrowConfig plain;

    const auto grown = hm::grow_matching(complete3(9), 3, plain);
    REQUIRE(grown.matching.has_value());
    REQUIRE(grown.matching->size() == 3);
    REQUIRE(grown.matching->valid());
    REQUIRE(grown.matching->contained_in(complete3(9)));

    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    REQUIRE(!hm::grow_matching(h2, 3, plain).matching.has_value());
    hm::GrowConfig hybrid;
    hybrid.hybrid = true;
    REQUIRE(!hm::grow_matching(h2, 3, hybrid).matching.has_value());

    // adding an all-S edge to the ell=1 family lifts nu from 2 to 3
    const auto h1 = hm::build_extremal({.ell = 1, .n = 12, .s = 3}).first;
    const Hypergraph3 lifted = h1.with_edge({1, 2, 3});
    REQUIRE(hm::max_matching_exact(lifted).optimum == 3);
    const auto lifted_grow = hm::grow_matching(lifted, 3, plain);
    REQUIRE(lifted_grow.matching.has_value());
    REQUIRE(lifted_grow.matching->size() == 3);

    REQUIRE(hm::grow_matching(h2, 0, plain).matching->size() == 0);
    REQUIRE(!hm::grow_matching(h2, 4, plain).matching.has_value());  // 3s > n
}

TEST_CASE("augmentation repairs a budget-starved optimum") {
    const Hypergraph3 k9(9, hm::all_triples(9));
    hm::GrowConfig starved;
    starved.solver.node_budget = 2;
    const auto grown = hm::grow_matching(k9, 3, starved);
    REQUIRE(!grown.optimal.proved);
    REQUIRE(grown.matching.has_value());
    REQUIRE(grown.matching->size() == 3);
    REQUIRE(!grown.used_exact_fallback);  // the moves close the gap by themselves
    REQUIRE(grown.augment_iterations >= 1);
    REQUIRE(grown.augment_iterations <= 3 + 9);

    // keys increase strictly along the move sequence
    auto state = hm::build_state(grown.partition, hm::Matching(9));
    auto key = hm::key_of(grown.partition, state.m);
    for (int i = 0; i < 12; ++i) {
        const auto next = hm::augment_once(k9, grown.partition, state);
        if (!next) break;
        const auto next_key = hm::key_of(grown.partition, next->m);
        REQUIRE(next_key > key);
        key = next_key;
        state = *next;
    }
    REQUIRE(state.m.size() == 3);
}

TEST_CASE("pipeline fixpoint matches the exact objective optimum") {
    auto rng = hm::rng_for(43, 0);
    for (int round = 0; round < 120; ++round) {
        const int n = 6 + int(hm::bounded(rng, 4));
        const Hypergraph3 h = hm::random_hypergraph(n, 0.15, rng);
        const int s = 1 + int(hm::bounded(rng, std::uint64_t(n / 3)));
        hm::GrowConfig cfg;
        const auto grown = hm::grow_matching(h, s, cfg);
        const auto part = grown.partition;
        const auto opt = hm::optimal_matching(h, part);
        REQUIRE(grown.final_state.m.size() == opt.state.m.size());
        REQUIRE(grown.augment_iterations <= n / 3 + n);
        REQUIRE(hm::validate_state(h, part, grown.final_state));
    }
}

TEST_CASE("objective search doubles as an independent matching engine") {
    // with W empty the objective reduces to |M|; the edge-indexed search and
    // the vertex-branching solver must then agree
    auto rng = hm::rng_for(45, 0);
    for (int round = 0; round < 100; ++round) {
        const int n = 6 + int(hm::bounded(rng, 7));  // up to 12
        const Hypergraph3 h = hm::random_hypergraph(n, 0.1, rng);
        const auto part = manual_partition(n, 1, {});
        const auto via_objective = hm::optimal_matching(h, part);
        REQUIRE(via_objective.proved);
        REQUIRE(via_objective.state.m.size() == hm::max_matching_exact(h).optimum);
    }
}

TEST_CASE("hybrid pipeline agrees with the exact solver") {
    auto rng = hm::rng_for(44, 0);
    hm::GrowConfig hybrid;
    hybrid.hybrid = true;
    for (int round = 0; round < 150; ++round) {
        const int n = 6 + int(hm::bounded(rng, 5));  // up to 10
        const Hypergraph3 h = hm::random_hypergraph(n, 0.12, rng);
        const auto exact = hm::max_matching_exact(h);
        for (int s = 1; 3 * s <= n; ++s) {
            const auto grown = hm::grow_matching(h, s, hybrid);
            REQUIRE(grown.matching.has_value() == (exact.optimum >= s));
            if (grown.matching) {
                REQUIRE(grown.matching->size() == s);
                REQUIRE(grown.matching->valid());
                REQUIRE(grown.matching->contained_in(h));
            }
            // never better than the true optimum
            const auto plain = hm::grow_matching(h, s, {});
            if (plain.matching) REQUIRE(exact.optimum >= s);
        }
    }
}
