#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "hm/campaign.hpp"
#include "hm/constructions.hpp"
#include "hm/io.hpp"
#include "hm/rng.hpp"

using hm::CampaignMode;
using hm::CampaignSpec;
using hm::Classification;
using hm::Hypergraph3;
using hm::Triple;

TEST_CASE("theorem check outcomes") {
    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const auto tight = hm::theorem_check(h2, 3);
    REQUIRE(!tight.condition_met);  // sigma2 equals the bound, not above it
    REQUIRE(*tight.sigma2 == 32);
    REQUIRE(tight.is_h2_subgraph);
    REQUIRE(tight.cls == Classification::stability);

    const Hypergraph3 k9(9, hm::all_triples(9));
    const auto found = hm::theorem_check(k9, 3);
    REQUIRE(found.condition_met);
    REQUIRE(*found.sigma2 == 56);  // 2*C(8,2)
    REQUIRE(found.cls == Classification::matching_found);

    const auto empty = hm::theorem_check(Hypergraph3(9), 3);
    REQUIRE(empty.cls == Classification::vacuous);
    REQUIRE(!empty.sigma2.has_value());

    REQUIRE_THROWS_AS(hm::theorem_check(k9, 4), std::invalid_argument);
}

TEST_CASE("exhaustive sweep at n=5, s=1 finds no counterexample") {
    CampaignSpec spec;
    spec.mode = CampaignMode::exhaustive;
    spec.n = 5;
    spec.s = 1;
    const auto report = hm::run_campaign(spec);
    REQUIRE(report.instances == 1 << 10);  // C(5,3) = 10 triples
    REQUIRE(report.counterexamples.empty());
    REQUIRE(report.count(Classification::counterexample) == 0);
    long long total = 0;
    for (auto c : report.class_counts) total += c;
    REQUIRE(total == report.instances);

    CampaignSpec too_big = spec;
    too_big.n = 7;
    REQUIRE_THROWS_AS(hm::run_campaign(too_big), std::invalid_argument);
}

TEST_CASE("sampled campaigns are byte-identical across thread counts") {
    CampaignSpec spec;
    spec.mode = CampaignMode::sampled;
    spec.n = 9;
    spec.s = 3;
    spec.seed = 42;
    spec.iterations = 3000;

    setenv("HM_THREADS", "1", 1);
    const std::string one = hm::report_to_string(hm::run_campaign(spec));
    setenv("HM_THREADS", "4", 1);
    const std::string four = hm::report_to_string(hm::run_campaign(spec));
    unsetenv("HM_THREADS");
    const std::string free_run = hm::report_to_string(hm::run_campaign(spec));

    REQUIRE(one == four);
    REQUIRE(one == free_run);

    CampaignSpec other = spec;
    other.seed = 43;
    REQUIRE(hm::report_to_string(hm::run_campaign(other)) != one);
}

TEST_CASE("sampled campaign accepts a fixed edge count") {
    CampaignSpec spec;
    spec.mode = CampaignMode::sampled;
    spec.n = 9;
    spec.s = 2;
    spec.seed = 5;
    spec.iterations = 500;
    spec.edge_count = 12;
    const auto report = hm::run_campaign(spec);
    REQUIRE(report.instances == 500);
    long long total = 0;
    for (auto c : report.class_counts) total += c;
    REQUIRE(total == 500);
}

TEST_CASE("serialized instances reproduce their outcome when reloaded") {
    auto rng = hm::rng_for(55, 0);
    for (int round = 0; round < 50; ++round) {
        const Hypergraph3 h = hm::random_hypergraph(9, 0.1, rng);
        const auto before = hm::theorem_check(h, 3);

        std::istringstream in(hm::to_h3_string(h));
        const Hypergraph3 reloaded = hm::read_h3(in).graph();
        const auto after = hm::theorem_check(reloaded, 3);

        REQUIRE(before.condition_met == after.condition_met);
        REQUIRE(before.has_matching == after.has_matching);
        REQUIRE(before.is_h2_subgraph == after.is_h2_subgraph);
        REQUIRE(before.cls == after.cls);
        // and the brute-force oracle agrees with the solver's verdict
        const int brute = hm::max_matching_bruteforce(reloaded);
        REQUIRE((brute >= 3) == after.has_matching);
    }
}

TEST_CASE("report format is stable") {
    CampaignSpec spec;
    spec.mode = CampaignMode::sampled;
    spec.n = 6;
    spec.s = 2;
    spec.seed = 9;
    spec.iterations = 200;
    const auto report = hm::run_campaign(spec);
    const std::string text = hm::report_to_string(report);
    REQUIRE(text.starts_with("hm-campaign-report v1\n"));
    REQUIRE(text.find("mode sampled\n") != std::string::npos);
    REQUIRE(text.find("seed 9\n") != std::string::npos);
    REQUIRE(text.find("counterexamples 0\n") != std::string::npos);
    REQUIRE(text.ends_with("end\n"));
    REQUIRE(text.find("walltime") == std::string::npos);
}

TEST_CASE("edge addition audit") {
    const auto audit = hm::edge_addition_sigma2_audit(9, 3);
    REQUIRE(audit.bound == 32);
    REQUIRE(audit.additions == 34);  // C(9,3) - 50 edges present
    REQUIRE(audit.violations == 0);
    REQUIRE(audit.max_sigma2 <= 32);

    const auto small = hm::edge_addition_sigma2_audit(6, 2);
    REQUIRE(small.bound == 10);
    REQUIRE(small.violations == 0);

    // re-adding a present triple is a no-op
    const auto h2 = hm::build_extremal({.ell = 2, .n = 9, .s = 3}).first;
    const Triple present = h2.edges()[0];
    const auto same = h2.with_edge(present);
    REQUIRE(same.edge_count() == h2.edge_count());
    REQUIRE(*same.sigma2() == 32);
}

TEST_CASE("crossover audit") {
    const auto audit = hm::crossover_audit(60);
    REQUIRE(audit.pairs > 0);
    REQUIRE(audit.mismatches == 0);
}

TEST_CASE("default sampling probability straddles the threshold") {
    // the mean degree sum 2 p C(n-1,2) must clear the bound, since the
    // minimum over pairs falls below the mean
    const double p = hm::default_edge_probability(18, 3);
    const double mean_pair_sum = 2.0 * p * hm::choose2(17);
    REQUIRE(mean_pair_sum >= double(hm::sigma2_threshold(18, 3)));
    REQUIRE(mean_pair_sum <= 2.0 * double(hm::sigma2_threshold(18, 3)));

    // a seeded run at the default lands instances on both sides of the bound
    CampaignSpec spec;
    spec.mode = CampaignMode::sampled;
    spec.n = 18;
    spec.s = 3;
    spec.seed = 42;
    spec.iterations = 400;
    const auto report = hm::run_campaign(spec);
    REQUIRE(report.count(Classification::matching_found) > 0);
    REQUIRE(report.count(Classification::vacuous) > 0);
    REQUIRE(report.counterexamples.empty());
}
