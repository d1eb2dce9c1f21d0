// Command-line workbench for matchings in 3-uniform hypergraphs under
// degree-sum conditions: family generators, statistics, the exact solver,
// structure recognition, the matching pipeline, lemma verifiers, and
// enumeration campaigns.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hm/campaign.hpp"
#include "hm/constructions.hpp"
#include "hm/hypergraph.hpp"
#include "hm/io.hpp"
#include "hm/lemma_lab.hpp"
#include "hm/proof_matcher.hpp"
#include "hm/recognizer.hpp"
#include "hm/solver.hpp"
#include "hm/version.hpp"

namespace {

constexpr int kExitFinding = 2;  // a counterexample or lemma violation was recorded

int family_ell(const std::string& family) {
    if (family == "h1") return 1;
    if (family == "h2") return 2;
    if (family == "h3") return 3;
    throw CLI::ValidationError("--family must be h1, h2 or h3");
}

void print_vertex_set(const char* label, const hm::VertexSet& s) {
    std::cout << label << ':';
    s.for_each([](int v) { std::cout << ' ' << v; });
    std::cout << '\n';
}

void print_matching(const hm::Matching& m) {
    for (const hm::Triple& e : m.edges()) std::cout << hm::triple_to_string(e) << '\n';
}

int run_gen(const std::string& family, int n, int s, const std::string& out_path) {
    const hm::ExtremalSpec spec{family_ell(family), n, s};
    auto [h, cert] = hm::build_extremal(spec);
    hm::write_h3_file(out_path, h, cert.T.to_vector());
    std::cout << "wrote " << out_path << ": n=" << h.vertex_count() << " m=" << h.edge_count()
              << " family=" << family << " s=" << s << '\n';
    return 0;
}

int run_stats(const std::string& path) {
    const hm::Hypergraph3 h = hm::read_h3_file(path).graph();
    std::cout << "n " << h.vertex_count() << '\n';
    std::cout << "m " << h.edge_count() << '\n';
    std::cout << "degrees";
    for (int v = 1; v <= h.vertex_count(); ++v) std::cout << ' ' << h.degree(v);
    std::cout << '\n';
    const hm::Sigma2Value sig = h.sigma2();
    std::cout << "sigma2 " << (sig ? std::to_string(*sig) : "undefined") << '\n';
    std::cout << "delta1 " << h.delta_ell(1) << '\n';
    if (h.vertex_count() >= 2) std::cout << "delta2 " << h.delta_ell(2) << '\n';
    print_vertex_set("isolated", h.isolated_vertices());
    return 0;
}

int run_solve(const std::string& path, std::optional<int> target, long long budget) {
    const hm::Hypergraph3 h = hm::read_h3_file(path).graph();
    hm::SolverConfig cfg;
    cfg.node_budget = budget;
    cfg.target_size = target;
    const hm::SolverResult r = hm::max_matching_exact(h, cfg);
    std::cout << "nu=" << r.optimum << " proved=" << (r.proved_optimal ? "true" : "false") << '\n';
    if (target)
        std::cout << "target=" << *target << " reached=" << (r.optimum >= *target ? "true" : "false")
                  << '\n';
    print_matching(r.witness);
    return 0;
}

int run_recognize(const std::string& path, const std::string& family, int s) {
    const hm::Hypergraph3 h = hm::read_h3_file(path).graph();
    const int ell = family_ell(family);
    std::optional<hm::PartitionCertificate> cert;
    if (ell == 1) cert = hm::is_subgraph_of_H1(h, s);
    if (ell == 2) cert = hm::is_subgraph_of_H2(h, s);
    if (ell == 3) cert = hm::is_subgraph_of_H3(h, s);
    std::cout << "member=" << (cert ? "true" : "false") << '\n';
    if (cert) {
        print_vertex_set("S", cert->S);
        print_vertex_set("T", cert->T);
    }
    return 0;
}

int run_match(const std::string& path, int s, double epsilon, bool hybrid, long long budget,
              std::optional<double> wprime_gamma) {
    const hm::Hypergraph3 h = hm::read_h3_file(path).graph();
    hm::GrowConfig cfg;
    cfg.epsilon = epsilon;
    cfg.hybrid = hybrid;
    cfg.solver.node_budget = budget;
    const hm::GrowResult r = hm::grow_matching(h, s, cfg);

    std::cout << "U " << r.partition.U.count() << " W " << r.partition.W.count() << '\n';
    std::cout << "cover_required " << r.cover.required << " cover_status ";
    switch (r.cover.status) {
        case hm::CoverStatus::found: std::cout << "found"; break;
        case hm::CoverStatus::trivial: std::cout << "trivial"; break;
        case hm::CoverStatus::none: std::cout << "none"; break;
        case hm::CoverStatus::budget_exhausted: std::cout << "budget"; break;
    }
    std::cout << '\n';
    std::cout << "optimal |M|=" << r.optimal.key.size << " |M1|=" << r.optimal.key.w_edges
              << " feasible=" << (r.optimal.condition_i_feasible ? "true" : "false")
              << " proved=" << (r.optimal.proved ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < r.move_log.size(); ++i)
        std::cout << "move " << (i + 1) << ": " << r.move_log[i] << '\n';
    if (wprime_gamma)
        print_vertex_set("wprime", hm::w_prime(h, r.partition, *wprime_gamma));
    if (r.used_exact_fallback) std::cout << "fallback exact\n";
    if (r.matching) {
        std::cout << "matching size " << r.matching->size() << '\n';
        print_matching(*r.matching);
    } else {
        std::cout << "none\n";
    }
    return 0;
}

void print_lemma_report(const hm::LemmaReport& rep) {
    std::cout << rep.variant << (rep.exhaustive ? " exhaustive" : " sampled") << " instances "
              << rep.instances << " applicable " << rep.applicable << " checks " << rep.checks
              << " violations " << rep.violations << '\n';
    for (const auto& d : rep.violation_details) std::cout << "  violation: " << d << '\n';
}

int run_verify_lemmas(const std::string& variant, bool exhaustive, std::uint64_t seed,
                      long long iters, hm::LemmaParams params) {
    std::vector<hm::LemmaReport> reports;
    auto want = [&](const char* name) { return variant == "all" || variant == name; };

    if (exhaustive) {
        if (want("ah")) reports.push_back(hm::sweep_AH_exhaustive(params.k, params.part_size, params.s));
        if (want("l2")) reports.push_back(hm::sweep_triples_exhaustive(hm::LemmaVariant::L2, params));
        if (want("l3")) reports.push_back(hm::sweep_triples_exhaustive(hm::LemmaVariant::L3, params));
        if (want("l4k")) reports.push_back(hm::sweep_triples_exhaustive(hm::LemmaVariant::L4K, params));
        if (want("l5")) {
            hm::LemmaParams p5 = params;
            p5.max_edges = std::min(p5.max_edges, 3);
            reports.push_back(hm::sweep_triples_exhaustive(hm::LemmaVariant::L5, p5));
        }
    } else {
        if (want("ah")) reports.push_back(hm::sample_violations("AH", params, seed, iters));
        if (want("l2")) reports.push_back(hm::sample_violations("L2", params, seed, iters));
        if (want("l3")) reports.push_back(hm::sample_violations("L3", params, seed, iters));
        if (want("l4k")) reports.push_back(hm::sample_violations("L4k", params, seed, iters));
        if (want("l5")) reports.push_back(hm::sample_violations("L5", params, seed, iters));
    }

    long long violations = 0;
    for (const auto& rep : reports) {
        print_lemma_report(rep);
        violations += rep.violations;
    }
    return violations > 0 ? kExitFinding : 0;
}

int run_campaign_cmd(const std::string& mode, int n, int s, std::uint64_t seed, long long iters,
                     std::optional<double> p, std::optional<int> edges, const std::string& out_path,
                     long long budget) {
    hm::CampaignSpec spec;
    spec.mode = mode == "exhaustive" ? hm::CampaignMode::exhaustive : hm::CampaignMode::sampled;
    spec.n = n;
    spec.s = s;
    spec.seed = seed;
    spec.iterations = iters;
    spec.p = p;
    spec.edge_count = edges;

    hm::SolverConfig solver_cfg;
    solver_cfg.node_budget = budget;
    const hm::CampaignReport report = hm::run_campaign(spec, solver_cfg);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    hm::write_report(out, report);

    std::cout << "instances " << report.instances << '\n';
    std::cout << "counterexamples " << report.counterexamples.size() << '\n';
    std::cout << "tightness_witnesses " << report.tightness_witnesses << '\n';
    std::cout << "report " << out_path << '\n';
    std::cout << "walltime_ms " << report.walltime_ms << '\n';
    return report.counterexamples.empty() ? 0 : kExitFinding;
}

int run_audit_sigma2(int n, int s) {
    const hm::EdgeAdditionAudit audit = hm::edge_addition_sigma2_audit(n, s);
    std::cout << "bound " << audit.bound << " additions " << audit.additions << " min "
              << audit.min_sigma2 << " max " << audit.max_sigma2 << " violations "
              << audit.violations << '\n';
    return audit.violations > 0 ? kExitFinding : 0;
}

int run_audit_crossover(int n_max) {
    const hm::CrossoverAudit audit = hm::crossover_audit(n_max);
    std::cout << "pairs " << audit.pairs << " mismatches " << audit.mismatches << '\n';
    return audit.mismatches > 0 ? kExitFinding : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matchings in 3-uniform hypergraphs under degree-sum conditions"};
    app.set_version_flag("--version", hm::kVersion);
    app.require_subcommand(1);

    // gen
    std::string gen_family = "h2", gen_out;
    int gen_n = 0, gen_s = 0;
    auto* gen = app.add_subcommand("gen", "generate an extremal family member");
    gen->add_option("--family", gen_family, "h1, h2 or h3")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--s", gen_s, "target matching size")->required();
    gen->add_option("--out", gen_out, "output file")->required();

    // stats
    std::string stats_file;
    auto* stats = app.add_subcommand("stats", "degrees, sigma2, delta1, delta2, isolated vertices");
    stats->add_option("file", stats_file)->required();

    // solve
    std::string solve_file;
    std::optional<int> solve_target;
    long long solve_budget = 10'000'000;
    auto* solve = app.add_subcommand("solve", "exact maximum matching");
    solve->add_option("file", solve_file)->required();
    solve->add_option("--target", solve_target, "stop at the first matching of this size");
    solve->add_option("--budget", solve_budget, "node budget (0 = unlimited)");

    // recognize
    std::string rec_file, rec_family;
    int rec_s = 0;
    auto* rec = app.add_subcommand("recognize", "extremal-family containment with certificate");
    rec->add_option("file", rec_file)->required();
    rec->add_option("--family", rec_family, "h1, h2 or h3")->required();
    rec->add_option("--s", rec_s)->required();

    // match
    std::string match_file;
    int match_s = 0;
    double match_eps = 0.05;
    bool match_hybrid = false;
    long long match_budget = 10'000'000;
    std::optional<double> match_wprime;
    auto* match = app.add_subcommand("match", "degree-partition matching pipeline");
    match->add_option("file", match_file)->required();
    match->add_option("--s", match_s)->required();
    match->add_option("--epsilon", match_eps, "threshold parameter (default 0.05)");
    match->add_flag("--hybrid", match_hybrid, "fall back to the exact solver when stalled");
    match->add_option("--budget", match_budget);
    match->add_option("--wprime", match_wprime, "report the W' set for this gamma'");

    // verify-lemmas
    std::string vl_variant = "all";
    bool vl_exhaustive = false;
    std::uint64_t vl_seed = 1;
    long long vl_iters = 10'000;
    hm::LemmaParams vl_params;
    auto* vl = app.add_subcommand("verify-lemmas", "brute-force and sampled lemma verifiers");
    vl->add_option("--variant", vl_variant, "ah, l2, l3, l4k, l5 or all");
    vl->add_flag("--exhaustive", vl_exhaustive, "exhaustive sweep instead of sampling");
    vl->add_option("--seed", vl_seed);
    vl->add_option("--iters", vl_iters);
    vl->add_option("--n", vl_params.n, "vertex count for L2/L3/L4k");
    vl->add_option("--k", vl_params.k, "uniformity for AH");
    vl->add_option("--partsize", vl_params.part_size, "part size for AH");
    vl->add_option("--s", vl_params.s, "disjoint-tuple target for AH");
    vl->add_option("--a", vl_params.a, "|A| for L5");
    vl->add_option("--b", vl_params.b, "|B| for L5");
    vl->add_option("--max-edges", vl_params.max_edges, "edge cap per graph, exhaustive sweeps");

    // campaign
    std::string camp_mode, camp_out;
    int camp_n = 0, camp_s = 0;
    std::uint64_t camp_seed = 0;
    long long camp_iters = 0, camp_budget = 10'000'000;
    std::optional<double> camp_p;
    std::optional<int> camp_edges;
    auto* camp = app.add_subcommand("campaign", "theorem-check enumeration or sampling campaign");
    camp->add_option("--mode", camp_mode, "exhaustive or sampled")->required();
    camp->add_option("--n", camp_n)->required();
    camp->add_option("--s", camp_s)->required();
    camp->add_option("--seed", camp_seed);
    camp->add_option("--iters", camp_iters);
    camp->add_option("--p", camp_p, "per-triple probability (sampled)");
    camp->add_option("--edges", camp_edges, "fixed edge count (sampled)");
    camp->add_option("--budget", camp_budget, "solver node budget per instance");
    camp->add_option("--out", camp_out, "report file")->required();

    // audits
    int as_n = 0, as_s = 0;
    auto* audit_s = app.add_subcommand("audit-sigma2", "sigma2 never rises when an edge joins the h2 family");
    audit_s->add_option("--n", as_n)->required();
    audit_s->add_option("--s", as_s)->required();

    int ac_nmax = 60;
    auto* audit_c = app.add_subcommand("audit-crossover", "closed-form crossover equivalence");
    audit_c->add_option("--nmax", ac_nmax);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return run_gen(gen_family, gen_n, gen_s, gen_out);
        if (*stats) return run_stats(stats_file);
        if (*solve) return run_solve(solve_file, solve_target, solve_budget);
        if (*rec) return run_recognize(rec_file, rec_family, rec_s);
        if (*match)
            return run_match(match_file, match_s, match_eps, match_hybrid, match_budget,
                             match_wprime);
        if (*vl) return run_verify_lemmas(vl_variant, vl_exhaustive, vl_seed, vl_iters, vl_params);
        if (*camp)
            return run_campaign_cmd(camp_mode, camp_n, camp_s, camp_seed, camp_iters, camp_p,
                                    camp_edges, camp_out, camp_budget);
        if (*audit_s) return run_audit_sigma2(as_n, as_s);
        if (*audit_c) return run_audit_crossover(ac_nmax);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
