#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hm/constructions.hpp"
#include "hm/hypergraph.hpp"
#include "hm/io.hpp"
#include "hm/parallel.hpp"
#include "hm/recognizer.hpp"
#include "hm/rng.hpp"
#include "hm/solver.hpp"
#include "hm/version.hpp"

namespace hm {

enum class Classification { vacuous, stability, matching_found, counterexample, unresolved };

inline const char* to_string(Classification c) {
    switch (c) {
        case Classification::vacuous: return "vacuous";
        case Classification::stability: return "stability";
        case Classification::matching_found: return "matching_found";
        case Classification::counterexample: return "counterexample";
        case Classification::unresolved: return "unresolved";
    }
    return "?";
}

/// Per-instance verdict for the degree-sum theorem at (n, s).
struct TheoremOutcome {
    bool no_isolated = false;
    Sigma2Value sigma2;
    bool condition_met = false;  // no isolated vertex and sigma2 > 2(s-1)(n-1)
    bool has_matching = false;
    bool is_h2_subgraph = false;
    bool resolved = true;  // false when the solver hit its budget without a verdict
    Classification cls = Classification::vacuous;
};

inline long long sigma2_threshold(int n, int s) { return 2LL * (s - 1) * (n - 1); }

inline TheoremOutcome theorem_check(const Hypergraph3& h, int s, const SolverConfig& cfg = {}) {
    const int n = h.vertex_count();
    if (s < 1 || 3 * s > n) throw std::invalid_argument("theorem_check: requires 1 <= s <= n/3");

    TheoremOutcome out;
    out.no_isolated = h.isolated_vertices().empty();
    out.sigma2 = h.sigma2();
    const long long bound = sigma2_threshold(n, s);
    out.condition_met = out.no_isolated && out.sigma2 && *out.sigma2 > bound;

    const MatchDecision d = has_matching_of_size(h, s, cfg);
    out.has_matching = d.found;
    out.resolved = d.found || d.proved;
    out.is_h2_subgraph = is_subgraph_of_H2(h, s).has_value();

    if (!out.no_isolated)
        out.cls = Classification::vacuous;
    else if (out.condition_met)
        out.cls = !out.resolved           ? Classification::unresolved
                  : out.has_matching      ? Classification::matching_found
                                          : Classification::counterexample;
    else
        out.cls = out.is_h2_subgraph ? Classification::stability : Classification::vacuous;
    return out;
}

enum class CampaignMode { exhaustive, sampled };

struct CampaignSpec {
    CampaignMode mode = CampaignMode::exhaustive;
    int n = 0;
    int s = 0;
    long long iterations = 0;        // sampled mode
    std::uint64_t seed = 0;          // sampled mode
    std::optional<double> p;         // sampled: per-triple probability
    std::optional<int> edge_count;   // sampled: fixed edge count instead

    void validate() const {
        if (s < 1 || 3 * s > n) throw std::invalid_argument("campaign: requires 1 <= s <= n/3");
        if (mode == CampaignMode::exhaustive) {
            if (choose3(n) > 20)
                throw std::invalid_argument("campaign: exhaustive mode requires C(n,3) <= 20");
        } else {
            if (iterations < 1) throw std::invalid_argument("campaign: sampled mode needs iterations");
        }
    }
};

/// Default per-triple probability: places the expected sigma2 near the
/// decision threshold 2(s-1)(n-1), where counterexamples would have to live.
/// sigma2 is a minimum over pairs and sits below the mean degree sum, so the
/// mean-matching probability 2(s-1)/(n-2) is inflated by 1 + 1/sqrt(n).
inline double default_edge_probability(int n, int s) {
    if (s >= 2) {
        const double p = 2.0 * (s - 1) / double(n - 2) * (1.0 + 1.0 / std::sqrt(double(n)));
        return p > 1.0 ? 1.0 : p;
    }
    return 3.0 / double(choose3(n));
}

struct CounterexampleRecord {
    long long index = 0;  // mask (exhaustive) or iteration (sampled)
    std::string h3;
    TheoremOutcome outcome;
    int recheck_nu = 0;        // matching number per the re-verification pass
    bool oracle_checked = false;  // brute-force oracle (small instances) vs alternate-rule solve
};

struct CampaignReport {
    CampaignSpec spec;
    std::string version = kVersion;
    long long instances = 0;
    std::array<long long, 5> class_counts{};  // indexed by Classification
    long long tightness_witnesses = 0;        // sigma2 == bound, no isolated vertex, nu == s-1
    long long sigma2_relation_violations = 0; // h2-subgraph + no isolated vertex must force sigma2 <= bound
    long long reverify_mismatches = 0;        // counterexamples the brute-force oracle rejected
    std::vector<CounterexampleRecord> counterexamples;
    long long walltime_ms = 0;  // informational; never serialized

    long long count(Classification c) const { return class_counts[std::size_t(c)]; }
};

namespace detail {

struct ChunkAccumulator {
    long long instances = 0;
    std::array<long long, 5> class_counts{};
    long long tight = 0;
    long long sigma2_rel = 0;
    long long reverify = 0;
    std::vector<CounterexampleRecord> ces;
};

inline void campaign_process(const Hypergraph3& h, const CampaignSpec& spec, long long index,
                             const SolverConfig& solver_cfg, ChunkAccumulator& acc) {
    TheoremOutcome out = theorem_check(h, spec.s, solver_cfg);
    ++acc.instances;

    const long long bound = sigma2_threshold(spec.n, spec.s);
    if (out.is_h2_subgraph && out.no_isolated && out.sigma2 && *out.sigma2 > bound)
        ++acc.sigma2_rel;

    if (out.no_isolated && out.sigma2 && *out.sigma2 == bound && out.resolved &&
        !out.has_matching) {
        // nu == s-1 exactly: no s-matching plus an (s-1)-matching
        if (has_matching_of_size(h, spec.s - 1, solver_cfg).found) ++acc.tight;
    }

    if (out.cls == Classification::counterexample) {
        // re-verify before reporting: the brute-force oracle when the
        // instance fits its cap, otherwise an independent solve under the
        // other branch rule
        const bool oracle_ok = h.edge_count() <= 25 || h.vertex_count() <= 9;
        int recheck = -1;
        if (oracle_ok) {
            recheck = max_matching_bruteforce(h);
        } else {
            SolverConfig alt = solver_cfg;
            alt.target_size.reset();
            alt.rule = solver_cfg.rule == BranchRule::max_degree_vertex
                           ? BranchRule::lexicographic_vertex
                           : BranchRule::max_degree_vertex;
            const SolverResult r = max_matching_exact(h, alt);
            recheck = r.proved_optimal ? r.optimum : -1;
        }
        if (recheck < 0 || recheck >= spec.s) {
            // unconfirmed or contradicted; never report it as a counterexample
            ++acc.reverify;
            out.cls = Classification::unresolved;
        } else {
            CounterexampleRecord rec;
            rec.index = index;
            rec.h3 = to_h3_string(h);
            rec.outcome = out;
            rec.recheck_nu = recheck;
            rec.oracle_checked = oracle_ok;
            acc.ces.push_back(std::move(rec));
        }
    }
    ++acc.class_counts[std::size_t(out.cls)];
}

}  // namespace detail

/// Runs the campaign. Work is split into fixed-size chunks processed by a
/// worker pool and merged in chunk order, so the report is identical for a
/// given spec and seed regardless of thread count or scheduling.
inline CampaignReport run_campaign(const CampaignSpec& spec, const SolverConfig& solver_cfg = {}) {
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();

    CampaignReport report;
    report.spec = spec;

    std::vector<detail::ChunkAccumulator> slots;

    if (spec.mode == CampaignMode::exhaustive) {
        const auto triples = all_triples(spec.n);
        const long long total = 1LL << triples.size();
        const long long chunk_size = 8192;
        const long long chunks = (total + chunk_size - 1) / chunk_size;
        slots.resize(std::size_t(chunks));
        parallel_chunks(chunks, [&](long long c) {
            detail::ChunkAccumulator& acc = slots[std::size_t(c)];
            const long long lo = c * chunk_size;
            const long long hi = std::min(total, lo + chunk_size);
            std::vector<Triple> edges;
            for (long long mask = lo; mask < hi; ++mask) {
                edges.clear();
                for (std::size_t i = 0; i < triples.size(); ++i)
                    if ((mask >> i) & 1) edges.push_back(triples[i]);
                Hypergraph3 h(spec.n, edges);
                detail::campaign_process(h, spec, mask, solver_cfg, acc);
            }
        });
    } else {
        const double p = spec.p ? *spec.p : default_edge_probability(spec.n, spec.s);
        const long long chunk_size = 1024;
        const long long chunks = (spec.iterations + chunk_size - 1) / chunk_size;
        slots.resize(std::size_t(chunks));
        parallel_chunks(chunks, [&](long long c) {
            detail::ChunkAccumulator& acc = slots[std::size_t(c)];
            auto rng = rng_for(spec.seed, std::uint64_t(c));
            const long long lo = c * chunk_size;
            const long long hi = std::min(spec.iterations, lo + chunk_size);
            for (long long it = lo; it < hi; ++it) {
                Hypergraph3 h = spec.edge_count
                                    ? random_hypergraph_m(spec.n, *spec.edge_count, rng)
                                    : random_hypergraph(spec.n, p, rng);
                detail::campaign_process(h, spec, it, solver_cfg, acc);
            }
        });
    }

    for (const auto& acc : slots) {
        report.instances += acc.instances;
        for (std::size_t i = 0; i < acc.class_counts.size(); ++i)
            report.class_counts[i] += acc.class_counts[i];
        report.tightness_witnesses += acc.tight;
        report.sigma2_relation_violations += acc.sigma2_rel;
        report.reverify_mismatches += acc.reverify;
        for (const auto& ce : acc.ces) report.counterexamples.push_back(ce);
    }

    report.walltime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    return report;
}

/// Line-oriented, deterministic serialization. Wall time is deliberately
/// omitted so identical spec+seed reruns are byte-identical.
inline void write_report(std::ostream& out, const CampaignReport& r) {
    out << "hm-campaign-report v1\n";
    out << "generator " << r.version << '\n';
    out << "mode " << (r.spec.mode == CampaignMode::exhaustive ? "exhaustive" : "sampled") << '\n';
    out << "n " << r.spec.n << '\n';
    out << "s " << r.spec.s << '\n';
    if (r.spec.mode == CampaignMode::sampled) {
        out << "seed " << r.spec.seed << '\n';
        out << "iterations " << r.spec.iterations << '\n';
        if (r.spec.edge_count) {
            out << "edge_count " << *r.spec.edge_count << '\n';
        } else {
            const double p = r.spec.p ? *r.spec.p : default_edge_probability(r.spec.n, r.spec.s);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", p);
            out << "edge_probability " << buf << '\n';
        }
    }
    out << "instances " << r.instances << '\n';
    out << "vacuous " << r.count(Classification::vacuous) << '\n';
    out << "stability " << r.count(Classification::stability) << '\n';
    out << "matching_found " << r.count(Classification::matching_found) << '\n';
    out << "counterexample " << r.count(Classification::counterexample) << '\n';
    out << "unresolved " << r.count(Classification::unresolved) << '\n';
    out << "tightness_witnesses " << r.tightness_witnesses << '\n';
    out << "sigma2_relation_violations " << r.sigma2_relation_violations << '\n';
    out << "reverify_mismatches " << r.reverify_mismatches << '\n';
    out << "counterexamples " << r.counterexamples.size() << '\n';
    for (const auto& ce : r.counterexamples) {
        out << "counterexample " << ce.index << '\n';
        out << ce.h3;  // ends with newline
        out << "outcome condition_met=" << ce.outcome.condition_met
            << " matching=" << ce.outcome.has_matching << " h2=" << ce.outcome.is_h2_subgraph
            << " recheck_nu=" << ce.recheck_nu << " oracle=" << ce.oracle_checked << '\n';
    }
    out << "end\n";
}

inline std::string report_to_string(const CampaignReport& r) {
    std::ostringstream os;
    write_report(os, r);
    return os.str();
}

/// Footnote audit: adding any missing triple to the ell=2 family never lifts
/// sigma2 above 2(s-1)(n-1).
struct EdgeAdditionAudit {
    int n = 0;
    int s = 0;
    long long bound = 0;
    long long additions = 0;
    int min_sigma2 = 0;
    int max_sigma2 = 0;
    long long violations = 0;
};

inline EdgeAdditionAudit edge_addition_sigma2_audit(int n, int s) {
    if (s < 2 || 3 * s > n || n > 20)
        throw std::invalid_argument("edge_addition_sigma2_audit: requires 2 <= s <= n/3, n <= 20");
    EdgeAdditionAudit audit;
    audit.n = n;
    audit.s = s;
    audit.bound = sigma2_threshold(n, s);

    const auto [h2, cert] = build_extremal({.ell = 2, .n = n, .s = s});
    bool first = true;
    for (const Triple& t : all_triples(n)) {
        if (h2.has_edge(t)) continue;
        const Hypergraph3 grown = h2.with_edge(t);
        const Sigma2Value sig = grown.sigma2();
        ++audit.additions;
        if (first) {
            audit.min_sigma2 = audit.max_sigma2 = *sig;
            first = false;
        } else {
            audit.min_sigma2 = std::min(audit.min_sigma2, *sig);
            audit.max_sigma2 = std::max(audit.max_sigma2, *sig);
        }
        if (*sig > audit.bound) ++audit.violations;
    }
    return audit;
}

/// Crossover audit: the closed-form comparison of the ell=2 and ell=3
/// families must match the predicate 9s <= 2n+4 on every admissible pair.
struct CrossoverAudit {
    int n_max = 0;
    long long pairs = 0;
    long long mismatches = 0;
};

inline CrossoverAudit crossover_audit(int n_max) {
    CrossoverAudit audit;
    audit.n_max = n_max;
    for (int n = 6; n <= n_max; ++n)
        for (int s = 2; 3 * s <= n; ++s) {
            const Sigma2Value two = sigma2_closed_form({.ell = 2, .n = n, .s = s});
            const Sigma2Value three = sigma2_closed_form({.ell = 3, .n = n, .s = s});
            ++audit.pairs;
            if ((*two >= *three) != crossover_holds(n, s)) ++audit.mismatches;
        }
    return audit;
}

}  // namespace hm
