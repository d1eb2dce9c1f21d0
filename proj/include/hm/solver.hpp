#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hm/hypergraph.hpp"
#include "hm/matching.hpp"
#include "hm/vertex_set.hpp"

namespace hm {

enum class BranchRule {
    max_degree_vertex,    // branch on an uncovered vertex of maximum remaining degree
    lexicographic_vertex  // branch on the smallest uncovered vertex with a remaining edge
};

struct SolverConfig {
    long long node_budget = 10'000'000;  // 0 = unlimited
    std::optional<int> target_size;      // early exit once a matching this large is found
    BranchRule rule = BranchRule::max_degree_vertex;
};

struct SolverStats {
    long long nodes = 0;
    long long prunes = 0;
    long long memo_hits = 0;
};

struct SolverResult {
    int optimum = 0;
    Matching witness;
    bool proved_optimal = false;
    SolverStats stats;
};

namespace detail {

/// Exact 3-set packing search. Vertices are branched per the configured
/// rule; each node tries every remaining edge at the branch vertex plus the
/// branch that excludes the vertex from the matching forever. The bound is
/// current size + floor(active/3), refined by a greedy packing and a greedy
/// transversal. For n <= 64 subtree optima are memoized on the availability
/// word, with the first optimal action kept for witness reconstruction.
class PackingSearch {
public:
    PackingSearch(const Hypergraph3& h, const SolverConfig& cfg)
        : h_(h), cfg_(cfg), n_(h.vertex_count()), cur_(n_), best_witness_(n_) {
        edge_masks_.reserve(h.edge_count());
        for (int e = 0; e < h.edge_count(); ++e) edge_masks_.push_back(h.edge_vertices(e));
    }

    SolverResult run() {
        if (cfg_.target_size && *cfg_.target_size <= 0) target_reached_ = true;
        int root_value = 0;
        if (!target_reached_) {
            VertexSet avail = VertexSet::full(n_);
            if (n_ <= 64)
                root_value = dp(avail);
            else
                bb(avail);
        }
        SolverResult r;
        r.optimum = best_value_;
        r.witness = best_witness_;
        // A full memo table (never hit at desk scale) could block witness
        // reconstruction; report only what the witness backs.
        r.proved_optimal = !budget_hit_ && !target_reached_ &&
                           (n_ > 64 || root_value == best_value_);
        r.stats = stats_;
        return r;
    }

private:
    static constexpr int kLeaf = -1;
    static constexpr int kExclude = -2;
    static constexpr int kGreedy = -3;
    struct MemoEntry {
        int value;
        int choice;  // edge id, or one of the sentinels above
    };

    bool stopped() const { return budget_hit_ || target_reached_; }

    bool tick() {
        ++stats_.nodes;
        if (cfg_.node_budget > 0 && stats_.nodes > cfg_.node_budget) budget_hit_ = true;
        return !stopped();
    }

    std::vector<int> collect_candidates(const VertexSet& avail) const {
        std::vector<int> out;
        for (int e = 0; e < int(edge_masks_.size()); ++e)
            if (edge_masks_[e].is_subset_of(avail)) out.push_back(e);
        return out;
    }

    int branch_vertex(const VertexSet& avail, const std::vector<int>& cand) const {
        if (cfg_.rule == BranchRule::lexicographic_vertex) {
            int best = 0;
            for (int e : cand)
                for (int v : h_.edges()[e])
                    if (best == 0 || v < best) best = v;
            return best;
        }
        std::vector<int> deg(n_ + 1, 0);
        for (int e : cand)
            for (int v : h_.edges()[e]) ++deg[v];
        int best = 0;
        for (int v = 1; v <= n_; ++v)
            if (deg[v] > 0 && (best == 0 || deg[v] > deg[best])) best = v;
        return best;
    }

    std::vector<int> greedy_pack(const std::vector<int>& cand) const {
        std::vector<int> picked;
        VertexSet used(n_);
        for (int e : cand)
            if (!edge_masks_[e].intersects(used)) {
                picked.push_back(e);
                used |= edge_masks_[e];
            }
        return picked;
    }

    /// Size of a greedy transversal, stopping at `cap` picks: any transversal
    /// bounds the matching number from above.
    int greedy_transversal(const std::vector<int>& cand, int cap) const {
        std::vector<char> alive(cand.size(), 1);
        int remaining = int(cand.size());
        int picks = 0;
        while (remaining > 0 && picks < cap) {
            std::vector<int> deg(n_ + 1, 0);
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (alive[i])
                    for (int v : h_.edges()[cand[i]]) ++deg[v];
            int best = 1;
            for (int v = 2; v <= n_; ++v)
                if (deg[v] > deg[best]) best = v;
            ++picks;
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (alive[i] && edge_masks_[cand[i]].contains(best)) {
                    alive[i] = 0;
                    --remaining;
                }
        }
        return remaining > 0 ? cap : picks;
    }

    int upper_bound(const std::vector<int>& cand, int greedy_size) const {
        VertexSet active(n_);
        for (int e : cand) active |= edge_masks_[e];
        int ub = std::min(active.count() / 3, 3 * greedy_size);
        ub = std::min(ub, greedy_transversal(cand, ub));
        return ub;
    }

    void offer_solution(const Matching& m) {
        if (m.size() > best_value_) {
            best_value_ = m.size();
            best_witness_ = m;
            if (cfg_.target_size && best_value_ >= *cfg_.target_size) target_reached_ = true;
        }
    }

    void offer_greedy(const std::vector<int>& greedy) {
        if (cur_.size() + int(greedy.size()) <= best_value_) return;
        Matching m = cur_;
        for (int e : greedy) m.try_add(h_.edges()[e]);
        offer_solution(m);
    }

    /// Rebuilds an optimal continuation from memoized choices.
    void extend_from_memo(Matching& m, VertexSet avail) const {
        for (;;) {
            auto it = memo_.find(avail.word());
            if (it == memo_.end() || it->second.choice == kLeaf) return;
            const MemoEntry& entry = it->second;
            if (entry.choice == kGreedy) {
                for (int e : greedy_pack(collect_candidates(avail))) m.try_add(h_.edges()[e]);
                return;
            }
            if (entry.choice == kExclude) {
                const int v = branch_vertex(avail, collect_candidates(avail));
                if (v == 0) return;
                avail.erase(v);
                continue;
            }
            m.try_add(h_.edges()[entry.choice]);
            avail -= edge_masks_[entry.choice];
        }
    }

    void offer_reconstructed(int value, const VertexSet& child_avail, const Triple* taken) {
        if (value <= best_value_) return;
        Matching m = cur_;
        if (taken) m.try_add(*taken);
        extend_from_memo(m, child_avail);
        offer_solution(m);
    }

    /// Exact value of the packing subproblem on `avail`; a lower bound when
    /// the search was stopped mid-subtree (such results are never memoized).
    int dp(const VertexSet& avail) {
        const std::uint64_t key = avail.word();
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats_.memo_hits;
            return it->second.value;
        }
        if (!tick()) return 0;

        const std::vector<int> cand = collect_candidates(avail);
        if (cand.empty()) {
            offer_solution(cur_);
            memo_insert(key, {0, kLeaf});
            return 0;
        }

        const std::vector<int> greedy = greedy_pack(cand);
        offer_greedy(greedy);
        if (stopped()) return int(greedy.size());

        const int ub = upper_bound(cand, int(greedy.size()));
        int value = int(greedy.size());
        int choice = kGreedy;
        if (value == ub) {
            ++stats_.prunes;
            memo_insert(key, {value, choice});
            return value;
        }

        const int v = branch_vertex(avail, cand);
        bool complete = true;
        for (int e : cand) {
            if (!edge_masks_[e].contains(v)) continue;
            cur_.try_add(h_.edges()[e]);
            const VertexSet child = avail - edge_masks_[e];
            const int sub = dp(child);
            cur_.remove(h_.edges()[e]);
            if (stopped()) {
                complete = false;
                value = std::max(value, 1 + sub);
                break;
            }
            offer_reconstructed(cur_.size() + 1 + sub, child, &h_.edges()[e]);
            if (1 + sub > value) {
                value = 1 + sub;
                choice = e;
            }
            if (value == ub) {
                ++stats_.prunes;
                memo_insert(key, {value, choice});
                return value;
            }
        }
        if (complete) {
            VertexSet child = avail;
            child.erase(v);
            const int sub = dp(child);
            if (stopped()) {
                complete = false;
                value = std::max(value, sub);
            } else {
                offer_reconstructed(cur_.size() + sub, child, nullptr);
                if (sub > value) {
                    value = sub;
                    choice = kExclude;
                }
            }
        }
        if (!complete) return value;
        memo_insert(key, {value, choice});
        return value;
    }

    /// Spill path for n > 64: plain branch and bound against the global best.
    void bb(const VertexSet& avail) {
        if (!tick()) return;
        const std::vector<int> cand = collect_candidates(avail);
        if (cand.empty()) {
            offer_solution(cur_);
            return;
        }
        const std::vector<int> greedy = greedy_pack(cand);
        offer_greedy(greedy);
        if (stopped()) return;
        if (cur_.size() + upper_bound(cand, int(greedy.size())) <= best_value_) {
            ++stats_.prunes;
            return;
        }
        const int v = branch_vertex(avail, cand);
        for (int e : cand) {
            if (!edge_masks_[e].contains(v)) continue;
            cur_.try_add(h_.edges()[e]);
            bb(avail - edge_masks_[e]);
            cur_.remove(h_.edges()[e]);
            if (stopped()) return;
        }
        VertexSet rest = avail;
        rest.erase(v);
        bb(rest);
    }

    void memo_insert(std::uint64_t key, MemoEntry entry) {
        if (memo_.size() < kMemoCap) memo_.emplace(key, entry);
    }

    static constexpr std::size_t kMemoCap = std::size_t(1) << 22;

    const Hypergraph3& h_;
    SolverConfig cfg_;
    int n_;
    std::vector<VertexSet> edge_masks_;
    Matching cur_;
    Matching best_witness_;
    int best_value_ = 0;
    bool budget_hit_ = false;
    bool target_reached_ = false;
    SolverStats stats_;
    std::unordered_map<std::uint64_t, MemoEntry> memo_;
};

}  // namespace detail

/// Exact maximum matching. proved_optimal is true only when the search
/// exhausted within budget (and no target cut it short); otherwise the
/// best witness found so far is returned.
inline SolverResult max_matching_exact(const Hypergraph3& h, const SolverConfig& cfg = {}) {
    detail::PackingSearch search(h, cfg);
    return search.run();
}

struct MatchDecision {
    bool found = false;
    std::optional<Matching> witness;
    bool proved = false;  // false only on budget exhaustion without a verdict
    SolverStats stats;
};

/// Decides whether a matching of size s exists, stopping at the first witness.
inline MatchDecision has_matching_of_size(const Hypergraph3& h, int s,
                                          const SolverConfig& cfg = {}) {
    if (s < 0) throw std::invalid_argument("has_matching_of_size: s must be nonnegative");
    MatchDecision d;
    if (s == 0) {
        d.found = true;
        d.witness = Matching(h.vertex_count());
        d.proved = true;
        return d;
    }
    SolverConfig local = cfg;
    local.target_size = s;
    SolverResult r = max_matching_exact(h, local);
    d.stats = r.stats;
    if (r.optimum >= s) {
        d.found = true;
        d.witness = r.witness.truncated(s);
        d.proved = true;
    } else {
        d.found = false;
        d.proved = r.proved_optimal;
    }
    return d;
}

/// The solver's root upper bound on the matching number: floor(active/3)
/// refined by greedy packing and transversal estimates. Never below the true
/// optimum.
inline int packing_upper_bound(const Hypergraph3& h) {
    std::vector<VertexSet> masks;
    for (int e = 0; e < h.edge_count(); ++e) masks.push_back(h.edge_vertices(e));
    VertexSet active(h.vertex_count());
    for (const auto& m : masks) active |= m;

    VertexSet used(h.vertex_count());
    int greedy = 0;
    for (const auto& m : masks)
        if (!m.intersects(used)) {
            ++greedy;
            used |= m;
        }

    int ub = std::min(active.count() / 3, 3 * greedy);

    std::vector<char> alive(masks.size(), 1);
    int remaining = int(masks.size());
    int picks = 0;
    while (remaining > 0 && picks < ub) {
        std::vector<int> deg(h.vertex_count() + 1, 0);
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (alive[i])
                for (int v : h.edges()[i]) ++deg[v];
        int best = 1;
        for (int v = 2; v <= h.vertex_count(); ++v)
            if (deg[v] > deg[best]) best = v;
        ++picks;
        for (std::size_t i = 0; i < masks.size(); ++i)
            if (alive[i] && masks[i].contains(best)) {
                alive[i] = 0;
                --remaining;
            }
    }
    if (remaining == 0) ub = std::min(ub, picks);
    return ub;
}

/// Exhaustive oracle over all packings; only for small instances.
inline int max_matching_bruteforce(const Hypergraph3& h, int edge_cap = 25) {
    if (h.edge_count() > edge_cap && h.vertex_count() > 9)
        throw std::invalid_argument("max_matching_bruteforce: instance over cap");
    const auto& edges = h.edges();
    std::vector<VertexSet> masks;
    masks.reserve(edges.size());
    for (int e = 0; e < int(edges.size()); ++e) masks.push_back(h.edge_vertices(e));

    auto rec = [&](auto&& self, int from, const VertexSet& used) -> int {
        int next = -1;
        for (int e = from; e < int(masks.size()); ++e)
            if (!masks[e].intersects(used)) {
                next = e;
                break;
            }
        if (next < 0) return 0;
        const int skip = self(self, next + 1, used);
        const int take = 1 + self(self, next + 1, used | masks[next]);
        return std::max(skip, take);
    };
    return rec(rec, 0, VertexSet(h.vertex_count()));
}

}  // namespace hm
