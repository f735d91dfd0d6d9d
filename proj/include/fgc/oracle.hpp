#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgc/bigint.hpp"
#include "fgc/errors.hpp"
#include "fgc/generators.hpp"
#include "fgc/graph.hpp"

namespace fgc {

enum class MatchConstraint { MustCover, MustVacate };
enum class DomConstraint { MustInclude, MustExclude };

struct ConditionedMatchingResult {
    std::optional<int> max_size; // absent when no matching satisfies the constraints
    BigInt count_at_max = 0;
};

struct ConditionedDominationResult {
    std::optional<int> min_size;
    BigInt count_at_min = 0;
};

// Node-expansion cap for the exhaustive searches. Exceeding it throws; the
// oracle never returns a truncated answer.
class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t cap = default_cap()) : cap_(cap) {}

    static std::uint64_t default_cap() {
        if (const char* env = std::getenv("FGC_ORACLE_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 1000000000ULL;
    }

    void tick() {
        if (++used_ > cap_) throw ResourceError("oracle search budget exceeded");
    }

    std::uint64_t used() const { return used_; }

private:
    std::uint64_t cap_;
    std::uint64_t used_ = 0;
};

namespace detail {

class MatchingSearcher {
public:
    MatchingSearcher(const LabeledGraph& g, const std::map<VertexId, MatchConstraint>& cs,
                     SearchBudget& budget, bool size_only)
        : g_(g), budget_(budget), size_only_(size_only) {
        const int v = g.vertex_count();
        matched_.assign(v, 0);
        skipped_.assign(v, 0);
        must_cover_.assign(v, 0);
        for (auto [vid, c] : cs) {
            g.check_vertex(vid);
            if (c == MatchConstraint::MustVacate) skipped_[vid] = 1;
            else must_cover_[vid] = 1;
        }
        free_deg_.assign(v, 0);
        for (VertexId u = 0; u < v; ++u) {
            if (!is_free(u)) continue;
            for (VertexId w : g.neighbors(u))
                if (is_free(w)) ++free_deg_[u];
        }
        for (VertexId u = 0; u < v; ++u)
            if (is_free(u) && free_deg_[u] > 0) ++matchable_;
    }

    ConditionedMatchingResult run() {
        dfs(0);
        ConditionedMatchingResult r;
        if (best_ >= 0) {
            r.max_size = best_;
            r.count_at_max = size_only_ ? BigInt(0) : count_;
        }
        return r;
    }

private:
    bool is_free(VertexId v) const { return !matched_[v] && !skipped_[v]; }

    void block(VertexId v) {
        // v leaves the pool of matchable endpoints
        if (free_deg_[v] > 0) --matchable_;
        for (VertexId w : g_.neighbors(v))
            if (is_free(w) && --free_deg_[w] == 0) --matchable_;
    }

    void unblock(VertexId v) {
        for (VertexId w : g_.neighbors(v))
            if (is_free(w) && free_deg_[w]++ == 0) ++matchable_;
        if (free_deg_[v] > 0) ++matchable_;
    }

    void record(int size) {
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (must_cover_[v] && !matched_[v]) return;
        if (size > best_) {
            best_ = size;
            count_ = 1;
        } else if (size == best_) {
            ++count_;
        }
    }

    void dfs(int size) {
        budget_.tick();
        // upper bound on what is still attainable
        if (size + matchable_ / 2 < best_) return;
        if (size_only_ && size + matchable_ / 2 <= best_) return;
        // branch vertex: free, matchable, fewest free neighbors
        VertexId v = -1;
        int vdeg = 0;
        for (VertexId u = 0; u < g_.vertex_count(); ++u) {
            if (!is_free(u) || free_deg_[u] == 0) continue;
            if (v == -1 || free_deg_[u] < vdeg) {
                v = u;
                vdeg = free_deg_[u];
                if (vdeg == 1) break;
            }
        }
        if (v == -1) {
            record(size);
            return;
        }
        matched_[v] = 1;
        block(v);
        for (VertexId u : g_.neighbors(v)) {
            if (!is_free(u)) continue;
            matched_[u] = 1;
            block(u);
            dfs(size + 1);
            unblock(u);
            matched_[u] = 0;
        }
        matched_[v] = 0;
        unblock(v);
        if (!must_cover_[v]) {
            skipped_[v] = 1;
            block(v);
            dfs(size);
            unblock(v);
            skipped_[v] = 0;
        }
    }

    const LabeledGraph& g_;
    SearchBudget& budget_;
    bool size_only_;
    std::vector<char> matched_, skipped_, must_cover_;
    std::vector<int> free_deg_;
    int matchable_ = 0;
    int best_ = -1;
    BigInt count_ = 0;
};

class DominationSearcher {
public:
    DominationSearcher(const LabeledGraph& g, const std::map<VertexId, DomConstraint>& cs,
                       SearchBudget& budget)
        : g_(g), budget_(budget) {
        const int v = g.vertex_count();
        closed_.resize(v);
        for (VertexId u = 0; u < v; ++u) {
            closed_[u] = g.neighbors(u);
            closed_[u].push_back(u);
            max_cov_ = std::max(max_cov_, static_cast<int>(closed_[u].size()));
        }
        banned_.assign(v, 0);
        chosen_.assign(v, 0);
        dominated_.assign(v, 0);
        for (auto [vid, c] : cs) {
            g.check_vertex(vid);
            if (c == DomConstraint::MustExclude) banned_[vid] = 1;
            else forced_.push_back(vid);
        }
    }

    ConditionedDominationResult run() {
        for (VertexId u : forced_) {
            if (banned_[u]) return {}; // contradictory constraints: infeasible
            if (!chosen_[u]) {
                chosen_[u] = 1;
                ++chosen_count_;
                for (VertexId w : closed_[u]) ++dominated_[w];
            }
        }
        for (int k = chosen_count_; k <= g_.vertex_count(); ++k) {
            limit_ = k;
            count_ = 0;
            dfs();
            if (count_ > 0) return {k, count_};
        }
        return {};
    }

private:
    void dfs() {
        budget_.tick();
        // undominated vertex with the fewest remaining dominator candidates
        VertexId v = -1;
        std::size_t vcands = 0;
        int undominated = 0;
        for (VertexId u = 0; u < g_.vertex_count(); ++u) {
            if (dominated_[u]) continue;
            ++undominated;
            std::size_t c = 0;
            for (VertexId w : closed_[u])
                if (!banned_[w] && !chosen_[w]) ++c;
            if (v == -1 || c < vcands) {
                v = u;
                vcands = c;
            }
        }
        if (v == -1) {
            if (chosen_count_ == limit_) ++count_;
            return;
        }
        if (chosen_count_ == limit_) return;
        if (undominated > (limit_ - chosen_count_) * max_cov_) return;
        if (vcands == 0) return;
        // Each completed set is reached once: the branch that picks u forbids
        // every earlier candidate in its subtree.
        std::vector<VertexId> tried;
        for (VertexId u : closed_[v]) {
            if (banned_[u] || chosen_[u]) continue;
            chosen_[u] = 1;
            ++chosen_count_;
            for (VertexId w : closed_[u]) ++dominated_[w];
            dfs();
            for (VertexId w : closed_[u]) --dominated_[w];
            --chosen_count_;
            chosen_[u] = 0;
            banned_[u] = 1;
            tried.push_back(u);
        }
        for (VertexId u : tried) banned_[u] = 0;
    }

    const LabeledGraph& g_;
    SearchBudget& budget_;
    std::vector<std::vector<VertexId>> closed_;
    std::vector<char> banned_, chosen_, dominated_;
    std::vector<VertexId> forced_;
    int chosen_count_ = 0;
    int max_cov_ = 0;
    int limit_ = 0;
    BigInt count_ = 0;
};

} // namespace detail

inline ConditionedMatchingResult max_matching_search(
    const LabeledGraph& g, const std::map<VertexId, MatchConstraint>& constraints = {},
    SearchBudget budget = SearchBudget()) {
    return detail::MatchingSearcher(g, constraints, budget, /*size_only=*/false).run();
}

// Size-only variant with stronger pruning; used where the count is infeasible.
inline std::optional<int> max_matching_size(
    const LabeledGraph& g, const std::map<VertexId, MatchConstraint>& constraints = {},
    SearchBudget budget = SearchBudget()) {
    return detail::MatchingSearcher(g, constraints, budget, /*size_only=*/true).run().max_size;
}

inline BigInt count_perfect_matchings(const LabeledGraph& g,
                                      SearchBudget budget = SearchBudget()) {
    if (g.vertex_count() % 2 != 0) return 0;
    std::map<VertexId, MatchConstraint> cover_all;
    for (VertexId v = 0; v < g.vertex_count(); ++v) cover_all[v] = MatchConstraint::MustCover;
    auto r = detail::MatchingSearcher(g, cover_all, budget, false).run();
    if (!r.max_size || *r.max_size != g.vertex_count() / 2) return 0;
    return r.count_at_max;
}

inline ConditionedDominationResult min_domination_search(
    const LabeledGraph& g, const std::map<VertexId, DomConstraint>& constraints = {},
    SearchBudget budget = SearchBudget()) {
    return detail::DominationSearcher(g, constraints, budget).run();
}

// Conditional maximum-matching data of A_n: sizes for 0..3 covered outmost
// vertices and the associated counts. The reported count for the all-covered
// class doubles as the number of maximum matchings once that class dominates.
struct OracleMatchingProfile {
    int n = 0;
    std::array<int, 4> beta{};        // sizes, k = 0..3 covered outmost
    std::array<BigInt, 4> counts{};   // varphi, theta, phi, tau
    int matching_number = 0;          // unconstrained maximum
    BigInt unconstrained_count = 0;   // maximum matchings with no condition
};

inline OracleMatchingProfile oracle_matching_profile(int n,
                                                     SearchBudget budget = SearchBudget()) {
    LabeledGraph g = gen_apollonian_iterative(n);
    auto [x, y, z] = g.outmost_ids();
    using MC = MatchConstraint;
    const std::array<std::map<VertexId, MC>, 4> patterns = {{
        {{x, MC::MustVacate}, {y, MC::MustVacate}, {z, MC::MustVacate}},
        {{x, MC::MustCover}, {y, MC::MustVacate}, {z, MC::MustVacate}},
        {{x, MC::MustCover}, {y, MC::MustCover}, {z, MC::MustVacate}},
        {{x, MC::MustCover}, {y, MC::MustCover}, {z, MC::MustCover}},
    }};
    OracleMatchingProfile p;
    p.n = n;
    for (int k = 0; k < 4; ++k) {
        auto r = detail::MatchingSearcher(g, patterns[k], budget, false).run();
        if (!r.max_size) throw InvariantError("constrained matching class empty");
        p.beta[k] = *r.max_size;
        p.counts[k] = r.count_at_max;
    }
    auto u = detail::MatchingSearcher(g, {}, budget, false).run();
    p.matching_number = *u.max_size;
    p.unconstrained_count = u.count_at_max;
    return p;
}

// Conditional domination data of A_n: sizes for 0..3 outmost vertices inside
// the dominating set, the MDS count w, and MDS counts x, y, z of the
// subgraphs with three, two, and one outmost vertices deleted.
struct OracleDominationProfile {
    int n = 0;
    std::array<int, 4> gamma{};
    int domination_number = 0;
    BigInt w = 0, x = 0, y = 0, z = 0;
};

inline OracleDominationProfile oracle_domination_profile(int n,
                                                         SearchBudget budget = SearchBudget()) {
    LabeledGraph g = gen_apollonian_iterative(n);
    auto [x, y, z] = g.outmost_ids();
    using DC = DomConstraint;
    const std::array<std::map<VertexId, DC>, 4> patterns = {{
        {{x, DC::MustExclude}, {y, DC::MustExclude}, {z, DC::MustExclude}},
        {{x, DC::MustInclude}, {y, DC::MustExclude}, {z, DC::MustExclude}},
        {{x, DC::MustInclude}, {y, DC::MustInclude}, {z, DC::MustExclude}},
        {{x, DC::MustInclude}, {y, DC::MustInclude}, {z, DC::MustInclude}},
    }};
    OracleDominationProfile p;
    p.n = n;
    for (int k = 0; k < 4; ++k) {
        auto r = detail::DominationSearcher(g, patterns[k], budget).run();
        if (!r.min_size) throw InvariantError("constrained domination class empty");
        p.gamma[k] = *r.min_size;
    }
    auto w = detail::DominationSearcher(g, {}, budget).run();
    p.domination_number = *w.min_size;
    p.w = w.count_at_min;
    auto sub = [&](std::vector<VertexId> del) {
        auto d = delete_vertices(g, del);
        return detail::DominationSearcher(d.graph, {}, budget).run().count_at_min;
    };
    p.x = sub({x, y, z});
    p.y = sub({x, y});
    p.z = sub({x});
    return p;
}

} // namespace fgc
