#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pagtc/binomial.hpp"
#include "pagtc/centrality.hpp"
#include "pagtc/contagion.hpp"
#include "pagtc/graph.hpp"
#include "pagtc/parallel.hpp"

namespace pagtc {

enum class Objective { one_round, full };

inline std::string to_string(Objective o) { return o == Objective::one_round ? "one-round" : "full"; }

/// Choose `budget` seeds maximizing nu_K (one_round) or nu_K* (full).
struct SeedProblem {
    Objective objective = Objective::one_round;
    std::size_t budget = 1;
    ContagionParams params;

    void validate(const Graph& g) const {
        params.validate();
        if (budget == 0 || budget >= g.node_count()) {
            throw std::invalid_argument("budget r must satisfy 0 < r < n = " + std::to_string(g.node_count()));
        }
    }
};

struct SeedSolution {
    std::vector<NodeId> seeds;  // selection order
    std::size_t one_round_value = 0;
    std::size_t full_value = 0;
    std::string algorithm;
    std::chrono::duration<double> runtime{0};

    /// Value of the problem's own objective.
    std::size_t value(Objective o) const { return o == Objective::one_round ? one_round_value : full_value; }
};

inline constexpr std::uint64_t kDefaultSubsetGuard = 10'000'000;

namespace detail {

inline SeedSolution finish(const Graph& g, const SeedProblem& problem, std::vector<NodeId> seeds, std::string algorithm,
                           std::chrono::steady_clock::time_point start) {
    SeedSolution sol;
    sol.runtime = std::chrono::steady_clock::now() - start;
    const NodeSet set = NodeSet::of(g.node_count(), seeds);
    sol.seeds = std::move(seeds);
    sol.one_round_value = one_round_influence(g, set, problem.params);
    sol.full_value = full_influence(g, set, problem.params);
    sol.algorithm = std::move(algorithm);
    return sol;
}

// Index of the largest gain; the first (smallest id) wins ties.
inline std::size_t first_argmax(const std::vector<std::int64_t>& gains) {
    return static_cast<std::size_t>(std::max_element(gains.begin(), gains.end()) - gains.begin());
}

} // namespace detail

/// Plain greedy on nu_K (O(r |E|)) or, for the full objective, on nu_K*
/// with cascade resumption from the fixed point of the current seeds.
inline SeedSolution greedy_select(const Graph& g, const SeedProblem& problem, std::size_t threads = 1) {
    problem.validate(g);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = g.node_count();
    std::vector<NodeId> chosen;
    std::vector<NodeId> candidates;
    std::vector<std::int64_t> gains;

    auto refresh_candidates = [&](const NodeSet& seeds) {
        candidates.clear();
        for (NodeId u = 0; u < n; ++u) {
            if (!seeds.contains(u)) {
                candidates.push_back(u);
            }
        }
        gains.assign(candidates.size(), 0);
    };

    if (problem.objective == Objective::one_round) {
        ContagionState state = ContagionState::from_seeds(g, NodeSet(n));
        for (std::size_t step = 0; step < problem.budget; ++step) {
            refresh_candidates(state.active());
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                gains[i] = marginal_one_round(g, candidates[i], state, problem.params);
            }
            const NodeId best = candidates[detail::first_argmax(gains)];
            state.activate(g, best);
            chosen.push_back(best);
        }
        return detail::finish(g, problem, std::move(chosen), "greedy", start);
    }

    Cascade base(g, NodeSet(n), problem.params);
    for (std::size_t step = 0; step < problem.budget; ++step) {
        refresh_candidates(base.seeds());
        parallel_for(candidates.size(), threads, [&](std::size_t i) { gains[i] = base.marginal(candidates[i]); });
        const NodeId best = candidates[detail::first_argmax(gains)];
        base.add_seed(best);
        chosen.push_back(best);
    }
    return detail::finish(g, problem, std::move(chosen), "greedy*", start);
}

/// At step k, picks the node of highest past-aware Dirac semivalue
/// phi^{delta_{r-1}}(u | S_{k-1}): the expected gain in a final seed set of
/// size r that contains the seeds chosen so far. O(r K |E|).
///
/// The selection only depends on nu_K; the same seeds are reported against
/// both objectives.
template <typename Real = double>
SeedSolution pagtc_delta_select(const Graph& g, const SeedProblem& problem) {
    problem.validate(g);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = g.node_count();
    const std::size_t coalition = problem.budget - 1;

    NodeSet s0(n);
    NodeLocalStats stats = NodeLocalStats::compute(g, s0, problem.params);
    const BinomialRatio<Real> ratio(n + 1);
    detail::DiracScratch<Real> scratch;
    std::vector<NodeId> chosen;
    for (std::size_t step = 0; step < problem.budget; ++step) {
        ScoreVector<Real> scores(n, {problem.params.k, s0.size(), BetaSpec::dirac(coalition).describe()});
        detail::dirac_scores_into(g, stats, s0, problem.params.k, coalition, ratio, scratch, scores);
        const NodeId best = *scores.argmax();
        s0.insert(best);
        stats.add_to_s0(g, best);
        chosen.push_back(best);
    }
    return detail::finish(g, problem, std::move(chosen), "pagtc-delta", start);
}

/// Static baseline: the r nodes of largest degree, ties by smallest id.
inline SeedSolution degree_select(const Graph& g, const SeedProblem& problem) {
    problem.validate(g);
    const auto start = std::chrono::steady_clock::now();
    std::vector<NodeId> order(g.node_count());
    for (NodeId u = 0; u < order.size(); ++u) {
        order[u] = u;
    }
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    order.resize(problem.budget);
    return detail::finish(g, problem, std::move(order), "degree", start);
}

/// Exhaustive search over all r-subsets, in lexicographic order; returns the
/// lexicographically smallest maximizer. Refuses when C(n, r) > guard.
inline SeedSolution optimal_bruteforce(const Graph& g, const SeedProblem& problem,
                                       std::uint64_t guard = kDefaultSubsetGuard) {
    problem.validate(g);
    const std::size_t n = g.node_count();
    const std::size_t r = problem.budget;
    const BigInt subsets = binomial_exact(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r));
    if (subsets > BigInt(static_cast<unsigned long>(guard))) {
        throw std::invalid_argument("exhaustive search over C(" + std::to_string(n) + ", " + std::to_string(r) +
                                    ") = " + subsets.get_str() + " subsets exceeds the guard of " +
                                    std::to_string(guard) + "; use a heuristic (greedy, pagtc-delta) instead");
    }
    const auto start = std::chrono::steady_clock::now();
    const std::size_t k = problem.params.k;

    std::vector<std::uint32_t> count(n, 0);
    std::vector<char> in_set(n, 0);
    std::size_t influenced = 0;  // nodes outside S with at least k neighbours in S
    std::vector<NodeId> current;
    std::vector<NodeId> best_set;
    std::size_t best_value = 0;
    bool have_best = false;

    auto add = [&](NodeId x) {
        if (count[x] >= k) {
            --influenced;
        }
        in_set[x] = 1;
        for (NodeId v : g.neighbors(x)) {
            if (++count[v] == k && !in_set[v]) {
                ++influenced;
            }
        }
        current.push_back(x);
    };
    auto remove = [&](NodeId x) {
        for (NodeId v : g.neighbors(x)) {
            if (count[v]-- == k && !in_set[v]) {
                --influenced;
            }
        }
        in_set[x] = 0;
        if (count[x] >= k) {
            ++influenced;
        }
        current.pop_back();
    };
    auto evaluate = [&]() -> std::size_t {
        if (problem.objective == Objective::one_round) {
            return r + influenced;
        }
        return full_influence(g, NodeSet::of(n, current), problem.params);
    };

    // Iterative DFS over increasing index sequences.
    std::vector<NodeId> next_pick{0};
    while (!next_pick.empty()) {
        const std::size_t depth = next_pick.size() - 1;
        NodeId& cand = next_pick.back();
        // Prune branches that cannot be completed to r nodes.
        if (cand + (r - depth) > n) {
            next_pick.pop_back();
            if (!current.empty()) {
                remove(current.back());
            }
            continue;
        }
        const NodeId x = cand++;
        add(x);
        if (current.size() == r) {
            const std::size_t value = evaluate();
            if (!have_best || value > best_value) {
                best_value = value;
                best_set = current;
                have_best = true;
            }
            remove(x);
        } else {
            next_pick.push_back(x + 1);
        }
    }
    return detail::finish(g, problem, std::move(best_set), "optimal", start);
}

} // namespace pagtc
