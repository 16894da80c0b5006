#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pagtc/beta.hpp"
#include "pagtc/centrality.hpp"
#include "pagtc/contagion.hpp"
#include "pagtc/graph.hpp"
#include "pagtc/parallel.hpp"

namespace pagtc {

/// Rule picking the node to activate externally after each round.
struct TargetingStrategy {
    enum class Kind { degree, greedy_one_round, greedy_full, pagtc_shapley, pagtc_truncated };

    Kind kind = Kind::pagtc_shapley;
    double c = 1.0;  // pagtc_truncated only

    static TargetingStrategy degree() { return {Kind::degree}; }
    static TargetingStrategy greedy_one_round() { return {Kind::greedy_one_round}; }
    static TargetingStrategy greedy_full() { return {Kind::greedy_full}; }
    static TargetingStrategy pagtc_shapley() { return {Kind::pagtc_shapley}; }
    static TargetingStrategy pagtc_truncated(double c) {
        TargetingStrategy s{Kind::pagtc_truncated, c};
        s.validate();
        return s;
    }

    void validate() const {
        if (kind == Kind::pagtc_truncated && !(c > 0.0 && c <= 1.0)) {
            throw std::invalid_argument("truncation fraction c must lie in (0, 1]");
        }
    }

    std::string describe() const {
        switch (kind) {
        case Kind::degree:
            return "degree";
        case Kind::greedy_one_round:
            return "greedy";
        case Kind::greedy_full:
            return "greedy-full";
        case Kind::pagtc_shapley:
            return "pagtc-shapley";
        case Kind::pagtc_truncated:
            return "pagtc-trunc:" + std::to_string(c);
        }
        return "?";
    }
};

struct TargetingTrace {
    std::size_t rounds = 0;
    std::vector<NodeId> chosen;              // externally activated, in order
    std::vector<std::size_t> active_history; // |T| after each round
};

/// Node to activate given the active set T (T != V).
inline NodeId choose_next(const Graph& g, const NodeSet& active, ContagionParams params,
                          const TargetingStrategy& strategy, std::size_t threads = 1) {
    params.validate();
    strategy.validate();
    const std::size_t n = g.node_count();
    if (active.size() >= n) {
        throw std::invalid_argument("choose_next: every node is already active");
    }

    switch (strategy.kind) {
    case TargetingStrategy::Kind::degree: {
        std::optional<NodeId> best;
        for (NodeId u = 0; u < n; ++u) {
            if (!active.contains(u) && (!best || g.degree(u) > g.degree(*best))) {
                best = u;
            }
        }
        return *best;
    }
    case TargetingStrategy::Kind::greedy_one_round: {
        const ContagionState state = ContagionState::from_seeds(g, active);
        std::optional<NodeId> best;
        std::int64_t best_gain = -1;
        for (NodeId u = 0; u < n; ++u) {
            if (active.contains(u)) {
                continue;
            }
            const std::int64_t gain = marginal_one_round(g, u, state, params);
            if (gain > best_gain) {
                best_gain = gain;
                best = u;
            }
        }
        return *best;
    }
    case TargetingStrategy::Kind::greedy_full: {
        const Cascade base(g, active, params);
        std::vector<NodeId> candidates;
        for (NodeId u = 0; u < n; ++u) {
            if (!active.contains(u)) {
                candidates.push_back(u);
            }
        }
        std::vector<std::int64_t> gains(candidates.size());
        parallel_for(candidates.size(), threads, [&](std::size_t i) { gains[i] = base.marginal(candidates[i]); });
        std::size_t best = 0;
        for (std::size_t i = 1; i < gains.size(); ++i) {
            if (gains[i] > gains[best]) {
                best = i;
            }
        }
        return candidates[best];
    }
    case TargetingStrategy::Kind::pagtc_shapley:
        return *shapley_pagtc(g, active, params).argmax();
    case TargetingStrategy::Kind::pagtc_truncated:
        return *semivalue_general_pagtc(g, active, params, BetaSpec::truncated_fraction(strategy.c, n, active.size()))
                    .argmax();
    }
    throw std::logic_error("unknown targeting strategy");
}

/// Dynamically targeted contagion from an empty active set. Each round runs
/// one synchronous contagion step and then, unless everything is already
/// active, activates the strategy's choice.
inline TargetingTrace run_targeted(const Graph& g, ContagionParams params, const TargetingStrategy& strategy,
                                   std::size_t threads = 1) {
    params.validate();
    strategy.validate();
    const std::size_t n = g.node_count();
    TargetingTrace trace;
    ContagionState state = ContagionState::from_seeds(g, NodeSet(n));
    while (state.active_count() < n) {
        state = step(g, state, params);
        if (state.active_count() < n) {
            const NodeId u = choose_next(g, state.active(), params, strategy, threads);
            state.activate(g, u);
            trace.chosen.push_back(u);
        }
        ++trace.rounds;
        trace.active_history.push_back(state.active_count());
    }
    return trace;
}

/// (round, active count) rows, rounds numbered from 1.
inline std::vector<std::pair<std::size_t, std::size_t>> growth_rows(const TargetingTrace& trace) {
    std::vector<std::pair<std::size_t, std::size_t>> rows;
    rows.reserve(trace.active_history.size());
    for (std::size_t i = 0; i < trace.active_history.size(); ++i) {
        rows.emplace_back(i + 1, trace.active_history[i]);
    }
    return rows;
}

/// Growth curve file: one "round active_count" pair per line.
inline void write_growth(const TargetingTrace& trace, std::ostream& out) {
    for (const auto& [round, active] : growth_rows(trace)) {
        out << round << ' ' << active << '\n';
    }
}

/// Chosen-node log: "round node label" per external activation. The i-th
/// activation happens at the end of round i.
inline void write_chosen(const Graph& g, const TargetingTrace& trace, std::ostream& out) {
    for (std::size_t i = 0; i < trace.chosen.size(); ++i) {
        out << i + 1 << ' ' << trace.chosen[i] << ' ' << g.label(trace.chosen[i]) << '\n';
    }
}

} // namespace pagtc
