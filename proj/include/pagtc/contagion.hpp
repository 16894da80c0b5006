#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pagtc/graph.hpp"

namespace pagtc {

/// A documented precondition of an operation was not met by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Threshold K of the complex contagion: an inactive node activates once at
/// least K of its neighbours are active.
struct ContagionParams {
    std::size_t k = 1;

    void validate() const {
        if (k < 1) {
            throw std::invalid_argument("contagion threshold K must be at least 1");
        }
    }
};

/// Active set T_k together with |N(v) ∩ T_k| for every node.
class ContagionState {
public:
    ContagionState() = default;

    static ContagionState from_seeds(const Graph& g, const NodeSet& seeds) {
        if (seeds.universe() != g.node_count()) {
            throw std::invalid_argument("seed set universe does not match the graph");
        }
        ContagionState st;
        st.active_ = NodeSet(g.node_count());
        st.counts_.assign(g.node_count(), 0);
        seeds.for_each([&](NodeId u) { st.activate(g, u); });
        return st;
    }

    const NodeSet& active() const noexcept { return active_; }
    std::size_t active_count() const noexcept { return active_.size(); }
    bool is_active(NodeId u) const noexcept { return active_.contains(u); }
    std::uint32_t active_neighbor_count(NodeId u) const { return counts_[u]; }
    std::span<const std::uint32_t> active_neighbor_counts() const noexcept { return counts_; }
    std::size_t round_index() const noexcept { return round_; }

    /// Activates u and updates the counters of its neighbours. Returns false
    /// if u was already active.
    bool activate(const Graph& g, NodeId u) {
        if (!active_.insert(u)) {
            return false;
        }
        for (NodeId v : g.neighbors(u)) {
            ++counts_[v];
        }
        return true;
    }

    /// Like activate, but appends to `crossed` every inactive neighbour whose
    /// counter reaches exactly k.
    bool activate(const Graph& g, NodeId u, std::size_t k, std::vector<NodeId>& crossed) {
        if (!active_.insert(u)) {
            return false;
        }
        for (NodeId v : g.neighbors(u)) {
            if (++counts_[v] == k && !active_.contains(v)) {
                crossed.push_back(v);
            }
        }
        return true;
    }

    void advance_round() noexcept { ++round_; }

private:
    NodeSet active_;
    std::vector<std::uint32_t> counts_;
    std::size_t round_ = 0;
};

/// One synchronous round: every inactive node with at least K active
/// neighbours becomes active.
inline ContagionState step(const Graph& g, const ContagionState& state, ContagionParams params) {
    params.validate();
    std::vector<NodeId> eligible;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!state.is_active(v) && state.active_neighbor_count(v) >= params.k) {
            eligible.push_back(v);
        }
    }
    ContagionState next = state;
    for (NodeId v : eligible) {
        next.activate(g, v);
    }
    next.advance_round();
    return next;
}

namespace detail {

// Runs synchronous rounds until no node changes, starting from the nodes in
// `frontier` (the only candidates that may be eligible). Each node enters a
// frontier at most once, so the whole run costs O(|E|) after the initial list.
inline void settle_from(const Graph& g, ContagionState& state, std::vector<NodeId> frontier, std::size_t k) {
    std::vector<NodeId> next;
    while (true) {
        std::erase_if(frontier, [&](NodeId v) {
            return state.is_active(v) || state.active_neighbor_count(v) < k;
        });
        if (frontier.empty()) {
            return;
        }
        next.clear();
        // All nodes in the frontier activate simultaneously; a node that
        // crosses the threshold during this round is deferred to the next.
        for (NodeId v : frontier) {
            state.activate(g, v, k, next);
        }
        state.advance_round();
        std::swap(frontier, next);
    }
}

} // namespace detail

/// Runs the dynamics to its fixed point. round_index grows by the number of
/// rounds that activated at least one node (at most n).
inline ContagionState settle(const Graph& g, ContagionState state, ContagionParams params) {
    params.validate();
    std::vector<NodeId> frontier;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!state.is_active(v) && state.active_neighbor_count(v) >= params.k) {
            frontier.push_back(v);
        }
    }
    detail::settle_from(g, state, std::move(frontier), params.k);
    return state;
}

/// nu_K(S): |S| plus the inactive nodes with at least K neighbours in S.
inline std::size_t one_round_influence(const Graph& g, const NodeSet& seeds, ContagionParams params) {
    params.validate();
    if (seeds.universe() != g.node_count()) {
        throw std::invalid_argument("seed set universe does not match the graph");
    }
    std::size_t influenced = seeds.size();
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (seeds.contains(v)) {
            continue;
        }
        std::size_t hits = 0;
        for (NodeId w : g.neighbors(v)) {
            if (seeds.contains(w) && ++hits >= params.k) {
                ++influenced;
                break;
            }
        }
    }
    return influenced;
}

/// nu_K*(S): size of the active set at the fixed point.
inline std::size_t full_influence(const Graph& g, const NodeSet& seeds, ContagionParams params) {
    return settle(g, ContagionState::from_seeds(g, seeds), params).active_count();
}

/// nu_K(u | S) in O(deg(u)), where `seeds` holds S with its counters.
inline std::int64_t marginal_one_round(const Graph& g, NodeId u, const ContagionState& seeds,
                                       ContagionParams params) {
    params.validate();
    if (seeds.is_active(u)) {
        throw ContractViolation("marginal_one_round: node " + std::to_string(u) + " is already a seed");
    }
    const std::size_t k = params.k;
    std::int64_t gain = seeds.active_neighbor_count(u) >= k ? 0 : 1;
    for (NodeId v : g.neighbors(u)) {
        if (!seeds.is_active(v) && seeds.active_neighbor_count(v) + 1 == k) {
            ++gain;
        }
    }
    return gain;
}

inline std::int64_t marginal_one_round(const Graph& g, NodeId u, const NodeSet& seeds, ContagionParams params) {
    return marginal_one_round(g, u, ContagionState::from_seeds(g, seeds), params);
}

/// Seed set S together with the fixed point of the dynamics started from S.
/// Marginal queries resume the cascade on a copy of the fixed point.
class Cascade {
public:
    Cascade(const Graph& g, NodeSet seeds, ContagionParams params)
        : graph_(&g), params_(params), seeds_(std::move(seeds)),
          fixed_point_(settle(g, ContagionState::from_seeds(g, seeds_), params)) {}

    const NodeSet& seeds() const noexcept { return seeds_; }
    const ContagionState& fixed_point() const noexcept { return fixed_point_; }
    ContagionParams params() const noexcept { return params_; }

    /// nu_K*(S).
    std::size_t value() const noexcept { return fixed_point_.active_count(); }

    /// nu_K*(S ∪ {u}) - nu_K*(S). Never mutates this cascade.
    std::int64_t marginal(NodeId u) const {
        if (seeds_.contains(u)) {
            throw ContractViolation("marginal_full: node " + std::to_string(u) + " is already a seed");
        }
        if (fixed_point_.is_active(u)) {
            return 0;
        }
        ContagionState scratch = fixed_point_;
        std::vector<NodeId> frontier;
        scratch.activate(*graph_, u, params_.k, frontier);
        detail::settle_from(*graph_, scratch, std::move(frontier), params_.k);
        return static_cast<std::int64_t>(scratch.active_count()) - static_cast<std::int64_t>(value());
    }

    /// Adds u to the seeds and advances the fixed point in place.
    void add_seed(NodeId u) {
        if (!seeds_.insert(u)) {
            return;
        }
        std::vector<NodeId> frontier;
        fixed_point_.activate(*graph_, u, params_.k, frontier);
        detail::settle_from(*graph_, fixed_point_, std::move(frontier), params_.k);
    }

private:
    const Graph* graph_;
    ContagionParams params_;
    NodeSet seeds_;
    ContagionState fixed_point_;
};

inline std::int64_t marginal_full(NodeId u, const Cascade& base) { return base.marginal(u); }

inline std::int64_t marginal_full(const Graph& g, NodeId u, const NodeSet& seeds, ContagionParams params) {
    if (seeds.contains(u)) {
        throw ContractViolation("marginal_full: node " + std::to_string(u) + " is already a seed");
    }
    return Cascade(g, seeds, params).marginal(u);
}

} // namespace pagtc
