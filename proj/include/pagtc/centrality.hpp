#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "pagtc/beta.hpp"
#include "pagtc/binomial.hpp"
#include "pagtc/contagion.hpp"
#include "pagtc/graph.hpp"

// Past-aware semivalue centrality for the one-round influence nu_K.
//
// For a conditioning set S0 and a node u outside it, the score is the
// expected marginal gain nu_K(u | S) over random coalitions S ⊇ S0 drawn
// from the semivalue law. Only nodes adjacent to u (and u itself) can change
// state when u joins S, which makes every score a short sum of binomial
// ratios over N[u].

namespace pagtc {

struct ScoreContext {
    std::size_t k = 1;
    std::size_t s0_size = 0;
    std::string beta;
};

/// Per-node scores; nodes of the conditioning set have no score.
template <typename Real>
class ScoreVector {
public:
    ScoreVector() = default;
    ScoreVector(std::size_t n, ScoreContext context)
        : scores_(n, Real(0)), defined_(n, 0), context_(std::move(context)) {}

    std::size_t size() const noexcept { return scores_.size(); }
    const ScoreContext& context() const noexcept { return context_; }

    bool defined(NodeId u) const { return u < defined_.size() && defined_[u] != 0; }

    const Real& at(NodeId u) const {
        if (!defined(u)) {
            throw std::out_of_range("no score for node " + std::to_string(u) + " (in the conditioning set)");
        }
        return scores_[u];
    }

    void set(NodeId u, Real value) {
        scores_[u] = std::move(value);
        defined_[u] = 1;
    }

    std::size_t defined_count() const {
        return static_cast<std::size_t>(std::count(defined_.begin(), defined_.end(), char{1}));
    }

    /// Highest score, ties towards the smallest id. For floating point,
    /// scores within rel_tol (relative to max(1, |best|)) of the best count as ties.
    std::optional<NodeId> argmax(double rel_tol = 1e-12) const {
        std::optional<NodeId> best;
        for (NodeId u = 0; u < scores_.size(); ++u) {
            if (defined_[u] && (!best || scores_[u] > scores_[*best])) {
                best = u;
            }
        }
        if (!best || !std::is_floating_point_v<Real>) {
            return best;
        }
        const double top = to_double(scores_[*best]);
        const double slack = rel_tol * std::max(1.0, std::abs(top));
        for (NodeId u = 0; u < *best; ++u) {
            if (defined_[u] && to_double(scores_[u]) >= top - slack) {
                return u;
            }
        }
        return best;
    }

    /// Defined nodes by descending score, then ascending id.
    std::vector<NodeId> ranking() const {
        std::vector<NodeId> order;
        for (NodeId u = 0; u < scores_.size(); ++u) {
            if (defined_[u]) {
                order.push_back(u);
            }
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](NodeId a, NodeId b) { return scores_[a] > scores_[b]; });
        return order;
    }

private:
    std::vector<Real> scores_;
    std::vector<char> defined_;
    ScoreContext context_;
};

/// Local quantities of every node relative to a conditioning set S0:
/// outside[v] = |N(v) \ S0| and slack[v] = K - 1 - |N(v) ∩ S0|, the number of
/// further active neighbours v can take without being influenced.
struct NodeLocalStats {
    std::vector<std::int64_t> outside;
    std::vector<std::int64_t> slack;
    std::size_t s0_size = 0;

    static NodeLocalStats compute(const Graph& g, const NodeSet& s0, ContagionParams params) {
        NodeLocalStats st;
        const std::size_t n = g.node_count();
        st.outside.resize(n);
        st.slack.resize(n);
        st.s0_size = s0.size();
        for (NodeId v = 0; v < n; ++v) {
            std::int64_t inside = 0;
            for (NodeId w : g.neighbors(v)) {
                inside += s0.contains(w) ? 1 : 0;
            }
            st.outside[v] = static_cast<std::int64_t>(g.degree(v)) - inside;
            st.slack[v] = static_cast<std::int64_t>(params.k) - 1 - inside;
        }
        return st;
    }

    /// Moves x into S0; only the neighbours of x change.
    void add_to_s0(const Graph& g, NodeId x) {
        for (NodeId v : g.neighbors(x)) {
            --outside[v];
            --slack[v];
        }
        ++s0_size;
    }
};

namespace detail {

inline void check_conditioning_set(const Graph& g, const NodeSet& s0) {
    if (s0.universe() != g.node_count()) {
        throw std::invalid_argument("conditioning set universe does not match the graph");
    }
    if (s0.size() >= g.node_count()) {
        throw std::invalid_argument("conditioning set must leave at least one node outside");
    }
}

template <typename Real>
Real fraction(std::int64_t p, std::int64_t q) {
    return BinomialRatio<Real>::from_ratio(p, q);
}

// Per-call memo for the Dirac terms. Both terms only depend on the pair
// (outside, slack) of a node, and slack is capped by K - 1 where it matters,
// so a step needs at most (max degree + 1) * K distinct binomial ratios.
template <typename Real>
struct DiracScratch {
    std::vector<Real> neighbour_term;  // per node
    std::vector<Real> self_table;      // [outside][min(outside, slack)]
    std::vector<Real> neighbour_table; // [outside][slack]
    std::vector<char> self_known;
    std::vector<char> neighbour_known;
};

// Dirac-semivalue scores for coalition size s, given precomputed local stats.
template <typename Real>
void dirac_scores_into(const Graph& g, const NodeLocalStats& st, const NodeSet& s0, std::size_t k, std::size_t s,
                       const BinomialRatio<Real>& ratio, DiracScratch<Real>& scratch, ScoreVector<Real>& out) {
    const auto n = static_cast<std::int64_t>(g.node_count());
    const auto s0_size = static_cast<std::int64_t>(st.s0_size);
    const auto size = static_cast<std::int64_t>(s);
    const std::int64_t free = n - 1 - s0_size;  // candidates for S \ S0
    const std::int64_t picked = size - s0_size;  // |S \ S0|
    const std::int64_t unpicked = n - 1 - size;
    const auto width = static_cast<std::int64_t>(k);
    const std::size_t cells = (g.max_degree() + 1) * k;

    scratch.self_table.assign(cells, Real(0));
    scratch.neighbour_table.assign(cells, Real(0));
    scratch.self_known.assign(cells, 0);
    scratch.neighbour_known.assign(cells, 0);

    // Probability that a neighbour v of u sits at exactly K-1 active
    // neighbours, u excluded, and is not itself in S. Vanishes for slack < 0.
    auto neighbour = [&](std::int64_t sv, std::int64_t rv) -> Real {
        const auto cell = static_cast<std::size_t>(sv * width + rv);
        if (!scratch.neighbour_known[cell]) {
            Real t = ratio({{unpicked, sv - rv}, {picked, rv}}, {{free, sv}});
            if (t != Real(0)) {
                t *= fraction<Real>(sv - rv, sv);
            }
            scratch.neighbour_table[cell] = std::move(t);
            scratch.neighbour_known[cell] = 1;
        }
        return scratch.neighbour_table[cell];
    };
    // u itself counts when fewer than K of its neighbours are in S.
    auto self = [&](std::int64_t su, std::int64_t m) -> Real {
        const auto cell = static_cast<std::size_t>(su * width + m);
        if (!scratch.self_known[cell]) {
            Real sum(0);
            for (std::int64_t j = 0; j <= m; ++j) {
                sum += ratio({{unpicked, su - j}, {picked, j}}, {{free, su}});
            }
            scratch.self_table[cell] = std::move(sum);
            scratch.self_known[cell] = 1;
        }
        return scratch.self_table[cell];
    };

    scratch.neighbour_term.assign(g.node_count(), Real(0));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const std::int64_t sv = st.outside[v];
        const std::int64_t rv = st.slack[v];
        if (s0.contains(v) || g.degree(v) < k || sv < 1 || rv < 0) {
            continue;
        }
        scratch.neighbour_term[v] = neighbour(sv, rv);
    }

    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (s0.contains(u)) {
            continue;
        }
        const std::int64_t m = std::min(st.outside[u], st.slack[u]);
        Real score = m >= 0 ? self(st.outside[u], m) : Real(0);
        for (NodeId v : g.neighbors(u)) {
            score += scratch.neighbour_term[v];
        }
        out.set(u, std::move(score));
    }
}

} // namespace detail

/// Normalizing constant 1 / P[S ⊇ S0] of the semivalue law.
template <typename Real = double>
Real c_beta(std::size_t n, std::size_t s0_size, const BetaSpec& beta) {
    if (n == 0 || s0_size > n - 1) {
        throw std::invalid_argument("c_beta needs 0 <= |S0| <= n - 1");
    }
    const std::vector<Real> w = beta.weights<Real>(n);
    const auto top = static_cast<std::int64_t>(n - 1);
    const auto k = static_cast<std::int64_t>(s0_size);
    Real mass(0);
    if constexpr (std::is_same_v<Real, Rational>) {
        // C(n-1-k, s-k) / C(n-1, s) = s!/(s-k)! / ((n-1)!/(n-1-k)!); sum the
        // falling factorials exactly and divide once.
        BigInt falling = 1;  // s!/(s-k)! at s = k
        for (std::int64_t i = 2; i <= k; ++i) {
            falling *= static_cast<unsigned long>(i);
        }
        for (std::int64_t s = k; s <= top; ++s) {
            if (s > k) {
                falling *= static_cast<unsigned long>(s);
                mpz_divexact_ui(falling.get_mpz_t(), falling.get_mpz_t(), static_cast<unsigned long>(s - k));
            }
            if (w[static_cast<std::size_t>(s)] != 0) {
                mass += w[static_cast<std::size_t>(s)] * Rational(falling);
            }
        }
        BigInt denominator = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            denominator *= static_cast<unsigned long>(top - i);
        }
        mass /= Rational(denominator);
    } else {
        const BinomialRatio<Real> ratio(n);
        for (std::int64_t s = k; s <= top; ++s) {
            const Real& ws = w[static_cast<std::size_t>(s)];
            if (ws != Real(0)) {
                mass += ws * ratio({{top - k, s - k}}, {{top, s}});
            }
        }
    }
    if (mass == Real(0)) {
        throw std::invalid_argument("beta puts no mass on coalition sizes >= |S0| = " + std::to_string(s0_size));
    }
    return Real(1) / mass;
}

/// Shapley past-aware centrality of every node outside S0, in O(|E|) binomial
/// ratios.
template <typename Real = double>
ScoreVector<Real> shapley_pagtc(const Graph& g, const NodeSet& s0, ContagionParams params) {
    params.validate();
    detail::check_conditioning_set(g, s0);
    const NodeLocalStats st = NodeLocalStats::compute(g, s0, params);
    const BinomialRatio<Real> ratio(g.node_count() + 1);
    const auto k0 = static_cast<std::int64_t>(s0.size());
    const std::size_t n = g.node_count();

    std::vector<Real> self_term(n, Real(0));
    std::vector<Real> neighbour_term(n, Real(0));
    for (NodeId v = 0; v < n; ++v) {
        if (s0.contains(v)) {
            continue;
        }
        const std::int64_t sv = st.outside[v];
        const std::int64_t rv = st.slack[v];
        const Real scale = detail::fraction<Real>(1, k0 + sv + 1);
        self_term[v] = ratio({{k0 + 1 + std::min(sv, rv), k0 + 1}}, {{k0 + sv, k0}}) * scale;
        if (g.degree(v) >= params.k) {
            Real t = ratio({{sv - 1, rv}}, {{k0 + sv, k0 + rv}});
            if (t != Real(0)) {
                neighbour_term[v] = t * scale;
            }
        }
    }

    ScoreVector<Real> out(n, {params.k, s0.size(), "shapley"});
    const Real outer(static_cast<long>(k0 + 1));
    for (NodeId u = 0; u < n; ++u) {
        if (s0.contains(u)) {
            continue;
        }
        Real sum = self_term[u];
        for (NodeId v : g.neighbors(u)) {
            sum += neighbour_term[v];
        }
        out.set(u, outer * sum);
    }
    return out;
}

/// Past-aware centrality for beta = delta_s: the mean of nu_K(u | S) over
/// S ⊇ S0 with |S| = s. O(K |E|) binomial ratios.
template <typename Real = double>
ScoreVector<Real> semivalue_dirac_pagtc(const Graph& g, const NodeSet& s0, ContagionParams params, std::size_t s) {
    params.validate();
    detail::check_conditioning_set(g, s0);
    if (s < s0.size() || s > g.node_count() - 1) {
        throw std::invalid_argument("dirac coalition size must lie in [|S0|, n-1]");
    }
    const NodeLocalStats st = NodeLocalStats::compute(g, s0, params);
    const BinomialRatio<Real> ratio(g.node_count() + 1);
    detail::DiracScratch<Real> scratch;
    ScoreVector<Real> out(g.node_count(), {params.k, s0.size(), BetaSpec::dirac(s).describe()});
    detail::dirac_scores_into(g, st, s0, params.k, s, ratio, scratch, out);
    return out;
}

/// Past-aware centrality for an arbitrary semivalue. O(n (n K + |E|)).
template <typename Real = double>
ScoreVector<Real> semivalue_general_pagtc(const Graph& g, const NodeSet& s0, ContagionParams params,
                                          const BetaSpec& beta, bool apply_c_beta = true) {
    params.validate();
    detail::check_conditioning_set(g, s0);
    const std::size_t n = g.node_count();
    const std::vector<Real> w = beta.weights<Real>(n);
    const Real normalizer = c_beta<Real>(n, s0.size(), beta);
    const NodeLocalStats st = NodeLocalStats::compute(g, s0, params);
    const BinomialRatio<Real> ratio(n + 1);

    const auto top = static_cast<std::int64_t>(n - 1);
    const auto k0 = static_cast<std::int64_t>(s0.size());
    const std::int64_t free = top - k0;

    // Weighted counts of coalitions in which neighbour v of u sits at exactly
    // K-1 active neighbours (u excluded) and is outside S.
    std::vector<Real> neighbour_term(n, Real(0));
    for (NodeId v = 0; v < n; ++v) {
        const std::int64_t sv = st.outside[v];
        const std::int64_t rv = st.slack[v];
        if (s0.contains(v) || g.degree(v) < params.k || binomial_is_zero(sv - 1, rv)) {
            continue;
        }
        Real acc(0);
        for (std::int64_t s = k0; s <= top; ++s) {
            const Real& ws = w[static_cast<std::size_t>(s)];
            if (ws == Real(0)) {
                continue;
            }
            acc += ws * ratio({{sv - 1, rv}, {free - sv, s - k0 - rv}}, {{top, s}});
        }
        neighbour_term[v] = std::move(acc);
    }

    ScoreVector<Real> out(n, {params.k, s0.size(), beta.describe()});
    for (NodeId u = 0; u < n; ++u) {
        if (s0.contains(u)) {
            continue;
        }
        const std::int64_t su = st.outside[u];
        const std::int64_t m = std::min(su, st.slack[u]);
        Real score(0);
        for (std::int64_t s = k0; s <= top; ++s) {
            const Real& ws = w[static_cast<std::size_t>(s)];
            if (ws == Real(0)) {
                continue;
            }
            Real count(0);
            for (std::int64_t j = 0; j <= m; ++j) {
                count += ratio({{su, j}, {free - su, s - k0 - j}}, {{top, s}});
            }
            score += ws * count;
        }
        for (NodeId v : g.neighbors(u)) {
            score += neighbour_term[v];
        }
        out.set(u, apply_c_beta ? Real(normalizer * score) : score);
    }
    return out;
}

/// Shapley centrality of nu_K without conditioning.
template <typename Real = double>
ScoreVector<Real> gtc_closed_form(const Graph& g, ContagionParams params) {
    params.validate();
    const auto k = static_cast<std::int64_t>(params.k);
    const std::size_t n = g.node_count();
    std::vector<Real> neighbour_term(n, Real(0));
    for (NodeId v = 0; v < n; ++v) {
        const auto d = static_cast<std::int64_t>(g.degree(v));
        if (d + 1 > k) {
            neighbour_term[v] = detail::fraction<Real>(d + 1 - k, d * (d + 1));
        }
    }
    ScoreVector<Real> out(n, {params.k, 0, "shapley"});
    for (NodeId u = 0; u < n; ++u) {
        const auto d = static_cast<std::int64_t>(g.degree(u));
        Real score = k >= d + 1 ? Real(1) : detail::fraction<Real>(k, d + 1);
        for (NodeId v : g.neighbors(u)) {
            score += neighbour_term[v];
        }
        out.set(u, std::move(score));
    }
    return out;
}

} // namespace pagtc
