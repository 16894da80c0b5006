#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pagtc/beta.hpp"
#include "pagtc/binomial.hpp"
#include "pagtc/centrality.hpp"
#include "pagtc/contagion.hpp"
#include "pagtc/graph.hpp"
#include "pagtc/parallel.hpp"

// Reference evaluations of the past-aware centrality straight from its
// definition: exhaustive enumeration in exact arithmetic, and sampling.

namespace pagtc {

inline constexpr std::size_t kDefaultEnumerationGuard = 22;

/// totals[s] = sum of nu_K(u | S) over all S with S0 ⊆ S ⊆ V \ {u}, |S| = s.
inline std::vector<std::uint64_t> brute_force_profile(const Graph& g, const NodeSet& s0, ContagionParams params,
                                                      NodeId u,
                                                      std::size_t guard = kDefaultEnumerationGuard) {
    params.validate();
    const std::size_t n = g.node_count();
    if (n > guard || n > 63) {
        throw std::invalid_argument("brute-force oracle limited to n <= " + std::to_string(std::min<std::size_t>(guard, 63)) +
                                    " (graph has " + std::to_string(n) + " nodes)");
    }
    if (s0.universe() != n) {
        throw std::invalid_argument("conditioning set universe does not match the graph");
    }
    if (u >= n) {
        throw std::out_of_range("node outside the graph");
    }
    if (s0.contains(u)) {
        throw std::invalid_argument("brute-force oracle: node " + std::to_string(u) + " is in S0");
    }

    std::vector<std::uint64_t> adj(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId w : g.neighbors(v)) {
            adj[v] |= std::uint64_t{1} << w;
        }
    }
    std::uint64_t s0_mask = 0;
    s0.for_each([&](NodeId v) { s0_mask |= std::uint64_t{1} << v; });
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t free_mask = all & ~s0_mask & ~(std::uint64_t{1} << u);
    const auto k = static_cast<int>(params.k);
    const auto nbrs = g.neighbors(u);

    std::vector<std::uint64_t> totals(n, 0);
    std::uint64_t sub = 0;
    while (true) {
        const std::uint64_t set = s0_mask | sub;
        std::uint64_t gain = std::popcount(adj[u] & set) < k ? 1 : 0;
        for (NodeId v : nbrs) {
            if (!((set >> v) & 1U) && std::popcount(adj[v] & set) == k - 1) {
                ++gain;
            }
        }
        totals[static_cast<std::size_t>(std::popcount(set))] += gain;
        if (sub == free_mask) {
            break;
        }
        sub = (sub - free_mask) & free_mask;  // next subset of free_mask
    }
    return totals;
}

/// Combines a size profile into the semivalue score, exactly.
inline Rational score_from_profile(const std::vector<std::uint64_t>& totals, std::size_t s0_size,
                                   const BetaSpec& beta) {
    const std::size_t n = totals.size();
    const std::vector<Rational> w = beta.weights<Rational>(n);
    Rational sum(0);
    for (std::size_t s = s0_size; s < n; ++s) {
        if (totals[s] == 0 || w[s] == 0) {
            continue;
        }
        Rational term(BigInt(static_cast<unsigned long>(totals[s])), binomial_exact(static_cast<std::int64_t>(n - 1),
                                                                                   static_cast<std::int64_t>(s)));
        term.canonicalize();
        sum += w[s] * term;
    }
    return c_beta<Rational>(n, s0_size, beta) * sum;
}

/// phi^beta(u | S0) by enumerating every admissible coalition.
inline Rational brute_force_pagtc(const Graph& g, const NodeSet& s0, ContagionParams params, const BetaSpec& beta,
                                  NodeId u, std::size_t guard = kDefaultEnumerationGuard) {
    beta.validate(g.node_count());
    return score_from_profile(brute_force_profile(g, s0, params, u, guard), s0.size(), beta);
}

struct MonteCarloEstimate {
    ScoreVector<double> mean;
    std::vector<double> standard_error;
    std::size_t samples = 0;
};

/// Unbiased sampling estimate of phi^beta(u | S0) for every u outside S0.
///
/// Each node draws from its own generator seeded by (rng_seed, u), so the
/// result does not depend on the number of threads.
inline MonteCarloEstimate monte_carlo_pagtc(const Graph& g, const NodeSet& s0, ContagionParams params,
                                            const BetaSpec& beta, std::size_t samples, std::uint64_t rng_seed,
                                            std::size_t threads = 1) {
    params.validate();
    detail::check_conditioning_set(g, s0);
    if (samples < 1) {
        throw std::invalid_argument("monte carlo needs at least one sample");
    }
    const std::size_t n = g.node_count();
    const std::size_t k0 = s0.size();
    const std::vector<double> w = beta.weights<double>(n);

    // Conditional law of |S| given S ⊇ S0.
    const BinomialRatio<double> ratio(n + 1);
    std::vector<double> size_mass(n - k0, 0.0);
    double total_mass = 0.0;
    for (std::size_t s = k0; s < n; ++s) {
        if (w[s] > 0.0) {
            size_mass[s - k0] = w[s] * ratio({{static_cast<std::int64_t>(n - 1 - k0), static_cast<std::int64_t>(s - k0)}},
                                             {{static_cast<std::int64_t>(n - 1), static_cast<std::int64_t>(s)}});
            total_mass += size_mass[s - k0];
        }
    }
    if (!(total_mass > 0.0)) {
        throw std::invalid_argument("beta puts no mass on coalition sizes >= |S0|");
    }

    MonteCarloEstimate est{ScoreVector<double>(n, {params.k, k0, beta.describe()}), std::vector<double>(n, 0.0), samples};
    std::vector<double> means(n, 0.0);
    std::vector<NodeId> nodes;
    for (NodeId u = 0; u < n; ++u) {
        if (!s0.contains(u)) {
            nodes.push_back(u);
        }
    }

    parallel_for(nodes.size(), threads, [&](std::size_t idx) {
        const NodeId u = nodes[idx];
        std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                          static_cast<std::uint32_t>(u)};
        std::mt19937_64 rng(seq);
        std::discrete_distribution<std::size_t> pick_size(size_mass.begin(), size_mass.end());

        std::vector<NodeId> pool;
        for (NodeId v = 0; v < n; ++v) {
            if (v != u && !s0.contains(v)) {
                pool.push_back(v);
            }
        }
        std::vector<char> in_set(n, 0);
        s0.for_each([&](NodeId v) { in_set[v] = 1; });
        auto count_in = [&](NodeId v) {
            std::size_t c = 0;
            for (NodeId x : g.neighbors(v)) {
                c += static_cast<std::size_t>(in_set[x]);
            }
            return c;
        };

        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::size_t draw = 0; draw < samples; ++draw) {
            const std::size_t extra = pick_size(rng);
            // Partial Fisher-Yates: the first `extra` pool entries form S \ S0.
            for (std::size_t i = 0; i < extra; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
                std::swap(pool[i], pool[pick(rng)]);
                in_set[pool[i]] = 1;
            }
            double gain = count_in(u) < params.k ? 1.0 : 0.0;
            for (NodeId v : g.neighbors(u)) {
                if (!in_set[v] && count_in(v) + 1 == params.k) {
                    gain += 1.0;
                }
            }
            sum += gain;
            sum_sq += gain * gain;
            for (std::size_t i = 0; i < extra; ++i) {
                in_set[pool[i]] = 0;
            }
        }
        const auto m = static_cast<double>(samples);
        const double mean = sum / m;
        means[u] = mean;
        if (samples > 1) {
            const double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1.0));
            est.standard_error[u] = std::sqrt(var / m);
        }
    });

    for (NodeId u : nodes) {
        est.mean.set(u, means[u]);
    }
    return est;
}

} // namespace pagtc
