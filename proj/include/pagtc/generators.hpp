#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "pagtc/graph.hpp"

namespace pagtc {

struct SmallWorldParams {
    std::size_t side = 5;
    std::size_t long_range_per_node = 1;
    double exponent = 2.0;
    std::uint64_t seed = 0;
};

/// Kleinberg navigable small world on a side x side lattice.
///
/// Every node is joined to its 4 lattice neighbours and draws
/// long_range_per_node targets (with replacement) among all other nodes with
/// probability proportional to manhattan_distance^-exponent. Draws are
/// symmetrized; duplicates and draws landing on lattice neighbours collapse.
inline Graph generate_navigable_small_world(const SmallWorldParams& p) {
    if (p.side < 2) {
        throw std::invalid_argument("small-world side must be at least 2");
    }
    if (!(p.exponent >= 0.0) || !std::isfinite(p.exponent)) {
        throw std::invalid_argument("small-world exponent must be finite and non-negative");
    }
    const std::size_t side = p.side;
    const std::size_t n = side * side;
    auto id = [side](std::size_t row, std::size_t col) { return static_cast<NodeId>(row * side + col); };

    std::vector<Edge> edges;
    edges.reserve(2 * n + n * p.long_range_per_node);
    for (std::size_t row = 0; row < side; ++row) {
        for (std::size_t col = 0; col < side; ++col) {
            if (col + 1 < side) {
                edges.push_back({id(row, col), id(row, col + 1)});
            }
            if (row + 1 < side) {
                edges.push_back({id(row, col), id(row + 1, col)});
            }
        }
    }

    if (p.long_range_per_node > 0) {
        std::mt19937_64 rng(p.seed);
        // Weight of a lattice offset depends only on the distance; cache the powers.
        std::vector<double> by_distance(2 * side, 0.0);
        for (std::size_t d = 1; d < by_distance.size(); ++d) {
            by_distance[d] = std::pow(static_cast<double>(d), -p.exponent);
        }
        std::vector<double> cumulative(n);
        for (std::size_t row = 0; row < side; ++row) {
            for (std::size_t col = 0; col < side; ++col) {
                double total = 0.0;
                for (std::size_t r2 = 0; r2 < side; ++r2) {
                    for (std::size_t c2 = 0; c2 < side; ++c2) {
                        const std::size_t d = (row > r2 ? row - r2 : r2 - row) + (col > c2 ? col - c2 : c2 - col);
                        total += by_distance[d];
                        cumulative[r2 * side + c2] = total;
                    }
                }
                std::uniform_real_distribution<double> pick(0.0, total);
                for (std::size_t q = 0; q < p.long_range_per_node; ++q) {
                    const double x = pick(rng);
                    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
                    if (it == cumulative.end()) {
                        --it;
                    }
                    auto target = static_cast<NodeId>(it - cumulative.begin());
                    // Zero-weight self entry can only be hit through x == 0 boundaries.
                    if (target == id(row, col)) {
                        continue;
                    }
                    edges.push_back({id(row, col), target});
                }
            }
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace pagtc
