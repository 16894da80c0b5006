#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pagtc/binomial.hpp"

namespace pagtc {

/// Probability distribution over coalition sizes 0..n-1 defining a semivalue.
class BetaSpec {
public:
    enum class Kind { shapley, dirac, truncated_uniform, explicit_weights };

    static BetaSpec shapley() { return BetaSpec(Kind::shapley); }

    static BetaSpec dirac(std::size_t s) {
        BetaSpec b(Kind::dirac);
        b.lo_ = b.hi_ = s;
        return b;
    }

    /// Uniform on the closed integer interval [lo, hi].
    static BetaSpec truncated_uniform(std::size_t lo, std::size_t hi) {
        if (lo > hi) {
            throw std::invalid_argument("truncated uniform beta needs lo <= hi");
        }
        BetaSpec b(Kind::truncated_uniform);
        b.lo_ = lo;
        b.hi_ = hi;
        return b;
    }

    /// Uniform on [k, k + round(c * (n - 1 - k))]: c -> 0 approaches the Dirac
    /// mass at k, c = 1 is conditionally equivalent to the Shapley value.
    static BetaSpec truncated_fraction(double c, std::size_t n, std::size_t k) {
        if (!(c > 0.0 && c <= 1.0)) {
            throw std::invalid_argument("truncation fraction must lie in (0, 1]");
        }
        if (k + 1 > n) {
            throw std::invalid_argument("conditioning set must leave at least one node free");
        }
        const auto span = static_cast<std::size_t>(std::lround(c * static_cast<double>(n - 1 - k)));
        return truncated_uniform(k, k + span);
    }

    static BetaSpec explicit_weights(std::vector<double> weights) {
        BetaSpec b(Kind::explicit_weights);
        b.weights_ = std::move(weights);
        return b;
    }

    Kind kind() const noexcept { return kind_; }
    std::size_t lo() const noexcept { return lo_; }
    std::size_t hi() const noexcept { return hi_; }
    const std::vector<double>& explicit_values() const noexcept { return weights_; }

    /// Checks the distribution against a graph of n nodes.
    void validate(std::size_t n) const {
        switch (kind_) {
        case Kind::shapley:
            return;
        case Kind::dirac:
        case Kind::truncated_uniform:
            if (hi_ >= n) {
                throw std::invalid_argument("beta support exceeds n - 1 = " + std::to_string(n - 1));
            }
            return;
        case Kind::explicit_weights: {
            if (weights_.size() != n) {
                throw std::invalid_argument("explicit beta needs exactly n = " + std::to_string(n) + " weights");
            }
            double sum = 0.0;
            for (double w : weights_) {
                if (!(w >= 0.0) || !std::isfinite(w)) {
                    throw std::invalid_argument("explicit beta weights must be finite and non-negative");
                }
                sum += w;
            }
            if (std::abs(sum - 1.0) > 1e-12) {
                throw std::invalid_argument("explicit beta weights must sum to 1");
            }
            return;
        }
        }
    }

    /// beta(0..n-1) in the requested scalar type.
    template <typename Real>
    std::vector<Real> weights(std::size_t n) const {
        validate(n);
        std::vector<Real> out(n, Real(0));
        switch (kind_) {
        case Kind::shapley:
            for (auto& w : out) {
                w = BinomialRatio<Real>::from_ratio(1, static_cast<std::int64_t>(n));
            }
            break;
        case Kind::dirac:
            out[lo_] = Real(1);
            break;
        case Kind::truncated_uniform: {
            const auto width = static_cast<std::int64_t>(hi_ - lo_ + 1);
            for (std::size_t s = lo_; s <= hi_; ++s) {
                out[s] = BinomialRatio<Real>::from_ratio(1, width);
            }
            break;
        }
        case Kind::explicit_weights:
            for (std::size_t s = 0; s < n; ++s) {
                out[s] = Real(weights_[s]);
            }
            break;
        }
        return out;
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::shapley:
            return "shapley";
        case Kind::dirac:
            return "dirac:" + std::to_string(lo_);
        case Kind::truncated_uniform:
            return "uniform:" + std::to_string(lo_) + "," + std::to_string(hi_);
        case Kind::explicit_weights:
            return "explicit";
        }
        return "?";
    }

private:
    explicit BetaSpec(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::size_t lo_ = 0;
    std::size_t hi_ = 0;
    std::vector<double> weights_;
};

} // namespace pagtc
