#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace pagtc {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Arguments of a binomial coefficient C(top, bottom).
struct Binom {
    std::int64_t top;
    std::int64_t bottom;
};

/// C(a, b) vanishes when either argument is negative or b > a.
constexpr bool binomial_is_zero(std::int64_t a, std::int64_t b) noexcept {
    return a < 0 || b < 0 || b > a;
}

constexpr bool binomial_is_zero(Binom c) noexcept { return binomial_is_zero(c.top, c.bottom); }

/// Exact C(a, b) under the vanishing convention.
inline BigInt binomial_exact(std::int64_t a, std::int64_t b) {
    BigInt out;
    if (binomial_is_zero(a, b)) {
        return out;
    }
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

/// A real number stored as sign * exp(log_abs). sign is 0 for an exact zero.
struct SignedLog {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// Table of log(k!) for k in [0, size). Entries come from lgamma, which keeps
/// the relative error flat in k instead of accumulating it as a running sum.
class LogFactorials {
public:
    LogFactorials() = default;
    explicit LogFactorials(std::size_t size) { reserve(size); }

    void reserve(std::size_t size) {
        const std::size_t old = table_.size();
        if (size <= old) {
            return;
        }
        table_.resize(size);
        for (std::size_t k = old; k < size; ++k) {
            table_[k] = std::lgamma(static_cast<double>(k) + 1.0);
        }
    }

    std::size_t size() const noexcept { return table_.size(); }

    double operator()(std::int64_t k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= table_.size()) {
            throw std::out_of_range("log-factorial table too small");
        }
        return table_[static_cast<std::size_t>(k)];
    }

    /// log C(a, b); only valid for non-vanishing arguments.
    double log_binomial(std::int64_t a, std::int64_t b) const {
        return (*this)(a) - (*this)(b) - (*this)(a - b);
    }

private:
    std::vector<double> table_;
};

/// Sign-and-log C(a, b) under the vanishing convention.
inline SignedLog binomial_log(std::int64_t a, std::int64_t b) {
    if (binomial_is_zero(a, b)) {
        return {};
    }
    return {1, std::lgamma(static_cast<double>(a) + 1.0) - std::lgamma(static_cast<double>(b) + 1.0) -
                   std::lgamma(static_cast<double>(a - b) + 1.0)};
}

/// Evaluates products of binomial coefficients over products of binomial
/// coefficients, in the scalar type Real.
///
/// A vanishing numerator short-circuits to zero before any denominator is
/// looked at; a vanishing denominator with a non-vanishing numerator is a
/// logic error.
template <typename Real>
class BinomialRatio;

template <>
class BinomialRatio<double> {
public:
    explicit BinomialRatio(std::size_t max_top) : table_(max_top + 1) {}

    double operator()(std::initializer_list<Binom> num, std::initializer_list<Binom> den) const {
        double log_sum = 0.0;
        for (const Binom& c : num) {
            if (binomial_is_zero(c)) {
                return 0.0;
            }
            log_sum += table_.log_binomial(c.top, c.bottom);
        }
        for (const Binom& c : den) {
            if (binomial_is_zero(c)) {
                throw std::logic_error("vanishing denominator binomial");
            }
            log_sum -= table_.log_binomial(c.top, c.bottom);
        }
        return std::exp(log_sum);
    }

    static double from_ratio(std::int64_t p, std::int64_t q) {
        return static_cast<double>(p) / static_cast<double>(q);
    }

private:
    LogFactorials table_;
};

template <>
class BinomialRatio<Rational> {
public:
    explicit BinomialRatio(std::size_t /*max_top*/) {}

    Rational operator()(std::initializer_list<Binom> num, std::initializer_list<Binom> den) const {
        BigInt p = 1;
        for (const Binom& c : num) {
            if (binomial_is_zero(c)) {
                return Rational(0);
            }
            p *= binomial_exact(c.top, c.bottom);
        }
        BigInt q = 1;
        for (const Binom& c : den) {
            if (binomial_is_zero(c)) {
                throw std::logic_error("vanishing denominator binomial");
            }
            q *= binomial_exact(c.top, c.bottom);
        }
        Rational out(p, q);
        out.canonicalize();
        return out;
    }

    static Rational from_ratio(std::int64_t p, std::int64_t q) {
        Rational out{BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q))};
        out.canonicalize();
        return out;
    }
};

/// Converts a score to double for reporting; identity for double.
inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

} // namespace pagtc
