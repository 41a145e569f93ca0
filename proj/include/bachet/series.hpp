#pragma once

#include <cstddef>
#include <vector>

#include "bachet/numeric.hpp"

namespace bachet {

/**
 * Dense power-series prefix over arbitrary-precision integers: the
 * coefficients of x^0 .. x^D are stored and exact, nothing is known past D.
 * Binary operations truncate to the smaller bound; no operation reads or
 * writes beyond it.
 */
class TruncatedSeries {
public:
    /// The zero series with the given degree bound.
    explicit TruncatedSeries(std::size_t degree_bound);

    /// An exact polynomial, viewed as a series with the given bound.
    /// coeffs lists x^0 upward and must fit within the bound.
    static TruncatedSeries polynomial(std::vector<Int> coeffs, std::size_t degree_bound);

    /// 1/(1 - x^t): coefficient 1 at every multiple of t.  Rejects t == 0.
    static TruncatedSeries geometric(std::size_t t, std::size_t degree_bound);

    std::size_t degree_bound() const { return coeffs_.size() - 1; }
    const Int& coeff(std::size_t k) const;
    void set_coeff(std::size_t k, Int v);

    /// Cauchy product, truncated at the smaller bound.
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;

    /// a(x^t): coefficient at k*t equals the coefficient at k, everything
    /// else 0.  The result's bound is D*t (t == 1 is the identity).
    TruncatedSeries substitute_power(std::size_t t) const;

    /// x^s * a, truncated at the same bound.
    TruncatedSeries shifted_up(std::size_t s) const;

    /// Prefix restriction to a bound no larger than the current one.
    TruncatedSeries truncated(std::size_t new_bound) const;

    /// Equal bounds and equal coefficients.
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    std::vector<Int> coeffs_;  // indices 0..D
};

}  // namespace bachet
