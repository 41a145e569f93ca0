#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "bachet/numeric.hpp"
#include "bachet/series.hpp"

namespace bachet {

/**
 * Memoized counting tables for the partition counters f (per base) and the
 * correction coefficients g.  Tables only ever grow; extensions run under a
 * lock, results are returned by value, so concurrent use is safe.
 */
class CountTable {
public:
    /// f(k): partitions of k into powers of 3.  f(0) = 1; negative k -> 0.
    Int f(const Int& k);

    /// Partitions of k into powers of base (base >= 2).  f == f_ary(3, .).
    Int f_ary(unsigned long base, const Int& k);

    /// g(k): coefficient of x^k in the correction series G(x).  0 for k < 0.
    Int g(const Int& k);

private:
    std::mutex mu_;
    std::map<unsigned long, std::vector<Int>> f_;  // per base, values 0..K
    std::vector<Int> g_;                           // values 0..K once computed

    const std::vector<Int>& f_table(unsigned long base, std::size_t k);
};

/// Process-wide shared table used by the free functions below.
CountTable& count_table();

Int ternary_f(const Int& k);
Int ary_count(unsigned long base, const Int& k);
Int rodseth_g(const Int& k);

/// Product of the geometric series over powers of base, truncated.  The
/// coefficient of x^k counts partitions of k into powers of base; this is an
/// independent route to the same values as the f recurrence.
TruncatedSeries ary_series(unsigned long base, std::size_t degree_bound);
TruncatedSeries ternary_series(std::size_t degree_bound);

/// The correction series
///   G(x) = sum_j x^(3^j - 1)/(1 - x^(2*3^j)) * F(x^(5*3^j)) * prod_{i<=j} 1/(1 - x^(3^i)),
/// truncated.  The j-sum stops at the first j with 3^j - 1 past the bound,
/// which loses nothing: every factor of the j-th term has lowest degree
/// 3^j - 1 or higher.
TruncatedSeries correction_series(std::size_t degree_bound);

/// Exact number of Bachet partitions of m:
///   f((3^(n+1) - 1)/2 - m) - g((3^n - 1)/2 + 3^(n-1) - 1 - m),  n = part_bound_n(m).
/// For sandwiched m the g argument is negative and the count is pure ternary.
Int count_bachet(const Int& m);

/// True iff (3^n - 1)/2 + 3^(n-1) <= m <= (3^(n+1) - 1)/2 for n = part_bound_n(m)
/// (the upper bound always holds).  m = 1 is sandwiched.
bool is_sandwiched(const Int& m);

}  // namespace bachet
