#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bachet/numeric.hpp"

namespace bachet {

/**
 * An ordered factorization: a sequence of factors, each at least 2, whose
 * product is the represented integer.  Order is significant: 6x2 and 2x6
 * are different factorizations of 12.
 */
struct OrderedFactorization {
    std::vector<Int> factors;

    Int product() const;
    std::string to_string() const;  // "2 x 3 x 2"

    bool operator==(const OrderedFactorization& o) const { return factors == o.factors; }
    bool operator<(const OrderedFactorization& o) const { return factors < o.factors; }
};

/**
 * A partition in multiplicity form: strictly increasing values, each with a
 * positive multiplicity.  Repeated parts are indistinguishable, so the
 * uniqueness checks below count representations per distinct value, never
 * per copy.
 */
class MultiplicityPartition {
public:
    using Entry = std::pair<Int, unsigned long>;  // (value, multiplicity)

    explicit MultiplicityPartition(std::vector<Entry> entries);

    /// Groups a plain part list (any order) into multiplicity form.
    static MultiplicityPartition from_parts(const std::vector<Int>& parts);

    const std::vector<Entry>& entries() const { return entries_; }
    const Int& sum() const { return sum_; }

    /// Flattened nondecreasing part list.
    std::vector<Int> to_parts() const;

    /// MacMahon shorthand: "(1)^5 + 6".
    std::string to_string() const;

    bool operator==(const MultiplicityPartition& o) const { return entries_ == o.entries_; }
    bool operator!=(const MultiplicityPartition& o) const { return !(*this == o); }
    bool operator<(const MultiplicityPartition& o) const { return entries_ < o.entries_; }

private:
    std::vector<Entry> entries_;
    Int sum_;
};

/// All ordered factorizations of n >= 2, ascending lexicographically by
/// factor sequence.
std::vector<OrderedFactorization> ordered_factorizations(const Int& n);

/// A value whose representation count differs from 1, reported by the
/// uniqueness scans below for diagnostics.
struct UniquenessDefect {
    Int target;
    unsigned long long representations;  // 0, or the count observed (>= 2)
};

/// The recursively defined partition of (product - 1) built from an ordered
/// factorization f1 x f2 x ... x fr:
///   (1)^(f1-1) + (f1)^(f2-1) + (f1*f2)^(f3-1) + ...
/// Values are the cumulative products; the parts telescope to product - 1.
MultiplicityPartition perfect_from_factorization(const OrderedFactorization& f);

/// Inverse of perfect_from_factorization.  Rejects non-perfect input with a
/// diagnostic naming the value that has 0 or >= 2 representations.
OrderedFactorization factorization_from_perfect(const MultiplicityPartition& p);

/// True iff every l in [0, m] has exactly one representation as a choice of
/// 0..k copies of each value.
bool is_perfect(const MultiplicityPartition& p);
std::optional<UniquenessDefect> perfect_defect(const MultiplicityPartition& p);

/// The subperfect partition of m built from an ordered factorization of
/// 2m + 1: multiplicities are halved, (fi - 1)/2.  Rejects even products.
MultiplicityPartition subperfect_from_factorization(const OrderedFactorization& f);

/// True iff every l in [0, m] has exactly one signed representation, where a
/// value with multiplicity k contributes one representation per net
/// coefficient in {-k..k}.
bool is_subperfect(const MultiplicityPartition& p);
std::optional<UniquenessDefect> subperfect_defect(const MultiplicityPartition& p);

}  // namespace bachet
