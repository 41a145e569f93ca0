#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bachet/numeric.hpp"

namespace bachet {

/**
 * A partition of a positive integer m: a nonempty, nondecreasing list of
 * positive parts together with their sum.  A partition is a multiset, so the
 * constructor accepts parts in any order and sorts them.  Instances are
 * immutable after construction and safe to share across threads.
 */
class Partition {
public:
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    const Int& sum() const { return sum_; }
    std::size_t size() const { return parts_.size(); }
    const Int& part(std::size_t i) const { return parts_[i]; }
    const Int& largest() const { return parts_.back(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "1+3+9+12"

private:
    std::vector<Int> parts_;
    Int sum_;
};

/**
 * Parameters of the completeness variant under study: coefficients run over
 * {0..r} and gaps of up to e consecutive unreachable values are tolerated.
 * (0,2) is the classic two-pan problem, (0,1) the one-pan problem and (1,2)
 * the error-correcting two-pan problem.
 */
struct ErParams {
    unsigned long e;
    unsigned long r;

    ErParams(unsigned long e_, unsigned long r_);

    static ErParams two_pan() { return {0, 2}; }
    static ErParams one_pan() { return {0, 1}; }
    static ErParams error_correcting() { return {1, 2}; }

    bool operator==(const ErParams& o) const { return e == o.e && r == o.r; }
};

/**
 * Bit table over 0..limit marking which values l admit a representation
 * l = sum(a_i * part_i) with every a_i in {0..r}; limit == r * sum(parts).
 * The table is always symmetric (complement a_i <-> r - a_i).
 */
class ReachableSet {
public:
    std::size_t limit() const { return limit_; }
    bool contains(std::size_t l) const;

    /// Length of the longest run of consecutive unreachable values in [0, limit].
    std::size_t longest_gap() const;

    /// Number of reachable values in [0, limit].
    std::size_t count() const;

private:
    friend ReachableSet reachable_sums(const Partition&, const ErParams&);
    std::size_t limit_ = 0;
    std::vector<std::uint64_t> words_;
};

/// The canonical solution for m: {1, 3, ..., 3^(n-1), m - (3^n - 1)/2},
/// reordered nondecreasing, where n is chosen so the last element is in
/// [1, 3^n].  Always a Bachet partition of m.  Rejects m <= 0.
Partition canonical_w(const Int& m);

/// Largest n with 3^n <= 2m, by exact integer comparison.  A Bachet
/// partition of m has exactly n+1 parts.  Rejects m <= 0.
unsigned long part_bound_n(const Int& m);

/// Dynamic program over the parts: starting from {0}, each part contributes
/// shifts by 0..r copies of itself.  Word-parallel; the element-wise scalar
/// DP lives in the test suite as an oracle.
ReachableSet reachable_sums(const Partition& p, const ErParams& params);

/// True iff no e+1 consecutive values in [0, r*m] are unreachable.
/// For (0,2) this is exactly 2-completeness.
bool is_er_complete(const Partition& p, const ErParams& params);

/// True iff lambda_0 <= e+1 and lambda_i <= (e+1) + r*(lambda_0+..+lambda_{i-1})
/// for every i >= 1.
bool satisfies_park_inequalities(const Partition& p, const ErParams& params);

/// True iff p has part_bound_n(m)+1 parts and satisfies the (0,2) prefix
/// inequalities; equivalently, p is a minimal 2-complete partition.
bool is_bachet(const Partition& p);

}  // namespace bachet
