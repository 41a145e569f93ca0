#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bachet/partition.hpp"

namespace bachet {

/// Coefficient range of a weighing: two-pan {-1,0,1}, one-pan {0,1}, or the
/// general one-pan range {0..r}.
struct WeighMode {
    long lo;
    long hi;

    static WeighMode two_pan() { return {-1, 1}; }
    static WeighMode one_pan() { return {0, 1}; }
    static WeighMode bounded(unsigned long r);

    bool is_signed() const { return lo < 0; }
    std::string name() const;

    bool operator==(const WeighMode& o) const { return lo == o.lo && hi == o.hi; }
};

/// One solved target: the coefficient vector is aligned with the weight list
/// and absent when the target is unreachable.  A negated row was solved for
/// |target|; a negative total just swaps the pans.
struct WeighingRow {
    Int target;
    std::optional<std::vector<long>> coefficients;
    bool negated = false;

    bool reachable() const { return coefficients.has_value(); }
};

/**
 * Concrete weighing instructions for a weight multiset: one coefficient
 * vector per requested target.  Every emitted row satisfies
 * sum(c_i * w_i) == |target| exactly; this is re-checked after construction.
 */
class WeighingPlan {
public:
    WeighingPlan(Partition weights, WeighMode mode, std::vector<WeighingRow> rows);

    const Partition& weights() const { return weights_; }
    const WeighMode& mode() const { return mode_; }
    const std::vector<WeighingRow>& rows() const { return rows_; }

    std::size_t unreachable_count() const;

private:
    Partition weights_;
    WeighMode mode_;
    std::vector<WeighingRow> rows_;
};

/// Solves every target by dynamic programming.  Ties break deterministically:
/// fewest nonzero coefficients first, then the lexicographically smallest
/// vector reading coefficients from the largest weight down.
WeighingPlan plan(const Partition& weights, const WeighMode& mode, const std::vector<Int>& targets);

/// Fixed-width text table: one row per target, one column per weight,
/// unreachable rows marked.  Stable across runs.
std::string render_table(const WeighingPlan& p);

/// Every coefficient assignment realizing the target, ascending
/// lexicographically reading coefficients from the largest weight down,
/// capped at `cap` results.  Used by uniqueness checks.
std::vector<std::vector<long>> enumerate_assignments(const Partition& weights,
                                                     const WeighMode& mode, const Int& target,
                                                     std::size_t cap);

}  // namespace bachet
