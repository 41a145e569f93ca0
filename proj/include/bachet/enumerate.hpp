#pragma once

#include <variant>
#include <vector>

#include "bachet/partition.hpp"

namespace bachet {

/**
 * Solution set of an enumeration query: every listed partition is a minimal
 * (e,r)-complete partition of m, listed in strictly increasing lexicographic
 * order of the part vectors, without duplicates.
 */
struct EnumerationResult {
    Int m;
    ErParams params;
    std::vector<Partition> partitions;

    std::size_t count() const { return partitions.size(); }
};

/// All Bachet partitions of m: the lattice points of the polytope cut out by
/// lambda_0 = 1, the prefix inequalities, the nondecreasing ordering and the
/// sum hyperplane, with exactly part_bound_n(m)+1 coordinates.
EnumerationResult enumerate_bachet(const Int& m);

/// All minimal (e,r)-complete partitions of m.  The minimal part count is
/// found by searching k = 1, 2, ...; candidates come from the prefix
/// inequalities (a necessary condition) and each one is verified with the
/// reachability oracle.  The search is capped at 64 parts.
EnumerationResult enumerate_er(const Int& m, const ErParams& params);

/// Number of integer points of the (0,2) prefix-inequality polytope for m,
/// with or without the nondecreasing-ordering facets.  With ordering this is
/// |Bachet(m)|; without it the ordering facets may cut points away.
Int count_park_lattice_points(const Int& m, bool with_ordering);

/// Removes the largest part.  The result is again a Bachet partition (the
/// hereditary property).  Rejects single-part and non-Bachet input.
Partition project_down(const Partition& p);

/// Why a lift was refused; these are outcomes, not faults.
enum class LiftRefusal {
    new_part_below_largest,   // (i)   m - m' smaller than the current largest part
    part_count_mismatch,      // (ii)  part_bound_n(m) would not be part_bound_n(m') + 1
    new_part_exceeds_bound,   // (iii) m - m' exceeds 1 + 2m'
};

const char* to_string(LiftRefusal r);

/// Appends the part m - m' to a Bachet partition of m', yielding a Bachet
/// partition of m, provided the three lift conditions hold; otherwise the
/// first violated condition is returned.  Rejects non-Bachet input.
std::variant<Partition, LiftRefusal> lift_up(const Partition& p, const Int& m);

}  // namespace bachet
