#include "bachet/enumerate.hpp"

#include <functional>

namespace bachet {

namespace {

// Depth-first walk over the integer points of the prefix-bound polytope
//
//   1 <= lambda_0 <= e+1,
//   lambda_i <= (e+1) + r*(lambda_0 + ... + lambda_{i-1}),
//   lambda_0 + ... + lambda_{k-1} == m,
//
// optionally with the ordering facets lambda_{i-1} <= lambda_i.  Pruning uses
// the largest total still reachable from a prefix: taking every remaining cap
// exactly turns a prefix sum s into (r+1)^j * s + (e+1)*((r+1)^j - 1)/r after
// j further parts, so any viable lambda satisfies
//   (r+1)^j * (s + lambda) + (e+1)*((r+1)^j - 1)/r >= m.
void walk(const Int& m, unsigned long e, unsigned long r, std::size_t k, bool ordered,
          std::vector<Int>& cur, const Int& prefix,
          const std::function<void(const std::vector<Int>&)>& emit) {
    const std::size_t i = cur.size();
    const std::size_t left = k - i;
    const Int cap = Int(e + 1) + Int(r) * prefix;
    const Int budget = m - prefix;
    Int lo = (ordered && i > 0) ? cur.back() : Int(1);

    if (left == 1) {
        if (budget >= lo && budget <= cap) {
            cur.push_back(budget);
            emit(cur);
            cur.pop_back();
        }
        return;
    }

    const Int pw = pow_ui(r + 1, left - 1);
    const Int tail_max = (Int(e + 1) * (pw - 1)) / Int(r);  // exact: r | (r+1)^j - 1
    const Int lo_reach = ceil_div(m - tail_max, pw) - prefix;
    if (lo_reach > lo) lo = lo_reach;

    Int hi = ordered ? Int(budget / Int(left)) : Int(budget - Int(left - 1));
    if (cap < hi) hi = cap;

    for (Int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        walk(m, e, r, k, ordered, cur, prefix + v, emit);
        cur.pop_back();
    }
}

void walk_all(const Int& m, const ErParams& params, std::size_t k, bool ordered,
              const std::function<void(const std::vector<Int>&)>& emit) {
    std::vector<Int> cur;
    cur.reserve(k);
    walk(m, params.e, params.r, k, ordered, cur, Int(0), emit);
}

}  // namespace

EnumerationResult enumerate_bachet(const Int& m) {
    if (m <= 0) throw std::invalid_argument("enumerate_bachet: m must be positive");
    const ErParams params = ErParams::two_pan();
    const std::size_t k = part_bound_n(m) + 1;
    std::vector<Partition> out;
    // By Park's characterization every lattice point is already a Bachet
    // partition; no completeness filter is needed on this route.
    walk_all(m, params, k, true,
             [&](const std::vector<Int>& lam) { out.emplace_back(lam); });
    return {m, params, std::move(out)};
}

EnumerationResult enumerate_er(const Int& m, const ErParams& params) {
    if (m <= 0) throw std::invalid_argument("enumerate_er: m must be positive");
    constexpr std::size_t kMaxParts = 64;  // guards nontermination, far past desk scale
    for (std::size_t k = 1; k <= kMaxParts; ++k) {
        std::vector<Partition> found;
        walk_all(m, params, k, true, [&](const std::vector<Int>& lam) {
            Partition p(lam);
            if (is_er_complete(p, params)) found.push_back(std::move(p));
        });
        if (!found.empty()) return {m, params, std::move(found)};
    }
    throw std::runtime_error("enumerate_er: no complete partition within 64 parts");
}

Int count_park_lattice_points(const Int& m, bool with_ordering) {
    if (m <= 0) throw std::invalid_argument("count_park_lattice_points: m must be positive");
    const std::size_t k = part_bound_n(m) + 1;
    Int n = 0;
    walk_all(m, ErParams::two_pan(), k, with_ordering,
             [&](const std::vector<Int>&) { ++n; });
    return n;
}

Partition project_down(const Partition& p) {
    if (p.size() < 2)
        throw std::invalid_argument("project_down: nothing to peel from a single part");
    if (!is_bachet(p))
        throw std::invalid_argument("project_down: input is not a Bachet partition");
    std::vector<Int> parts(p.parts().begin(), p.parts().end() - 1);
    return Partition(std::move(parts));
}

const char* to_string(LiftRefusal r) {
    switch (r) {
        case LiftRefusal::new_part_below_largest: return "appended part would be below the largest part";
        case LiftRefusal::part_count_mismatch: return "part count of the target would not grow by one";
        case LiftRefusal::new_part_exceeds_bound: return "appended part would exceed 1 + 2m'";
    }
    return "unknown refusal";
}

std::variant<Partition, LiftRefusal> lift_up(const Partition& p, const Int& m) {
    if (!is_bachet(p))
        throw std::invalid_argument("lift_up: input is not a Bachet partition");
    const Int& mprime = p.sum();
    const Int gap = m - mprime;
    if (p.largest() > gap) return LiftRefusal::new_part_below_largest;
    // past (i), gap >= largest >= 1, so m > m' > 0
    if (part_bound_n(m) != p.size()) return LiftRefusal::part_count_mismatch;
    if (gap > 1 + 2 * mprime) return LiftRefusal::new_part_exceeds_bound;
    std::vector<Int> parts = p.parts();
    parts.push_back(gap);
    return Partition(std::move(parts));
}

}  // namespace bachet
