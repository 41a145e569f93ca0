// Acceptance suite: the exit gate, one line per criterion.  Every check is
// exact integer equality; the whole run stays well under a minute.

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bachet/count.hpp"
#include "bachet/enumerate.hpp"
#include "bachet/macmahon.hpp"
#include "bachet/partition.hpp"
#include "bachet/series.hpp"
#include "bachet/weighing.hpp"
#include "oracles.hpp"

namespace {

using bachet::Int;
using bachet::MultiplicityPartition;
using bachet::Partition;
using bachet::oracle::make_multiplicity;
using bachet::oracle::make_partition;

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s %2d: %s\n", ok ? "PASS" : "FAIL", index, name.c_str());
    if (!ok) {
        if (!detail.empty()) std::printf("        %s\n", detail.c_str());
        ++g_failures;
    }
}

std::set<Partition> enumerated_set(const Int& m) {
    const auto res = bachet::enumerate_bachet(m);
    return {res.partitions.begin(), res.partitions.end()};
}

// 1. the nine displayed solutions for m = 25
void criterion_1() {
    const std::set<Partition> expected{
        make_partition({1, 3, 9, 12}), make_partition({1, 3, 8, 13}), make_partition({1, 3, 7, 14}),
        make_partition({1, 3, 6, 15}), make_partition({1, 3, 5, 16}), make_partition({1, 3, 4, 17}),
        make_partition({1, 2, 7, 15}), make_partition({1, 2, 6, 16}), make_partition({1, 2, 5, 17})};
    report(1, "enumerate(25) lists exactly the nine displayed partitions",
           enumerated_set(25) == expected);
}

// 2. |solutions(16)| = f(24) - g(5) = 18 - 6 = 12, and the twelve themselves
void criterion_2() {
    const std::set<Partition> expected{
        make_partition({1, 3, 3, 9}),  make_partition({1, 3, 4, 8}),  make_partition({1, 3, 5, 7}),
        make_partition({1, 3, 6, 6}),  make_partition({1, 2, 6, 7}),  make_partition({1, 2, 5, 8}),
        make_partition({1, 1, 5, 9}),  make_partition({1, 2, 4, 9}),  make_partition({1, 1, 4, 10}),
        make_partition({1, 2, 3, 10}), make_partition({1, 2, 2, 11}), make_partition({1, 1, 3, 11})};
    const bool ok = bachet::ternary_f(24) == 18 && bachet::rodseth_g(5) == 6 &&
                    bachet::count_bachet(16) == 12 && enumerated_set(16) == expected;
    report(2, "count(16) = f(24) - g(5) = 18 - 6 and the twelve are listed", ok);
}

// 3. formula vs enumeration across 1..121
void criterion_3() {
    for (unsigned long m = 1; m <= 121; ++m) {
        const Int formula = bachet::count_bachet(m);
        const Int listed(static_cast<unsigned long>(bachet::enumerate_bachet(m).count()));
        if (formula != listed) {
            std::ostringstream detail;
            detail << "m = " << m << ": formula " << formula.get_str() << ", enumeration "
                   << listed.get_str();
            report(3, "count_bachet(m) == |enumerate(m)| for m = 1..121", false, detail.str());
            return;
        }
    }
    report(3, "count_bachet(m) == |enumerate(m)| for m = 1..121", true);
}

// 4. unique solution at m = (3^(n+1) - 1)/2
void criterion_4() {
    bool ok = true;
    for (unsigned long n = 1; n <= 5 && ok; ++n) {
        const Int m = (bachet::pow_ui(3, n + 1) - 1) / 2;
        std::vector<Int> powers;
        for (unsigned long i = 0; i <= n; ++i) powers.push_back(bachet::pow_ui(3, i));
        ok = enumerated_set(m) == std::set<Partition>{Partition(powers)};
    }
    report(4, "m in {4, 13, 40, 121, 364} have exactly the power partition", ok);
}

// 5. ternary counts: exhaustive generator, series route, plateau and step
void criterion_5() {
    bool ok = bachet::ternary_f(15) == 9;

    const auto nine = bachet::oracle::power_partitions(3, 15);
    ok = ok && nine.size() == 9;
    std::set<std::vector<unsigned>> listed(nine.begin(), nine.end());
    const std::set<std::vector<unsigned>> expected{
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3},
        {1, 1, 1, 1, 1, 1, 3, 3, 3},
        {1, 1, 1, 3, 3, 3, 3},
        {1, 1, 1, 1, 1, 1, 9},
        {1, 1, 1, 3, 9},
        {3, 3, 3, 3, 3},
        {3, 3, 9}};
    ok = ok && listed == expected;

    const bachet::TruncatedSeries product = bachet::ternary_series(1000);
    for (unsigned long k = 0; k <= 1000 && ok; ++k) ok = bachet::ternary_f(k) == product.coeff(k);

    for (unsigned long k = 0; k <= 300 && ok; ++k) {
        const Int base = bachet::ternary_f(3 * k);
        ok = base == bachet::ternary_f(3 * k + 1) && base == bachet::ternary_f(3 * k + 2);
        if (k >= 1) ok = ok && base == bachet::ternary_f(3 * k - 1) + bachet::ternary_f(k);
    }
    report(5, "f(15) = 9 with its nine partitions; series route to 1000; identities to 300", ok);
}

// 6. (1 - x) F(x) == F(x^3) through degree 500
void criterion_6() {
    const bachet::TruncatedSeries lhs =
        bachet::TruncatedSeries::polynomial({Int(1), Int(-1)}, 500) * bachet::ternary_series(500);
    const bachet::TruncatedSeries rhs = bachet::ternary_series(167).substitute_power(3);
    bool ok = rhs.degree_bound() >= 500;
    for (unsigned long k = 0; k <= 500 && ok; ++k) ok = lhs.coeff(k) == rhs.coeff(k);
    report(6, "(1 - x) F(x) == F(x^3) coefficientwise to degree 500", ok);
}

// 7. with part_bound_n(m)+1 parts, 2-complete iff the prefix inequalities
void criterion_7() {
    unsigned long long counterexamples = 0;
    for (unsigned m = 1; m <= 60; ++m) {
        const unsigned k = static_cast<unsigned>(bachet::part_bound_n(m)) + 1;
        bachet::oracle::for_each_partition_k(m, k, [&](const std::vector<unsigned>& parts) {
            const bool dp = bachet::oracle::complete_scalar(parts, 0, 2);
            const bool inequalities = bachet::satisfies_park_inequalities(
                make_partition(parts), bachet::ErParams::two_pan());
            if (dp != inequalities) ++counterexamples;
        });
    }
    report(7, "completeness DP iff prefix inequalities for all m <= 60", counterexamples == 0,
           counterexamples ? std::to_string(counterexamples) + " counterexamples" : "");
}

// 8. the one-pan and error-correcting showcases are unique
void criterion_8() {
    const auto one_pan = bachet::enumerate_er(15, bachet::ErParams::one_pan());
    const auto error_correcting = bachet::enumerate_er(80, bachet::ErParams::error_correcting());
    const bool ok = one_pan.count() == 1 &&
                    one_pan.partitions.front() == make_partition({1, 2, 4, 8}) &&
                    error_correcting.count() == 1 &&
                    error_correcting.partitions.front() == make_partition({2, 6, 18, 54});
    report(8, "enumerate_er(15,(0,1)) = {1+2+4+8}; enumerate_er(80,(1,2)) = {2+6+18+54}", ok);
}

// 9. the factorization bijections at m = 11 and m = 40
void criterion_9() {
    bool ok = true;

    const auto f12 = bachet::ordered_factorizations(12);
    ok = ok && f12.size() == 8;
    std::set<MultiplicityPartition> perfect_image;
    for (const auto& f : f12) {
        const MultiplicityPartition p = bachet::perfect_from_factorization(f);
        ok = ok && bachet::is_perfect(p) && bachet::factorization_from_perfect(p) == f;
        perfect_image.insert(p);
    }
    ok = ok && perfect_image.size() == 8;
    ok = ok && bachet::oracle::perfect_bruteforce(11).size() == 8;

    const auto f81 = bachet::ordered_factorizations(81);
    ok = ok && f81.size() == 8;
    std::set<MultiplicityPartition> subperfect_image;
    for (const auto& f : f81) {
        const MultiplicityPartition p = bachet::subperfect_from_factorization(f);
        ok = ok && bachet::is_subperfect(p);
        subperfect_image.insert(p);
    }
    ok = ok && subperfect_image.size() == 8;
    ok = ok && bachet::subperfect_from_factorization(
                   {{Int(3), Int(3), Int(3), Int(3)}}) ==
                   make_multiplicity({{1, 1}, {3, 1}, {9, 1}, {27, 1}});
    ok = ok && bachet::oracle::subperfect_bruteforce(40).size() == 8;

    report(9, "perfect(11) and subperfect(40) both biject with 8 factorizations", ok);
}

// 10. hereditary structure: lifts partition the solution set
void criterion_10() {
    bool ok = true;
    std::string detail;
    for (unsigned long m = 2; m <= 121 && ok; ++m) {
        for (const Partition& p : bachet::enumerate_bachet(m).partitions) {
            if (p.size() < 2) continue;
            const auto back = bachet::lift_up(bachet::project_down(p), m);
            if (!std::holds_alternative<Partition>(back) || std::get<Partition>(back) != p) {
                ok = false;
                detail = "lift after project failed at m = " + std::to_string(m);
                break;
            }
        }
        if (!bachet::is_sandwiched(m)) continue;
        const unsigned long n = bachet::part_bound_n(m);
        std::set<Partition> lifted;
        std::size_t total = 0;
        for (Int mp = bachet::ceil_div(Int(m) - 1, 3); mp <= (bachet::pow_ui(3, n) - 1) / 2; ++mp) {
            for (const Partition& p : bachet::enumerate_bachet(mp).partitions) {
                const auto up = bachet::lift_up(p, m);
                if (!std::holds_alternative<Partition>(up)) {
                    ok = false;
                    break;
                }
                lifted.insert(std::get<Partition>(up));
                ++total;
            }
        }
        if (ok && (lifted.size() != total || lifted != enumerated_set(m))) {
            ok = false;
            detail = "union mismatch at m = " + std::to_string(m);
        }
    }
    report(10, "sandwiched solution sets are disjoint unions of lifts; lift o project = id", ok,
           detail);
}

// 11. the Steinhaus table for m = 40
void criterion_11() {
    const Partition weights = bachet::canonical_w(40);
    std::vector<Int> all;
    for (long l = 1; l <= 40; ++l) all.emplace_back(l);
    const bachet::WeighingPlan full = bachet::plan(weights, bachet::WeighMode::two_pan(), all);
    const auto& row20 = full.rows()[19];
    const bool ok = row20.reachable() &&
                    *row20.coefficients == std::vector<long>{-1, 1, -1, 1} &&
                    full.unreachable_count() == 0;
    report(11, "plan(40): 20 = -1+3-9+27 and all of 1..40 reachable", ok);
}

// 12. ordering facets: 18 vs 12 at m = 16, no effect on sandwiched m
void criterion_12() {
    bool ok = bachet::count_park_lattice_points(16, false) == 18 &&
              bachet::count_park_lattice_points(16, true) == 12;
    for (unsigned long m = 1; m <= 121 && ok; ++m) {
        if (!bachet::is_sandwiched(m)) continue;
        const Int with = bachet::count_park_lattice_points(m, true);
        ok = with == bachet::count_park_lattice_points(m, false) &&
             with == Int(static_cast<unsigned long>(bachet::enumerate_bachet(m).count()));
    }
    report(12, "dropping the ordering facets: 18 vs 12 at m = 16, no change when sandwiched", ok);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
