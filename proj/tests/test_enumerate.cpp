#include "doctest.h"

#include <set>

#include "bachet/count.hpp"
#include "bachet/enumerate.hpp"
#include "oracles.hpp"

using bachet::EnumerationResult;
using bachet::ErParams;
using bachet::Int;
using bachet::LiftRefusal;
using bachet::Partition;
using bachet::oracle::make_partition;

namespace {

std::set<Partition> as_set(const EnumerationResult& res) {
    return {res.partitions.begin(), res.partitions.end()};
}

}  // namespace

TEST_CASE("the nine solutions for 25") {
    const EnumerationResult res = bachet::enumerate_bachet(25);
    CHECK(res.count() == 9);
    const std::set<Partition> expected{
        make_partition({1, 3, 9, 12}), make_partition({1, 3, 8, 13}), make_partition({1, 3, 7, 14}),
        make_partition({1, 3, 6, 15}), make_partition({1, 3, 5, 16}), make_partition({1, 3, 4, 17}),
        make_partition({1, 2, 7, 15}), make_partition({1, 2, 6, 16}), make_partition({1, 2, 5, 17})};
    CHECK(as_set(res) == expected);
}

TEST_CASE("small and boundary enumerations") {
    CHECK(as_set(bachet::enumerate_bachet(5)) ==
          std::set<Partition>{make_partition({1, 2, 2}), make_partition({1, 1, 3})});
    CHECK(as_set(bachet::enumerate_bachet(40)) == std::set<Partition>{make_partition({1, 3, 9, 27})});
    CHECK(as_set(bachet::enumerate_bachet(13)) == std::set<Partition>{make_partition({1, 3, 9})});
    CHECK(as_set(bachet::enumerate_bachet(1)) == std::set<Partition>{make_partition({1})});
    CHECK_THROWS_AS(bachet::enumerate_bachet(0), std::invalid_argument);
    CHECK_THROWS_AS(bachet::enumerate_bachet(-1), std::invalid_argument);
}

TEST_CASE("the twelve solutions for 16 include the named ones") {
    const EnumerationResult res = bachet::enumerate_bachet(16);
    CHECK(res.count() == 12);
    const std::set<Partition> listed = as_set(res);
    CHECK(listed.count(make_partition({1, 3, 3, 9})) == 1);
    CHECK(listed.count(make_partition({1, 1, 3, 11})) == 1);
    CHECK(listed.count(make_partition({1, 2, 2, 11})) == 1);
}

TEST_CASE("enumeration output is ordered, duplicate-free and valid") {
    for (unsigned long m = 1; m <= 121; ++m) {
        const EnumerationResult res = bachet::enumerate_bachet(m);
        REQUIRE(res.count() > 0);
        for (std::size_t i = 0; i < res.partitions.size(); ++i) {
            const Partition& p = res.partitions[i];
            REQUIRE(bachet::is_bachet(p));
            REQUIRE(p.sum() == Int(m));
            if (i > 0) REQUIRE(res.partitions[i - 1] < p);  // strict lexicographic
            // growth bound on each part
            for (std::size_t j = 0; j < p.size(); ++j)
                REQUIRE(p.part(j) <= bachet::pow_ui(3, j));
            // every prefix is itself minimal complete (hereditary, including
            // the prefix-sum window bound)
            for (std::size_t j = 1; j < p.size(); ++j) {
                const Partition prefix(
                    std::vector<Int>(p.parts().begin(), p.parts().begin() + j));
                REQUIRE(bachet::is_bachet(prefix));
            }
        }
    }
}

TEST_CASE("enumeration agrees with the oracle-filtered exhaustive search") {
    for (unsigned m = 1; m <= 60; ++m) {
        const unsigned k = static_cast<unsigned>(bachet::part_bound_n(m)) + 1;
        std::set<Partition> brute;
        bachet::oracle::for_each_partition_k(m, k, [&](const std::vector<unsigned>& parts) {
            if (bachet::oracle::complete_scalar(parts, 0, 2)) brute.insert(make_partition(parts));
        });
        REQUIRE(as_set(bachet::enumerate_bachet(m)) == brute);
    }
}

TEST_CASE("minimal (e,r) enumeration") {
    const EnumerationResult one_pan = bachet::enumerate_er(15, ErParams::one_pan());
    CHECK(one_pan.count() == 1);
    CHECK(one_pan.partitions.front() == make_partition({1, 2, 4, 8}));

    const EnumerationResult error_correcting = bachet::enumerate_er(80, ErParams::error_correcting());
    CHECK(error_correcting.count() == 1);
    CHECK(error_correcting.partitions.front() == make_partition({2, 6, 18, 54}));

    const EnumerationResult classic = bachet::enumerate_er(25, ErParams::two_pan());
    CHECK(as_set(classic) == as_set(bachet::enumerate_bachet(25)));

    CHECK_THROWS_AS(bachet::enumerate_er(0, ErParams::two_pan()), std::invalid_argument);
}

TEST_CASE("the six one-pan solutions for 25") {
    const EnumerationResult res = bachet::enumerate_er(25, ErParams::one_pan());
    const std::set<Partition> expected{
        make_partition({1, 2, 4, 8, 10}), make_partition({1, 2, 4, 7, 11}),
        make_partition({1, 2, 4, 6, 12}), make_partition({1, 2, 3, 7, 12}),
        make_partition({1, 2, 4, 5, 13}), make_partition({1, 2, 3, 6, 13})};
    CHECK(as_set(res) == expected);
}

TEST_CASE("the n = 2 window, 7 through 13") {
    const std::vector<std::size_t> counts{3, 2, 2, 2, 1, 1, 1};
    for (unsigned long m = 7; m <= 13; ++m)
        CHECK(bachet::enumerate_bachet(m).count() == counts[m - 7]);
    CHECK(as_set(bachet::enumerate_bachet(7)) ==
          std::set<Partition>{make_partition({1, 3, 3}), make_partition({1, 2, 4}),
                              make_partition({1, 1, 5})});
}

TEST_CASE("a two-part set resolves loads up to 8 within error one") {
    const EnumerationResult res = bachet::enumerate_er(8, ErParams::error_correcting());
    CHECK(res.count() == 1);
    CHECK(res.partitions.front() == make_partition({2, 6}));
}

TEST_CASE("minimal (e,r) enumeration matches brute force") {
    const std::vector<ErParams> grid{ErParams::one_pan(), ErParams::two_pan(),
                                     ErParams::error_correcting()};
    for (const ErParams& params : grid) {
        for (unsigned m = 1; m <= 60; ++m) {
            std::set<Partition> brute;
            for (unsigned k = 1; brute.empty() && k <= 16; ++k) {
                bachet::oracle::for_each_partition_k(m, k, [&](const std::vector<unsigned>& parts) {
                    if (bachet::oracle::complete_scalar(parts, params.e, params.r))
                        brute.insert(make_partition(parts));
                });
            }
            REQUIRE(as_set(bachet::enumerate_er(m, params)) == brute);
        }
    }
}

TEST_CASE("projection peels the largest part") {
    CHECK(bachet::project_down(make_partition({1, 2, 7, 15})) == make_partition({1, 2, 7}));
    CHECK(bachet::project_down(make_partition({1, 2, 7})) == make_partition({1, 2}));
    const Partition q = bachet::project_down(make_partition({1, 3, 9, 27}));
    CHECK(q == make_partition({1, 3, 9}));
    CHECK(bachet::is_bachet(q));

    CHECK_THROWS_AS(bachet::project_down(make_partition({1})), std::invalid_argument);
    CHECK_THROWS_AS(bachet::project_down(make_partition({2, 3})), std::invalid_argument);
}

TEST_CASE("lifting appends the gap when the three conditions hold") {
    const auto lifted = bachet::lift_up(make_partition({1, 2, 7}), 25);
    REQUIRE(std::holds_alternative<Partition>(lifted));
    CHECK(std::get<Partition>(lifted) == make_partition({1, 2, 7, 15}));

    const auto lifted26 = bachet::lift_up(make_partition({1, 2, 7}), 26);
    REQUIRE(std::holds_alternative<Partition>(lifted26));
    CHECK(std::get<Partition>(lifted26) == make_partition({1, 2, 7, 16}));

    const auto lifted12 = bachet::lift_up(make_partition({1, 3, 9}), 25);
    REQUIRE(std::holds_alternative<Partition>(lifted12));
    CHECK(std::get<Partition>(lifted12) == make_partition({1, 3, 9, 12}));

    CHECK_THROWS_AS(bachet::lift_up(make_partition({2, 3}), 10), std::invalid_argument);
}

TEST_CASE("lift refusals name the violated condition") {
    // gap 1 below the largest part 9
    const auto too_small = bachet::lift_up(make_partition({1, 3, 9}), 14);
    REQUIRE(std::holds_alternative<LiftRefusal>(too_small));
    CHECK(std::get<LiftRefusal>(too_small) == LiftRefusal::new_part_below_largest);

    // part count of 40 is 4, not 2
    const auto wrong_count = bachet::lift_up(make_partition({1}), 40);
    REQUIRE(std::holds_alternative<LiftRefusal>(wrong_count));
    CHECK(std::get<LiftRefusal>(wrong_count) == LiftRefusal::part_count_mismatch);

    // gap 12 exceeds 1 + 2*5 = 11
    const auto too_large = bachet::lift_up(make_partition({1, 1, 3}), 17);
    REQUIRE(std::holds_alternative<LiftRefusal>(too_large));
    CHECK(std::get<LiftRefusal>(too_large) == LiftRefusal::new_part_exceeds_bound);

    // one less and the lift goes through
    const auto just_fits = bachet::lift_up(make_partition({1, 1, 3}), 16);
    REQUIRE(std::holds_alternative<Partition>(just_fits));
    CHECK(std::get<Partition>(just_fits) == make_partition({1, 1, 3, 11}));
}

TEST_CASE("lift after project is the identity") {
    for (unsigned long m = 2; m <= 121; ++m) {
        for (const Partition& p : bachet::enumerate_bachet(m).partitions) {
            if (p.size() < 2) continue;
            const Partition down = bachet::project_down(p);
            const auto back = bachet::lift_up(down, m);
            REQUIRE(std::holds_alternative<Partition>(back));
            REQUIRE(std::get<Partition>(back) == p);
        }
    }
}

TEST_CASE("sandwiched solution sets split by the projected total") {
    for (unsigned long m = 2; m <= 121; ++m) {
        if (!bachet::is_sandwiched(m)) continue;
        const unsigned long n = bachet::part_bound_n(m);
        const Int lo = bachet::ceil_div(Int(m) - 1, 3);
        const Int hi = (bachet::pow_ui(3, n) - 1) / 2;
        std::set<Partition> lifted;
        std::size_t total = 0;
        for (Int mp = lo; mp <= hi; ++mp) {
            for (const Partition& p : bachet::enumerate_bachet(mp).partitions) {
                const auto up = bachet::lift_up(p, m);
                REQUIRE(std::holds_alternative<Partition>(up));
                lifted.insert(std::get<Partition>(up));
                ++total;
            }
        }
        REQUIRE(lifted.size() == total);  // lifts from distinct sources stay distinct
        REQUIRE(lifted == as_set(bachet::enumerate_bachet(m)));
    }
}

TEST_CASE("ordering facets only matter off the sandwich window") {
    CHECK(bachet::count_park_lattice_points(16, false) == 18);
    CHECK(bachet::count_park_lattice_points(16, true) == 12);
    CHECK(bachet::count_park_lattice_points(25, false) == 9);
    CHECK(bachet::count_park_lattice_points(25, true) == 9);
}
