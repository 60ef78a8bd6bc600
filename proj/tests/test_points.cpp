#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "astower/points.hpp"

#include <stdexcept>

using namespace astower;
using namespace astower::points;

TEST_CASE("affine chain counts") {
    CHECK(affine_count(1, 1) == 0);
    CHECK(affine_count(1, 2) == 6);
    CHECK(affine_count(2, 2) == 8);
    CHECK(affine_count(1, 3) == 12);

    // complete splitting over F_8: every level doubles the affine count
    for (int i = 1; i <= 15; ++i) CHECK(affine_count(i, 3) == 6 * (1ll << i));

    CHECK_THROWS_AS(affine_count(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(affine_count(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(affine_count(1, 25), std::invalid_argument);
}

TEST_CASE("propagation equals depth-first enumeration") {
    for (int k = 1; k <= 4; ++k)
        for (int i = 1; i <= 4; ++i) CHECK(affine_count(i, k) == affine_count_naive(i, k));
}

TEST_CASE("splitting report per field") {
    auto r1 = split_check(1);
    CHECK_FALSE(r1.applicable);
    CHECK_FALSE(r1.passed());

    auto r2 = split_check(2);
    CHECK(r2.applicable);
    CHECK_FALSE(r2.successor_pairs); // successors of rho land in {0,1}
    CHECK_FALSE(r2.passed());

    auto r3 = split_check(3);
    CHECK(r3.applicable);
    CHECK(r3.forward_image);
    CHECK(r3.wp_image);
    CHECK(r3.successor_pairs);
    CHECK(r3.sweep);
    CHECK(r3.passed());

    CHECK_THROWS_AS(split_check(0), std::invalid_argument);
}

TEST_CASE("rational point counts over F_8") {
    CHECK(rational_count_f8(1).value == 14);
    CHECK(rational_count_f8(2).value == 26);
    CHECK(rational_count_f8(10).value == 6146);
    CHECK(rational_count_f8(10).enumerated);
    for (int i = 1; i <= 20; ++i) {
        auto c = rational_count_f8(i);
        CHECK(c.value == 6 * (1ll << i) + 2);
        CHECK(c.enumerated);
    }
    auto far = rational_count_f8(30);
    CHECK(far.value == 6 * (1ll << 30) + 2);
    CHECK_FALSE(far.enumerated);
    CHECK_THROWS_AS(rational_count_f8(0), std::invalid_argument);
}

TEST_CASE("ratio formatting is exact at six decimals") {
    CHECK(format_ratio(14, 1) == "14.000000");
    CHECK(format_ratio(26, 5) == "5.200000");
    CHECK(format_ratio(9, 0) == "inf");
    // exact half-millionths round to the even neighbour
    CHECK(format_ratio(1, 2000000) == "0.000000");
    CHECK(format_ratio(3, 2000000) == "0.000002");
    CHECK(format_ratio(1, 3) == "0.333333");
    CHECK(format_ratio(2, 3) == "0.666667");
}

TEST_CASE("asymptotics table") {
    auto rep = asymptotics_table(10);
    REQUIRE(rep.rows.size() == 10);
    CHECK(rep.rows[0].n8 == 14);
    CHECK(rep.rows[0].ratio_float == "14.000000");
    CHECK(rep.rows[1].n_i == 6);
    CHECK(rep.rows[1].genus_hurwitz == 5);
    CHECK(rep.rows[1].genus_closed == 5);
    CHECK(rep.rows[1].ratio_num == 26);
    CHECK(rep.rows[1].ratio_den == 5);
    CHECK(rep.rows[1].ratio_float == "5.200000");
    CHECK(rep.rows[9].genus_closed == 3777);
    CHECK(rep.rows[9].n8 == 6146);

    CHECK(rep.dv_bound == doctest::Approx(1.8284271).epsilon(1e-6));
    CHECK(rep.zink_num == 3);
    CHECK(rep.zink_den == 2);
    CHECK(rep.kummer_num == 1);
    CHECK(rep.kummer_den == 3);
    CHECK(rep.limit_equals_zink);

    // ratios reduce: gcd stripped
    for (const auto& row : rep.rows)
        CHECK(boost::multiprecision::gcd(row.ratio_num, row.ratio_den) == 1);
}

TEST_CASE("projective line row") {
    auto rep = asymptotics_table(0);
    REQUIRE(rep.rows.size() == 1);
    const auto& row = rep.rows[0];
    CHECK(row.i == 0);
    CHECK(row.n_i == 2);
    CHECK(row.genus_hurwitz == 0);
    CHECK(row.genus_closed == 0);
    CHECK(row.n8 == 9);
    CHECK(row.ratio_num == 9);
    CHECK(row.ratio_den == 0);
    CHECK(row.ratio_float == "inf");
}

TEST_CASE("ratio comparisons against the distance bound") {
    // first level strictly below sqrt(8)-1 is 8: 1538/881
    auto rep = asymptotics_table(12);
    for (const auto& row : rep.rows) {
        bool below = ratio_below_dv(row.n8, row.genus_closed);
        CHECK(below == (row.i >= 8));
    }
    // strictly decreasing from level 2 on: N_i g_{i+1} > N_{i+1} g_i
    for (std::size_t r = 1; r + 1 < rep.rows.size(); ++r)
        CHECK(BigInt(rep.rows[r].n8) * rep.rows[r + 1].genus_closed >
              BigInt(rep.rows[r + 1].n8) * rep.rows[r].genus_closed);
    CHECK_THROWS_AS(ratio_below_dv(14, BigInt(0)), std::domain_error);
}
