#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "validation/validation.hpp"

using namespace betti;
using namespace betti::validation;

namespace {

boost::multiprecision::cpp_int binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    boost::multiprecision::cpp_int out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

} // namespace

TEST_CASE("brute-force LR")
{
    CHECK(lr_bruteforce({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_bruteforce({2}, {1}, {1}) == 1);
    CHECK(lr_bruteforce({4}, {1}, {1}) == 0);
    CHECK(lr_bruteforce({4, 2, 2, 1}, {2, 1}, {3, 2, 1}) == lr_bruteforce({4, 2, 2, 1}, {3, 2, 1}, {2, 1}));
    CHECK_THROWS_AS(lr_bruteforce(Partition::column(15), Partition::column(1), Partition::column(14)), std::length_error);
}

TEST_CASE("Weyl dimensions")
{
    for (int g = 1; g <= 6; ++g)
        CHECK(weyl_dim_sp({1}, g) == 2 * g);
    CHECK(weyl_dim_sp({1, 1}, 2) == 5);
    CHECK(weyl_dim_sp({2}, 2) == 10);
    CHECK(weyl_dim_sp({}, 4) == 1);
    CHECK_THROWS(weyl_dim_sp({1, 1, 1}, 2));
}

TEST_CASE("column dimensions telescope")
{
    for (int g = 1; g <= 8; ++g)
        for (int k = 0; k <= g; ++k)
            REQUIRE(weyl_dim_sp(Partition::column(k), g) == binomial(2 * g, k) - binomial(2 * g, k - 2));
}

TEST_CASE("character check")
{
    CHECK(sp_character_check({1}, {1}, 2, 5));
    CHECK(sp_character_check({}, {2, 1}, 3, 3));
    CHECK_THROWS_AS(sp_character_check({1}, {1}, 1, 1), std::invalid_argument);
    // chi_<1> = sum of x_i + 1/x_i.
    RationalVector x{Rational(2), Rational(3)};
    const Rational chi = sp_character({1}, x);
    CHECK(chi == Rational(2) + Rational(1, 2) + Rational(3) + Rational(1, 3));
}
