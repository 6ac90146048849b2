#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "betti/stable_oracle.hpp"
#include "betti/tensor_rules.hpp"

using namespace betti;

namespace {

PoincareSeries series_of(std::vector<int> values)
{
    const int D = static_cast<int>(values.size()) - 1;
    return PoincareSeries(D, std::vector<BigInt>(values.begin(), values.end()));
}

std::vector<long long> partition_numbers(int n_max)
{
    // p(n) by the recurrence p(n, k) = p(n, k-1) + p(n-k, k).
    std::vector<long long> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n_max; ++k)
        for (int n = k; n <= n_max; ++n)
            p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - k)];
    return p;
}

std::vector<Partition> up_to(int n)
{
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : enumerate_partitions(k))
            out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("base series")
{
    CHECK(base_series(BaseSpace::Mg, 8) == series_of({1, 0, 1, 0, 2, 0, 3, 0, 5}));
    CHECK(base_series(BaseSpace::Mg1, 8) == series_of({1, 0, 2, 0, 4, 0, 7, 0, 12}));
    CHECK(base_series(BaseSpace::Mg, 0) == PoincareSeries::one(0));
    const auto p = partition_numbers(20);
    const auto mg = base_series(BaseSpace::Mg, 40);
    const auto mg1 = base_series(BaseSpace::Mg1, 40);
    long long running = 0;
    for (int k = 0; k <= 20; ++k) {
        running += p[static_cast<std::size_t>(k)];
        CHECK(mg[2 * k] == p[static_cast<std::size_t>(k)]);
        CHECK(mg1[2 * k] == running);
        if (k < 20)
            CHECK(mg[2 * k + 1] == 0);
    }
}

TEST_CASE("E series")
{
    CHECK(E_series({}, 5) == PoincareSeries::one(5));
    CHECK(E_series({1}, 8) == series_of({0, 0, 0, 0, 1, 0, 1, 0, 1}));
    // t^8 / ((1 - t^2)(1 - t^4)).
    CHECK(E_series({1, 1}, 12) == series_of({0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2}));
    // Parts 3 and 4: exponents max(2, 2) = 2 and max(2, 3) = 3.
    CHECK(E_series({4, 3}, 16) == PoincareSeries::monomial(10, 1, 16) * [] {
        auto s = PoincareSeries::one(16);
        s.divide_one_minus(2);
        s.divide_one_minus(2);
        return s;
    }());
}

TEST_CASE("E tilde series")
{
    CHECK(E_tilde_series({}, 4) == PoincareSeries::one(4));
    CHECK(E_tilde_series({1}, 6) == series_of({0, 0, 1, 0, 1, 0, 1}));
    CHECK(E_tilde_series({2}, 6) == series_of({0, 0, 0, 0, 1, 0, 1}));
    // sigma(3) = 0: exponent 2.
    CHECK(E_tilde_series({3}, 6) == series_of({0, 0, 0, 0, 1, 0, 1}));
}

TEST_CASE("column oracle")
{
    CHECK(oracle_column(0, BaseSpace::Mg, 12) == base_series(BaseSpace::Mg, 12));
    CHECK(oracle_column(1, BaseSpace::Mg, 9) == series_of({0, 0, 0, 1, 0, 2, 0, 4, 0, 7}));
    CHECK(oracle_column(1, BaseSpace::Mg1, 5) == series_of({0, 1, 0, 3, 0, 7}));
    CHECK_THROWS(oracle_column(-1, BaseSpace::Mg, 4));
}

TEST_CASE("column oracle parity")
{
    for (BaseSpace b : {BaseSpace::Mg, BaseSpace::Mg1}) {
        for (int j = 0; j <= 10; ++j) {
            const auto s = oracle_column(j, b, 20);
            for (int k = 0; k <= 20; ++k)
                if (k % 2 != j % 2)
                    REQUIRE(s[k] == 0);
            CHECK(s.non_negative());
        }
    }
}

TEST_CASE("column-only oracle refuses other shapes")
{
    ColumnOracle o;
    CHECK(o.supports({1, 1}));
    CHECK_FALSE(o.supports({2}));
    CHECK_THROWS_AS(o.series({2}, BaseSpace::Mg, 4), UnsupportedPartition);
    CHECK(o.series({1, 1, 1}, BaseSpace::Mg1, 10) == oracle_column(3, BaseSpace::Mg1, 10));
}

TEST_CASE("general oracle agrees with the column oracle")
{
    WeightedPartitionOracle o;
    CHECK(o.series({1}, BaseSpace::Mg, 15) == oracle_column(1, BaseSpace::Mg, 15));
    CHECK(o.series({}, BaseSpace::Mg1, 15) == base_series(BaseSpace::Mg1, 15));
    for (BaseSpace b : {BaseSpace::Mg, BaseSpace::Mg1})
        for (int j = 0; j <= 8; ++j)
            REQUIRE(o.series(Partition::column(j), b, 20) == oracle_column(j, b, 20));
}

TEST_CASE("general oracle reference values")
{
    WeightedPartitionOracle o;
    // H^1(M_g; <1,1,1>) is one-dimensional.
    const auto cubic = o.series({1, 1, 1}, BaseSpace::Mg, 5);
    CHECK(cubic[1] == 1);
    CHECK(cubic[0] == 0);
    // Nothing below degree 8 for <2> over M_g, nothing below 15 for <3>.
    const auto two = o.series({2}, BaseSpace::Mg, 8);
    for (int k = 0; k < 8; ++k)
        CHECK(two[k] == 0);
    CHECK(two[8] != 0);
    const auto three = o.series({3}, BaseSpace::Mg, 15);
    for (int k = 0; k < 15; ++k)
        CHECK(three[k] == 0);
    CHECK(three[15] != 0);
    // H^*(M_g; V) = H^{*-3}(M_{g,1}).
    CHECK(o.series({1}, BaseSpace::Mg, 20) == base_series(BaseSpace::Mg1, 20).shifted(3));
}

TEST_CASE("general oracle respects the fibration M_{g,1} -> M_g")
{
    // H^*(M_{g,1}; S<l>) = H^*(M_g; S<l> (x) (Q + V[-1] + Q[-2])).
    WeightedPartitionOracle o;
    const int D = 14;
    for (const auto& lambda : up_to(4)) {
        auto expected = o.series(lambda, BaseSpace::Mg, D);
        expected += expected.shifted(2);
        PoincareSeries odd(D);
        for (const auto& [mu, c] : *nl_product(lambda, {1})) {
            auto s = o.series(mu, BaseSpace::Mg, D);
            s *= BigInt(c);
            odd += s;
        }
        expected += odd.shifted(1);
        REQUIRE(o.series(lambda, BaseSpace::Mg1, D) == expected);
    }
}

TEST_CASE("general oracle: non-negative, parity, monotone truncation")
{
    WeightedPartitionOracle o;
    for (const auto& lambda : up_to(6)) {
        for (BaseSpace b : {BaseSpace::Mg, BaseSpace::Mg1}) {
            const auto small = o.series(lambda, b, 9);
            WeightedPartitionOracle fresh;
            const auto big = fresh.series(lambda, b, 18);
            REQUIRE(big.non_negative());
            REQUIRE(big.truncated(9) == small);
            for (int k = 0; k <= 18; ++k)
                if (k % 2 != lambda.size() % 2)
                    REQUIRE(big[k] == 0);
        }
    }
    CHECK(o.parity_warnings().empty());
}

TEST_CASE("oracle factory")
{
    CHECK(make_oracle(OracleKind::Column)->version() == "column-1");
    CHECK(make_oracle(OracleKind::General)->supports({3, 2}));
}
