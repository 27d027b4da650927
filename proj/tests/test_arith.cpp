#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "cimod/arith.hpp"
#include "cimod/errors.hpp"
#include "cimod/fixtures.hpp"
#include "oracles.hpp"

using namespace cimod;

TEST_CASE("binom small values")
{
    CHECK(binom(14, 14) == 1);
    CHECK(oracle::factorial_binom(9, 4) == 126);
    CHECK(binom(9, 4) == oracle::factorial_binom(9, 4));
    CHECK(binom(3, 6) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(7, 0) == 1);
}

TEST_CASE("binom rejects negative arguments")
{
    CHECK_THROWS_AS(binom(-1, 0), ValidationError);
    CHECK_THROWS_AS(binom(5, -2), ValidationError);
}

TEST_CASE("binom agrees with factorial evaluation and GMP")
{
    for (std::int64_t top = 0; top <= 60; ++top) {
        for (std::int64_t bottom = 0; bottom <= top + 3; ++bottom) {
            REQUIRE(binom(top, bottom) == oracle::factorial_binom(top, bottom));
        }
    }
    // Magnitudes of the seven-dimensional composed evaluations.
    for (const auto& [top, bottom] : std::vector<std::pair<long, long>>{{705, 97}, {2377, 54}, {2400, 300}}) {
        BigInt ref;
        mpz_bin_uiui(ref.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
        CHECK(binom(top, bottom) == ref);
    }
}

TEST_CASE("binom symmetry")
{
    for (std::int64_t a = 0; a <= 80; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) {
            REQUIRE(binom(a, b) == binom(a, a - b));
        }
    }
}

TEST_CASE("binom_shifted")
{
    CHECK(binom_shifted(6, 0) == 1);
    CHECK(binom_shifted(6, -3) == 0);
    CHECK(binom_shifted(4, 5) == oracle::factorial_binom(9, 4));
    CHECK(binom_shifted(14, -2323 + 2 * 1899) == binom(14 + 1475, 14));
    CHECK(binom_shifted(3, -1000000) == 0);
    CHECK_THROWS_AS(binom_shifted(-1, 2), ValidationError);
}

TEST_CASE("binom_shifted Pascal-ratio recurrence")
{
    for (std::int64_t N = 0; N <= 40; ++N) {
        CHECK(binom_shifted(N, 1) == N + 1);
        for (std::int64_t m = 1; m <= 60; ++m) {
            BigInt scaled = binom_shifted(N, m - 1) * (N + m);
            REQUIRE(scaled % m == 0);
            REQUIRE(binom_shifted(N, m) == scaled / m);
        }
    }
}

TEST_CASE("padic_valuation")
{
    CHECK(padic_valuation(1, 2) == 0);
    CHECK(oracle::repeated_division(48, 2) == 4);
    CHECK(padic_valuation(48, 2) == 4);
    const BigInt d7(fixture_ci7().d);
    CHECK(padic_valuation(d7, 2) == 28);
    CHECK(padic_valuation(d7, 3) == 13);
    CHECK(padic_valuation(d7, 5) == 5);
    CHECK(padic_valuation(d7, 7) == 0);
    CHECK_THROWS_AS(padic_valuation(0, 2), ValidationError);
    CHECK_THROWS_AS(padic_valuation(-8, 2), ValidationError);
    CHECK_THROWS_AS(padic_valuation(8, 1), ValidationError);
}

TEST_CASE("padic_valuation is additive over products")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<unsigned long> dist(1, 1u << 20);
    for (int trial = 0; trial < 500; ++trial) {
        const BigInt x = dist(rng);
        const BigInt y = dist(rng);
        for (std::int64_t p : {2, 3, 5, 7, 11}) {
            REQUIRE(padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p));
            REQUIRE(padic_valuation(x, p) == oracle::repeated_division(x, static_cast<unsigned long>(p)));
        }
    }
}

TEST_CASE("ShiftedBinomialTable matches direct evaluation")
{
    ShiftedBinomialTable table(22);
    for (std::int64_t m = -50; m <= 500; m += 7) {
        REQUIRE(table(m) == binom_shifted(22, m));
        REQUIRE(table(m) == binom_shifted(22, m));
    }
}

TEST_CASE("binom is safe to call concurrently")
{
    const BigInt expected = binom(2377, 54);
    std::vector<BigInt> results(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < results.size(); ++t) {
            pool.emplace_back([&, t] { results[t] = binom(2377, 54); });
        }
    }
    for (const auto& r : results) {
        CHECK(r == expected);
    }
}
