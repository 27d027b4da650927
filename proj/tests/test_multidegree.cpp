#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cimod/errors.hpp"
#include "cimod/fixtures.hpp"
#include "cimod/json_io.hpp"
#include "cimod/multidegree.hpp"
#include "oracles.hpp"

using namespace cimod;

TEST_CASE("make_multidegree sorts and validates")
{
    CHECK(Multidegree::make({3, 5, 2}).degrees() == std::vector<Degree>{5, 3, 2});
    CHECK(Multidegree::make({2}).degrees() == std::vector<Degree>{2});
    CHECK_THROWS_WITH_AS(Multidegree::make({4, 1}), "degree below 2: 1", ValidationError);
    CHECK_THROWS_AS(Multidegree::make({0}), ValidationError);
    CHECK_THROWS_AS(make_multidegree(std::span<const Degree>{}), ValidationError);
}

TEST_CASE("permutation invariance")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto raw = oracle::random_degrees(rng, 9, 2, 30);
        const Multidegree md = Multidegree::make(raw);
        std::shuffle(raw.begin(), raw.end(), rng);
        REQUIRE(Multidegree::make(raw) == md);
    }
}

TEST_CASE("total degree and power sums")
{
    CHECK(total_degree(Multidegree::make({2, 3})) == 6);
    CHECK(power_sum(Multidegree::make({2}), 3) == 8);
    CHECK_THROWS_AS(power_sum(Multidegree::make({2}), 0), ValidationError);

    const auto& f6 = fixture_ci6();
    const auto& f7 = fixture_ci7();
    CHECK(total_degree(f6.a).get_str() == "371008634983489635445991601");
    CHECK(total_degree(f7.a).get_str() == "3753247176539885786786848165802803200000");
    CHECK(power_sum(f6.a, 1) == 16800);
    CHECK(power_sum(f7.b, 2) == 3094964);
}

TEST_CASE("invariant tuples")
{
    const InvariantTuple small = invariant_tuple(Multidegree::make({2, 3}), 2);
    CHECK(small.n == 2);
    CHECK(small.d == 6);
    CHECK(small.s == std::vector<BigInt>{5, 13});
    CHECK_THROWS_AS(invariant_tuple(Multidegree::make({2, 3}), 0), ValidationError);

    for (const FixtureSet* f : all_fixtures()) {
        for (const Multidegree* md : {&f->a, &f->b}) {
            const InvariantTuple t = invariant_tuple(*md, f->n);
            REQUIRE(t.s.size() == f->n);
            CHECK(t.d.get_str() == f->d);
            for (unsigned i = 0; i < f->n; ++i) {
                CHECK(t.s[i].get_str() == f->s[i]);
                CHECK(t.s[i] == power_sum(*md, i + 1));
            }
        }
    }
    CHECK(invariant_tuple(fixture_ci7().a, 7).s[6].get_str() == "111680899229310068732");
}

TEST_CASE("compose")
{
    const auto a = Multidegree::make({3, 2});
    const auto b = Multidegree::make({4});
    CHECK(compose({a, b, 1, 0}) == a);
    CHECK(compose({a, b, 1, 2}).degrees() == std::vector<Degree>{4, 4, 3, 2});
    CHECK_THROWS_AS(compose({a, b, 0, 0}), ValidationError);

    const auto& f6 = fixture_ci6();
    const Multidegree c = compose({f6.a, f6.b, 1, 1});
    CHECK(c.size() == 16);
    CHECK(power_sum(c, 1) == 2 * power_sum(f6.a, 1));
    BigInt direct = 0;
    for (auto d : c.degrees()) direct += static_cast<unsigned long>(d);
    CHECK(direct == 33600);
}

TEST_CASE("composition is additive in power sums and multiplicative in degree")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<unsigned> copies(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = Multidegree::make(oracle::random_degrees(rng, 6, 2, 40));
        const auto b = Multidegree::make(oracle::random_degrees(rng, 6, 2, 40));
        unsigned lambda = copies(rng), mu = copies(rng);
        if (lambda + mu == 0) lambda = 1;
        const Multidegree c = compose({a, b, lambda, mu});
        REQUIRE(c.size() == lambda * a.size() + mu * b.size());
        REQUIRE(total_degree(c) == pow(total_degree(a), lambda) * pow(total_degree(b), mu));
        for (unsigned i = 1; i <= 6; ++i) {
            REQUIRE(power_sum(c, i) == lambda * power_sum(a, i) + mu * power_sum(b, i));
        }
    }
}

TEST_CASE("ambient dimension")
{
    CHECK(ambient_dimension(Multidegree::make({5}), 3) == 4);
    CHECK(ambient_dimension(fixture_ci6().a, 6) == 14);
    const auto& f6 = fixture_ci6();
    CHECK(ambient_dimension(compose({f6.a, f6.b, 1, 1}), 6) == 8 * 2 + 6);
}

TEST_CASE("Newton rigidity: equal length and s_1..s_r force equal multisets")
{
    for (unsigned r = 1; r <= 6; ++r) {
        const Degree hi = r <= 4 ? 12 : 9;
        CHECK(oracle::newton_collisions(r, hi) == 0);
    }
}

TEST_CASE("fixture pairs share d and all power sums up to n")
{
    for (const FixtureSet* f : all_fixtures()) {
        CHECK(invariant_tuple(f->a, f->n) == invariant_tuple(f->b, f->n));
        CHECK(f->a != f->b);
        CHECK(power_sum(f->a, f->n + 1) != power_sum(f->b, f->n + 1));
    }
}

TEST_CASE("JSON shapes")
{
    const auto md = Multidegree::make({2, 3});
    CHECK(json(md).dump() == "[3,2]");
    CHECK(multidegree_from_json(json::parse("[2,3]")) == md);
    CHECK_THROWS_AS(multidegree_from_json(json::parse("[2,1]")), ValidationError);
    CHECK_THROWS_AS(multidegree_from_json(json::parse("[2.5]")), ValidationError);
    CHECK_THROWS_AS(multidegree_from_json(json::parse("{}")), ValidationError);

    CHECK(json(invariant_tuple(md, 2)).dump() == R"({"d":"6","n":2,"s":["5","13"]})");

    const InvariantTuple t = invariant_tuple(fixture_ci7().a, 7);
    CHECK(invariant_tuple_from_json(json(t)) == t);
    CHECK(multidegree_from_json(json(fixture_ci7().b)) == fixture_ci7().b);
    CHECK_THROWS_AS(bigint_from_json(json("12a")), ValidationError);
    CHECK_THROWS_AS(bigint_from_json(json(1.5)), ValidationError);
}
