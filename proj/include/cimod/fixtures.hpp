#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cimod/multidegree.hpp"

namespace cimod {

// m(d_{lambda+1, s-lambda-1}) - m(d_{lambda, s-lambda}) as printed.
struct ExpectedDifference {
    unsigned lambda = 0;
    unsigned s = 0;
    std::string value;

    std::string label() const;
};

struct PrimePower {
    std::int64_t p = 0;
    unsigned exponent = 0;
};

/// A multidegree pair with equal total degree and power sums together with
/// every published integer derived from it. All numbers are decimal strings.
struct FixtureSet {
    std::string name;
    unsigned n = 0;
    Multidegree a;
    Multidegree b;
    std::string d;
    std::vector<std::string> s;
    std::string m_a;
    std::string m_b;
    std::vector<ExpectedDifference> differences;
    // Prime factorization of d, empty when none was published.
    std::vector<PrimePower> factorization;
    // Lower bound on every consecutive difference once s >= 3.
    std::string bound_label;
    std::string bound_value;

    // (name, value) in a stable order: d, s1..sn, m(A), m(B), differences.
    std::vector<std::pair<std::string, std::string>> expected() const;
};

// Six-dimensional pair of 8-tuples in CP^14.
const FixtureSet& fixture_ci6();
// Seven-dimensional pair of 15-tuples in CP^22.
const FixtureSet& fixture_ci7();

const std::vector<const FixtureSet*>& all_fixtures();

// "ci6" or "ci7"; nullptr when unknown.
const FixtureSet* find_fixture(std::string_view name);

} // namespace cimod
