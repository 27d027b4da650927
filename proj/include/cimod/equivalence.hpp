#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cimod/multidegree.hpp"

namespace cimod {

// How the required p-adic exponent of the total degree is derived from n and p.
//   floor:   floor((2n+1) / (2(p-1))) + 1
//   ceiling: ceil ((2n+1) / (2(p-1))) + 1
enum class ExponentRule { Floor, Ceiling };

std::string_view to_string(ExponentRule rule);
// Accepts "floor", "ceiling", "floor-rule", "ceiling-rule".
ExponentRule parse_exponent_rule(std::string_view text);

struct PrimePowerCondition {
    std::int64_t p = 0;
    unsigned required_exponent = 0;
    unsigned actual_exponent = 0;
    bool satisfied = false;
};

enum class EquivalenceLevel { DistinctInvariants, SameInvariants, SameInvariantsPlusDivisibility };

std::string_view to_string(EquivalenceLevel level);

struct EquivalenceVerdict {
    EquivalenceLevel level = EquivalenceLevel::DistinctInvariants;
    ExponentRule rule = ExponentRule::Ceiling;
    // Empty for distinct invariants; otherwise the conditions checked on A
    // (equal total degrees make them identical for B).
    std::vector<PrimePowerCondition> conditions;
    std::string notes;
};

// Primes p with p(p-1) <= 2n+2, ascending.
std::vector<std::int64_t> divisibility_primes(unsigned n);

unsigned required_exponent(unsigned n, std::int64_t p, ExponentRule rule);

// Equal n, total degree and s_1..s_n. Throws ValidationError for n < 2.
bool same_homeomorphism_data(const Multidegree& a, const Multidegree& b, unsigned n);

// One condition per prime in divisibility_primes(n); the valuation of the total
// degree is summed degree by degree.
std::vector<PrimePowerCondition> divisibility_condition(const Multidegree& md, unsigned n,
                                                        ExponentRule rule);

EquivalenceVerdict classify(const Multidegree& a, const Multidegree& b, unsigned n,
                            ExponentRule rule = ExponentRule::Ceiling);

} // namespace cimod
