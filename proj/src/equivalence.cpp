#include "cimod/equivalence.hpp"

#include <algorithm>

#include "cimod/arith.hpp"
#include "cimod/errors.hpp"

namespace cimod {

std::string_view to_string(ExponentRule rule)
{
    return rule == ExponentRule::Floor ? "floor" : "ceiling";
}

ExponentRule parse_exponent_rule(std::string_view text)
{
    if (text == "floor" || text == "floor-rule") {
        return ExponentRule::Floor;
    }
    if (text == "ceiling" || text == "ceiling-rule") {
        return ExponentRule::Ceiling;
    }
    throw ValidationError("unknown exponent rule: " + std::string(text));
}

std::string_view to_string(EquivalenceLevel level)
{
    switch (level) {
    case EquivalenceLevel::DistinctInvariants:
        return "distinct-invariants";
    case EquivalenceLevel::SameInvariants:
        return "same-invariants";
    case EquivalenceLevel::SameInvariantsPlusDivisibility:
        return "same-invariants-plus-divisibility";
    }
    return "unknown";
}

std::vector<std::int64_t> divisibility_primes(unsigned n)
{
    const std::int64_t bound = 2 * static_cast<std::int64_t>(n) + 2;
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p * (p - 1) <= bound; ++p) {
        const bool prime = std::none_of(primes.begin(), primes.end(),
                                        [p](std::int64_t q) { return p % q == 0; });
        if (prime) {
            primes.push_back(p);
        }
    }
    return primes;
}

unsigned required_exponent(unsigned n, std::int64_t p, ExponentRule rule)
{
    const std::int64_t num = 2 * static_cast<std::int64_t>(n) + 1;
    const std::int64_t den = 2 * (p - 1);
    const std::int64_t q = rule == ExponentRule::Floor ? num / den : (num + den - 1) / den;
    return static_cast<unsigned>(q + 1);
}

bool same_homeomorphism_data(const Multidegree& a, const Multidegree& b, unsigned n)
{
    if (n < 2) {
        throw ValidationError("dimension n must be at least 2");
    }
    if (total_degree(a) != total_degree(b)) {
        return false;
    }
    return invariant_tuple(a, n).s == invariant_tuple(b, n).s;
}

std::vector<PrimePowerCondition> divisibility_condition(const Multidegree& md, unsigned n,
                                                        ExponentRule rule)
{
    if (n < 2) {
        throw ValidationError("dimension n must be at least 2");
    }
    std::vector<PrimePowerCondition> out;
    for (const std::int64_t p : divisibility_primes(n)) {
        PrimePowerCondition c;
        c.p = p;
        c.required_exponent = required_exponent(n, p, rule);
        for (const Degree d : md.degrees()) {
            c.actual_exponent += padic_valuation(BigInt(static_cast<unsigned long>(d)), p);
        }
        c.satisfied = c.actual_exponent >= c.required_exponent;
        out.push_back(c);
    }
    return out;
}

EquivalenceVerdict classify(const Multidegree& a, const Multidegree& b, unsigned n, ExponentRule rule)
{
    EquivalenceVerdict v;
    v.rule = rule;
    if (!same_homeomorphism_data(a, b, n)) {
        v.level = EquivalenceLevel::DistinctInvariants;
        v.notes = "total degree or power sums s_1..s_n differ";
        return v;
    }
    v.conditions = divisibility_condition(a, n, rule);
    const bool all = std::all_of(v.conditions.begin(), v.conditions.end(),
                                 [](const PrimePowerCondition& c) { return c.satisfied; });
    v.level = all ? EquivalenceLevel::SameInvariantsPlusDivisibility : EquivalenceLevel::SameInvariants;
    v.notes = "sufficient-condition check on invariant data (n, d, s_1..s_n";
    v.notes += all ? ", p-adic divisibility of d)" : ")";
    v.notes += "; not a topological proof";
    return v;
}

} // namespace cimod
