#pragma once

#include <string>

#include <json.hpp>

#include "cimod/equivalence.hpp"
#include "cimod/moduli.hpp"
#include "cimod/multidegree.hpp"
#include "cimod/search.hpp"

// Big integers always travel as decimal strings, never as JSON numbers.
namespace cimod {

using json = nlohmann::json;

// Accepts a JSON string of decimal digits (optional leading '-') or a JSON integer.
BigInt bigint_from_json(const json& j);

void to_json(json& j, const Multidegree& md);
// Throws ValidationError unless j is a nonempty array of integers >= 2.
Multidegree multidegree_from_json(const json& j);

void to_json(json& j, const InvariantTuple& t);
InvariantTuple invariant_tuple_from_json(const json& j);

// Per-j correction totals are emitted only with `breakdown`.
json moduli_report_json(const ModuliReport& report, const Multidegree& md, bool breakdown);

void to_json(json& j, const DifferenceReport& r);
void to_json(json& j, const ScanResult& r);
void to_json(json& j, const PrimePowerCondition& c);
void to_json(json& j, const EquivalenceVerdict& v);
void to_json(json& j, const PairReport& r);

// One line of compact JSON, no trailing newline.
std::string to_json_line(const PairReport& r);

} // namespace cimod
