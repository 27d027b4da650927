#include "cimod/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "cimod/errors.hpp"

namespace cimod {
namespace {

json bigint_json(const BigInt& x)
{
    return x.get_str();
}

bool is_decimal(const std::string& text)
{
    const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
    return text.size() > start &&
           std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

BigInt bigint_from_json(const json& j)
{
    if (j.is_number_integer()) {
        return BigInt(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto& text = j.get_ref<const std::string&>();
        if (!is_decimal(text)) {
            throw ValidationError("not a decimal integer: \"" + text + "\"");
        }
        return BigInt(text);
    }
    throw ValidationError("expected a decimal string, got " + j.dump());
}

void to_json(json& j, const Multidegree& md)
{
    j = md.degrees();
}

Multidegree multidegree_from_json(const json& j)
{
    if (!j.is_array()) {
        throw ValidationError("multidegree must be a JSON array of integers");
    }
    std::vector<Degree> raw;
    for (const auto& e : j) {
        if (!e.is_number_integer()) {
            throw ValidationError("multidegree entry is not an integer: " + e.dump());
        }
        raw.push_back(e.get<Degree>());
    }
    return Multidegree::make(raw);
}

void to_json(json& j, const InvariantTuple& t)
{
    json s = json::array();
    for (const auto& x : t.s) {
        s.push_back(bigint_json(x));
    }
    j = json{{"n", t.n}, {"d", bigint_json(t.d)}, {"s", std::move(s)}};
}

InvariantTuple invariant_tuple_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("s")) {
        throw ValidationError("invariant tuple must be an object with n, d and s");
    }
    InvariantTuple t;
    t.n = j.at("n").get<unsigned>();
    t.d = bigint_from_json(j.at("d"));
    for (const auto& e : j.at("s")) {
        t.s.push_back(bigint_from_json(e));
    }
    if (t.s.size() != t.n) {
        throw ValidationError("invariant tuple s must have n entries");
    }
    return t;
}

json moduli_report_json(const ModuliReport& report, const Multidegree& md, bool breakdown)
{
    json j{
        {"n", report.n},
        {"N", report.N},
        {"degrees", md},
        {"m", bigint_json(report.m)},
        {"leading", bigint_json(report.leading)},
        {"max_effective_j", report.max_effective_j},
    };
    if (breakdown) {
        json c = json::array();
        for (const auto& term : report.corrections) {
            c.push_back({{"j", term.j}, {"total", bigint_json(term.total)}});
        }
        j["corrections"] = std::move(c);
    }
    return j;
}

void to_json(json& j, const DifferenceReport& r)
{
    j = json{
        {"lambda", r.lambda},
        {"s", r.s},
        {"M0", bigint_json(r.M0)},
        {"M1", bigint_json(r.M1)},
        {"total", bigint_json(r.total)},
        {"direct", bigint_json(r.direct)},
        {"single_subset_regime", r.single_subset_regime},
        {"agrees", r.agrees},
    };
}

void to_json(json& j, const ScanResult& r)
{
    json entries = json::array();
    for (const auto& e : r.entries) {
        json x{
            {"lambda", e.lambda},
            {"m", bigint_json(e.m)},
            {"max_effective_j", e.max_effective_j},
        };
        x["difference"] = e.difference ? bigint_json(*e.difference) : json(nullptr);
        if (e.decomposed) {
            x["decomposed"] = *e.decomposed;
        }
        entries.push_back(std::move(x));
    }
    j = json{
        {"n", r.n},
        {"s", r.s},
        {"N", r.N},
        {"entries", std::move(entries)},
        {"strictly_increasing", r.strictly_increasing},
        {"decomposition_applicable", r.decomposition_applicable},
        {"decomposition_consistent", r.decomposition_consistent},
    };
    j["min_difference"] = r.min_difference ? bigint_json(*r.min_difference) : json(nullptr);
}

void to_json(json& j, const PrimePowerCondition& c)
{
    j = json{
        {"p", c.p},
        {"required_exponent", c.required_exponent},
        {"actual_exponent", c.actual_exponent},
        {"satisfied", c.satisfied},
    };
}

void to_json(json& j, const EquivalenceVerdict& v)
{
    j = json{
        {"level", std::string(to_string(v.level))},
        {"rule", std::string(to_string(v.rule))},
        {"conditions", v.conditions},
        {"notes", v.notes},
    };
}

void to_json(json& j, const PairReport& r)
{
    j = json{{"a", r.a}, {"b", r.b}, {"k", r.k}, {"verified", r.verified}};
}

std::string to_json_line(const PairReport& r)
{
    return json(r).dump();
}

} // namespace cimod
