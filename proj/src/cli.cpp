#include "cimod/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cimod/equivalence.hpp"
#include "cimod/errors.hpp"
#include "cimod/fixtures.hpp"
#include "cimod/json_io.hpp"
#include "cimod/moduli.hpp"
#include "cimod/search.hpp"

namespace cimod::cli {
namespace {

struct Options {
    std::optional<unsigned> n;
    std::string degrees;
    std::string a;
    std::string b;
    std::string fixture;
    std::string in_file;
    unsigned s = 1;
    std::optional<unsigned> lambda;
    std::optional<unsigned> k;
    unsigned r = 0;
    Degree lo = 2;
    Degree hi = 2;
    std::string budget = "10000000";
    std::string rule = "ceiling";
    bool breakdown = false;
    bool json = true;
    bool progress = false;
    unsigned threads = 0;
};

std::vector<Degree> parse_degree_list(const std::string& text)
{
    std::vector<Degree> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) {
            return;
        }
        Degree v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw ValidationError("not an integer degree: \"" + token + "\"");
        }
        out.push_back(v);
        token.clear();
    };
    for (const char c : text) {
        if (c == ',' || c == ' ' || c == '[' || c == ']') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    return out;
}

Multidegree parse_multidegree(const std::string& text)
{
    return Multidegree::make(parse_degree_list(text));
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open input file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
}

std::optional<unsigned> json_n(const json& doc)
{
    if (doc.is_object() && doc.contains("n")) {
        return doc.at("n").get<unsigned>();
    }
    return std::nullopt;
}

const FixtureSet& require_fixture(const std::string& name)
{
    const FixtureSet* f = find_fixture(name);
    if (f == nullptr) {
        throw ValidationError("unknown fixture \"" + name + "\" (expected ci6 or ci7)");
    }
    return *f;
}

unsigned require_n(const Options& o)
{
    if (!o.n) {
        throw ValidationError("--n is required");
    }
    return *o.n;
}

struct SingleInput {
    Multidegree md;
    unsigned n;
};

// --degrees, --fixture NAME:A|B or --in FILE (array, or object with "degrees").
SingleInput single_input(const Options& o)
{
    if (!o.fixture.empty()) {
        const auto colon = o.fixture.find(':');
        if (colon == std::string::npos) {
            throw ValidationError("--fixture needs a side for this command, e.g. ci6:A");
        }
        const FixtureSet& f = require_fixture(o.fixture.substr(0, colon));
        const std::string side = o.fixture.substr(colon + 1);
        if (side != "A" && side != "B") {
            throw ValidationError("fixture side must be A or B");
        }
        return {side == "A" ? f.a : f.b, o.n.value_or(f.n)};
    }
    if (!o.in_file.empty()) {
        const json doc = read_json_file(o.in_file);
        const json& arr = doc.is_object() ? doc.at("degrees") : doc;
        const auto n = o.n ? o.n : json_n(doc);
        if (!n) {
            throw ValidationError("--n is required");
        }
        Multidegree md = multidegree_from_json(arr);
        return {std::move(md), *n};
    }
    if (o.degrees.empty()) {
        throw ValidationError("one of --degrees, --fixture or --in is required");
    }
    const unsigned n = require_n(o);
    return {parse_multidegree(o.degrees), n};
}

struct PairInput {
    Multidegree a;
    Multidegree b;
    unsigned n;
    const FixtureSet* fixture = nullptr;
};

// --fixture NAME, --a/--b with --n, or --in FILE with {"a": [...], "b": [...], "n": n}.
PairInput pair_input(const Options& o)
{
    if (!o.fixture.empty()) {
        const FixtureSet& f = require_fixture(o.fixture.substr(0, o.fixture.find(':')));
        return {f.a, f.b, o.n.value_or(f.n), &f};
    }
    if (!o.in_file.empty()) {
        const json doc = read_json_file(o.in_file);
        if (!doc.is_object() || !doc.contains("a") || !doc.contains("b")) {
            throw ValidationError("pair input must be an object with \"a\" and \"b\"");
        }
        const auto n = o.n ? o.n : json_n(doc);
        if (!n) {
            throw ValidationError("--n is required");
        }
        Multidegree a = multidegree_from_json(doc.at("a"));
        Multidegree b = multidegree_from_json(doc.at("b"));
        return {std::move(a), std::move(b), *n};
    }
    if (o.a.empty() || o.b.empty()) {
        throw ValidationError("--a and --b (or --fixture, or --in) are required");
    }
    const unsigned n = require_n(o);
    Multidegree a = parse_multidegree(o.a);
    Multidegree b = parse_multidegree(o.b);
    return {std::move(a), std::move(b), n};
}

EvalOptions eval_options(const Options& o)
{
    return EvalOptions{o.threads};
}

void emit(std::ostream& out, const json& j)
{
    out << j.dump(2) << '\n';
}

int cmd_invariants(const Options& o, std::ostream& out)
{
    const SingleInput in = single_input(o);
    json j = invariant_tuple(in.md, in.n);
    j["degrees"] = in.md;
    emit(out, j);
    return kOk;
}

int cmd_moduli(const Options& o, std::ostream& out)
{
    const SingleInput in = single_input(o);
    const ModuliReport report = moduli_dimension(in.md, in.n, eval_options(o));
    emit(out, moduli_report_json(report, in.md, o.breakdown));
    return kOk;
}

int cmd_difference(const Options& o, std::ostream& out)
{
    const PairInput in = pair_input(o);
    const DifferenceReport r =
        difference_decomposed(in.a, in.b, in.n, o.lambda.value_or(0), o.s, eval_options(o));
    json j = r;
    j["n"] = in.n;
    j["a"] = in.a;
    j["b"] = in.b;
    emit(out, j);
    return kOk;
}

int cmd_scan(const Options& o, std::ostream& out)
{
    const PairInput in = pair_input(o);
    const ScanResult r = monotonic_scan(in.a, in.b, in.n, o.s, eval_options(o));
    json j = r;
    j["a"] = in.a;
    j["b"] = in.b;

    std::string verdict = r.strictly_increasing ? "strictly increasing" : "not strictly increasing";
    if (in.fixture != nullptr && o.s >= 3) {
        const BigInt bound(in.fixture->bound_value);
        const bool holds = r.min_difference && *r.min_difference > bound;
        j["bound"] = {{"label", in.fixture->bound_label},
                      {"value", in.fixture->bound_value},
                      {"holds", holds}};
        verdict += holds ? "; all differences > " : "; NOT all differences > ";
        verdict += in.fixture->bound_label;
    }
    if (!r.decomposition_applicable) {
        verdict += "; M0+M1 split not applicable (subsets of size >= 2 contribute)";
    } else if (!r.decomposition_consistent) {
        verdict += "; M0+M1 split disagrees with direct subtraction";
    }
    j["verdict"] = verdict;
    emit(out, j);
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    const PairInput in = pair_input(o);
    const ExponentRule rule = parse_exponent_rule(o.rule);
    json j = classify(in.a, in.b, in.n, rule);
    j["n"] = in.n;
    j["a"] = in.a;
    j["b"] = in.b;
    j["rule_option"] = o.rule;
    emit(out, j);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const PairInput in = pair_input(o);
    const PairReport r = verify_pair(in.a, in.b, o.k.value_or(in.n));
    emit(out, r);
    return kOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err)
{
    SearchParams p;
    p.r = o.r;
    p.k = o.k.value_or(0);
    p.lo = o.lo;
    p.hi = o.hi;
    p.threads = o.threads;
    try {
        p.budget = BigInt(o.budget);
    } catch (const std::invalid_argument&) {
        throw ValidationError("--budget must be a decimal integer");
    }
    if (o.progress) {
        p.progress = [&err](const std::string& line) { err << line << '\n'; };
    }
    for (const PairReport& r : find_pairs(p)) {
        out << to_json_line(r) << '\n';
    }
    return kOk;
}

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
};

std::vector<Check> fixture_checks(const FixtureSet& f, const EvalOptions& opts)
{
    std::vector<Check> checks;
    const std::string tag = f.name + " ";
    for (const auto* side : {&f.a, &f.b}) {
        const std::string who = side == &f.a ? "A " : "B ";
        const InvariantTuple t = invariant_tuple(*side, f.n);
        checks.push_back({tag + who + "d", f.d, t.d.get_str()});
        for (std::size_t i = 0; i < f.s.size(); ++i) {
            checks.push_back({tag + who + "s" + std::to_string(i + 1), f.s[i], t.s[i].get_str()});
        }
    }
    checks.push_back({tag + "m(A)", f.m_a, moduli_dimension(f.a, f.n, opts).m.get_str()});
    checks.push_back({tag + "m(B)", f.m_b, moduli_dimension(f.b, f.n, opts).m.get_str()});
    for (const auto& diff : f.differences) {
        const DifferenceReport r = difference_decomposed(f.a, f.b, f.n, diff.lambda, diff.s, opts);
        checks.push_back({tag + diff.label() + " direct", diff.value, r.direct.get_str()});
        checks.push_back({tag + diff.label() + " M0+M1", diff.value, r.total.get_str()});
    }
    if (!f.factorization.empty()) {
        BigInt product = 1;
        for (const auto& pp : f.factorization) {
            product *= pow(BigInt(static_cast<unsigned long>(pp.p)), pp.exponent);
        }
        checks.push_back({tag + "factorization of d", f.d, product.get_str()});
        for (const auto& c : divisibility_condition(f.a, f.n, ExponentRule::Ceiling)) {
            const auto it = std::find_if(f.factorization.begin(), f.factorization.end(),
                                         [&](const PrimePower& pp) { return pp.p == c.p; });
            const unsigned expected = it == f.factorization.end() ? 0 : it->exponent;
            checks.push_back({tag + "v_" + std::to_string(c.p) + "(d)", std::to_string(expected),
                              std::to_string(c.actual_exponent)});
        }
    }
    return checks;
}

int cmd_selftest(const Options& o, std::ostream& out)
{
    json results = json::array();
    std::size_t failed = 0;
    for (const FixtureSet* f : all_fixtures()) {
        for (const Check& c : fixture_checks(*f, eval_options(o))) {
            const bool pass = c.expected == c.actual;
            failed += pass ? 0 : 1;
            json j{{"name", c.name}, {"pass", pass}};
            if (!pass) {
                j["expected"] = c.expected;
                j["actual"] = c.actual;
            }
            results.push_back(std::move(j));
        }
    }
    emit(out, json{{"checks", results},
                   {"passed", results.size() - failed},
                   {"failed", failed}});
    return failed == 0 ? kOk : kFailure;
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message,
                const json& extra = json::object())
{
    json j{{"error", message}, {"kind", kind}};
    j.update(extra);
    err << j.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariants and moduli dimensions of complete intersections"};
    app.name("cimod");
    app.require_subcommand(1);
    Options o;

    auto add_single = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "complex dimension n");
        sub->add_option("--degrees", o.degrees, "comma-separated degrees");
        sub->add_option("--fixture", o.fixture, "built-in multidegree, ci6:A|ci6:B|ci7:A|ci7:B");
        sub->add_option("--in", o.in_file, "JSON file: array of degrees or {\"degrees\", \"n\"}");
    };
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "complex dimension n");
        sub->add_option("--a", o.a, "first multidegree, comma-separated");
        sub->add_option("--b", o.b, "second multidegree, comma-separated");
        sub->add_option("--fixture", o.fixture, "built-in pair, ci6|ci7");
        sub->add_option("--in", o.in_file, "JSON file {\"a\", \"b\", \"n\"}");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "worker threads, 0 = all available");
        sub->add_flag("--json,!--no-json", o.json, "JSON output (always on)");
    };

    CLI::App* invariants = app.add_subcommand("invariants", "total degree and power sums s_1..s_n");
    add_single(invariants);
    add_common(invariants);

    CLI::App* moduli = app.add_subcommand("moduli", "moduli space dimension");
    add_single(moduli);
    add_common(moduli);
    moduli->add_flag("--breakdown", o.breakdown, "emit per-subset-size correction totals");

    CLI::App* difference = app.add_subcommand("difference", "M0 + M1 split of one monotonicity step");
    add_pair(difference);
    add_common(difference);
    difference->add_option("--lambda", o.lambda, "lambda, 0 <= lambda < s");
    difference->add_option("--s", o.s, "number of copies s");

    CLI::App* scan = app.add_subcommand("scan", "m(d_{lambda,s-lambda}) for lambda = 0..s");
    add_pair(scan);
    add_common(scan);
    scan->add_option("--s", o.s, "number of copies s")->check(CLI::PositiveNumber);

    CLI::App* classify_cmd = app.add_subcommand("classify", "compare invariant data of a pair");
    add_pair(classify_cmd);
    add_common(classify_cmd);
    classify_cmd->add_option("--rule", o.rule, "exponent rule: floor|ceiling");

    CLI::App* verify = app.add_subcommand("verify", "check equal product and s_1..s_k");
    add_pair(verify);
    add_common(verify);
    verify->add_option("--k", o.k, "power-sum depth (default n)");

    CLI::App* search = app.add_subcommand("search", "find pairs with equal product and s_1..s_k");
    add_common(search);
    search->add_option("--r", o.r, "tuple length")->required();
    search->add_option("--k", o.k, "power-sum depth")->required();
    search->add_option("--lo", o.lo, "smallest degree")->required();
    search->add_option("--hi", o.hi, "largest degree")->required();
    search->add_option("--budget", o.budget, "largest enumeration size");
    search->add_flag("--progress", o.progress, "report finished shards on stderr");

    CLI::App* selftest = app.add_subcommand("selftest", "reproduce every built-in expected value");
    add_common(selftest);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        error_json(err, "validation", e.what());
        return kValidation;
    }

    try {
        if (invariants->parsed()) return cmd_invariants(o, out);
        if (moduli->parsed()) return cmd_moduli(o, out);
        if (difference->parsed()) return cmd_difference(o, out);
        if (scan->parsed()) return cmd_scan(o, out);
        if (classify_cmd->parsed()) return cmd_classify(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (search->parsed()) return cmd_search(o, out, err);
        if (selftest->parsed()) return cmd_selftest(o, out);
    } catch (const DomainExclusion& e) {
        error_json(err, "domain-exclusion", e.what());
        return kDomainExclusion;
    } catch (const BudgetExceeded& e) {
        error_json(err, "budget", e.what(), {{"enumeration_size", e.size()}});
        return kBudget;
    } catch (const ValidationError& e) {
        error_json(err, "validation", e.what());
        return kValidation;
    } catch (const json::exception& e) {
        error_json(err, "validation", e.what());
        return kValidation;
    } catch (const std::exception& e) {
        error_json(err, "internal", e.what());
        return kFailure;
    }
    return kFailure;
}

} // namespace cimod::cli
