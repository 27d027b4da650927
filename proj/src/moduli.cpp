#include "cimod/moduli.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "cimod/errors.hpp"

namespace cimod {
namespace {

struct DegreeClass {
    Degree value;
    std::size_t count;
};

std::vector<DegreeClass> classes_ascending(const Multidegree& md)
{
    std::vector<DegreeClass> out;
    const auto& ds = md.degrees();
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        if (!out.empty() && out.back().value == *it) {
            ++out.back().count;
        } else {
            out.push_back({*it, 1});
        }
    }
    return out;
}

unsigned resolve_threads(unsigned requested, std::size_t work_items)
{
    unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work_items, 1)));
}

// Unsigned subset sums for one outer degree, indexed by subset size.
class SubsetAccumulator {
public:
    SubsetAccumulator(const std::vector<DegreeClass>& classes, ShiftedBinomialTable& table,
                      std::vector<BigInt>& by_j)
        : classes_(classes), table_(table), by_j_(by_j)
    {
    }

    void run(Degree outer, const BigInt& outer_multiplicity)
    {
        descend(0, outer, 0, outer_multiplicity);
    }

private:
    void descend(std::size_t first, Degree remaining, unsigned j, const BigInt& weight)
    {
        for (std::size_t t = first; t < classes_.size(); ++t) {
            const DegreeClass& c = classes_[t];
            if (c.value > remaining) {
                break;
            }
            Degree left = remaining;
            for (std::size_t k = 1; k <= c.count; ++k) {
                left -= c.value;
                if (left < 0) {
                    break;
                }
                const unsigned size = j + static_cast<unsigned>(k);
                BigInt w = weight * choose(c.count, k);
                if (by_j_.size() <= size) {
                    by_j_.resize(size + 1, BigInt(0));
                }
                by_j_[size] += w * table_(left);
                descend(t + 1, left, size, w);
            }
        }
    }

    const BigInt& choose(std::size_t count, std::size_t k)
    {
        const auto key = std::make_pair(count, k);
        auto it = std::find_if(choose_memo_.begin(), choose_memo_.end(),
                               [&](const auto& e) { return e.first == key; });
        if (it == choose_memo_.end()) {
            choose_memo_.emplace_back(key, binom(static_cast<std::int64_t>(count),
                                                 static_cast<std::int64_t>(k)));
            return choose_memo_.back().second;
        }
        return it->second;
    }

    const std::vector<DegreeClass>& classes_;
    ShiftedBinomialTable& table_;
    std::vector<BigInt>& by_j_;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, BigInt>> choose_memo_;
};

struct PartialSums {
    BigInt leading = 0;
    std::vector<BigInt> by_j;
};

void add_into(std::vector<BigInt>& dst, const std::vector<BigInt>& src)
{
    if (dst.size() < src.size()) {
        dst.resize(src.size(), BigInt(0));
    }
    for (std::size_t j = 0; j < src.size(); ++j) {
        dst[j] += src[j];
    }
}

bool is_k3(const Multidegree& md)
{
    const auto& d = md.degrees();
    return d == std::vector<Degree>{4} || d == std::vector<Degree>{3, 2} ||
           d == std::vector<Degree>{2, 2, 2};
}

// Sum over x in xs, y in ys of C(N + x - y, N).
BigInt cross_sum(const Multidegree& xs, const Multidegree& ys, ShiftedBinomialTable& table)
{
    BigInt acc = 0;
    for (const Degree x : xs.degrees()) {
        for (const Degree y : ys.degrees()) {
            acc += table(x - y);
        }
    }
    return acc;
}

BigInt leading_sum(const Multidegree& md, ShiftedBinomialTable& table)
{
    BigInt acc = 0;
    for (const Degree x : md.degrees()) {
        acc += table(x);
    }
    return acc;
}

void check_difference_inputs(const Multidegree& a, const Multidegree& b, unsigned n,
                             unsigned lambda, unsigned s)
{
    if (a.size() != b.size()) {
        throw ValidationError("multidegrees must have equal length (" + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()) + ")");
    }
    if (s < 1) {
        throw ValidationError("s must be at least 1");
    }
    if (lambda >= s) {
        throw ValidationError("lambda must be below s");
    }
    if (n < 2) {
        throw ValidationError("dimension n must be at least 2");
    }
}

// M0 and M1 only; the caller fills in the direct comparison.
DifferenceReport decompose(const Multidegree& a, const Multidegree& b, unsigned n, unsigned lambda,
                           unsigned s)
{
    check_difference_inputs(a, b, n, lambda, s);
    const std::int64_t N =
        static_cast<std::int64_t>(n) + static_cast<std::int64_t>(s) * static_cast<std::int64_t>(a.size());
    ShiftedBinomialTable table(N);

    DifferenceReport r;
    r.lambda = lambda;
    r.s = s;
    r.M0 = leading_sum(a, table) - leading_sum(b, table);

    const long l = lambda;
    const long sl = s;
    const BigInt aa = cross_sum(a, a, table);
    const BigInt ab = cross_sum(a, b, table);
    const BigInt ba = cross_sum(b, a, table);
    const BigInt bb = cross_sum(b, b, table);
    r.M1 = BigInt(-2 * l - 1) * aa + BigInt(1 + 2 * l - sl) * (ab + ba) + BigInt(2 * sl - 2 * l - 1) * bb;
    r.total = r.M0 + r.M1;
    return r;
}

} // namespace

BigInt ModuliReport::reassembled() const
{
    BigInt out = BigInt(1) - BigInt(N + 1) * BigInt(N + 1) + leading;
    for (const auto& c : corrections) {
        out += c.total;
    }
    return out;
}

void check_formula_domain(const Multidegree& md, unsigned n)
{
    if (n < 2) {
        throw ValidationError("dimension n must be at least 2");
    }
    if (md.size() == 1 && md.max() == 2) {
        throw DomainExclusion("quadric hypersurface " + md.to_string() +
                              " is excluded from the moduli formula");
    }
    if (n == 2 && is_k3(md)) {
        throw DomainExclusion("K3 surface " + md.to_string() +
                              " is excluded from the moduli formula");
    }
}

ModuliReport moduli_dimension(const Multidegree& md, unsigned n, const EvalOptions& opts)
{
    check_formula_domain(md, n);

    const std::int64_t N = ambient_dimension(md, n);
    const std::vector<DegreeClass> classes = classes_ascending(md);
    const unsigned workers = resolve_threads(opts.threads, classes.size());

    std::vector<PartialSums> partial(workers);
    auto work = [&](unsigned w) {
        ShiftedBinomialTable table(N);
        PartialSums& out = partial[w];
        SubsetAccumulator acc(classes, table, out.by_j);
        for (std::size_t c = w; c < classes.size(); c += workers) {
            const BigInt mult = static_cast<unsigned long>(classes[c].count);
            out.leading += mult * table(classes[c].value);
            acc.run(classes[c].value, mult);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    PartialSums sum;
    for (const auto& p : partial) {
        sum.leading += p.leading;
        add_into(sum.by_j, p.by_j);
    }

    ModuliReport report;
    report.n = n;
    report.N = N;
    report.leading = std::move(sum.leading);
    for (std::size_t j = 1; j < sum.by_j.size(); ++j) {
        if (sum.by_j[j] != 0) {
            report.max_effective_j = static_cast<unsigned>(j);
        }
    }
    for (unsigned j = 1; j <= report.max_effective_j; ++j) {
        BigInt total = j % 2 == 0 ? sum.by_j[j] : BigInt(-sum.by_j[j]);
        report.corrections.push_back({j, std::move(total)});
    }
    report.m = report.reassembled();
    return report;
}

BigInt moduli_dimension_oracle(const Multidegree& md, unsigned n)
{
    check_formula_domain(md, n);
    const std::size_t r = md.size();
    if (r > kOracleMaxLength) {
        throw ValidationError("oracle refuses r = " + std::to_string(r) + " (limit " +
                              std::to_string(kOracleMaxLength) + ")");
    }
    const std::int64_t N = ambient_dimension(md, n);
    const auto& d = md.degrees();
    const auto binomial = [N](std::int64_t top) {
        BigInt out = 0;
        if (top >= N) {
            mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(N));
        }
        return out;
    };

    BigInt m = BigInt(1) - BigInt(N + 1) * BigInt(N + 1);
    for (std::size_t i = 0; i < r; ++i) {
        m += binomial(N + d[i]);
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << r); ++mask) {
            std::int64_t subset_sum = 0;
            for (std::size_t k = 0; k < r; ++k) {
                if ((mask >> k) & 1u) {
                    subset_sum += d[k];
                }
            }
            const BigInt term = binomial(N + d[i] - subset_sum);
            if (std::popcount(mask) % 2 == 0) {
                m += term;
            } else {
                m -= term;
            }
        }
    }
    return m;
}

DifferenceReport difference_decomposed(const Multidegree& a, const Multidegree& b, unsigned n,
                                       unsigned lambda, unsigned s, const EvalOptions& opts)
{
    DifferenceReport r = decompose(a, b, n, lambda, s);
    const ModuliReport upper = moduli_dimension(compose({a, b, lambda + 1, s - lambda - 1}), n, opts);
    const ModuliReport lower = moduli_dimension(compose({a, b, lambda, s - lambda}), n, opts);
    r.direct = upper.m - lower.m;
    r.single_subset_regime = upper.max_effective_j <= 1 && lower.max_effective_j <= 1;
    r.agrees = r.direct == r.total;
    return r;
}

ScanResult monotonic_scan(const Multidegree& a, const Multidegree& b, unsigned n, unsigned s,
                          const EvalOptions& opts)
{
    if (a.size() != b.size()) {
        throw ValidationError("multidegrees must have equal length");
    }
    if (s < 1) {
        throw ValidationError("s must be at least 1");
    }
    ScanResult out;
    out.n = n;
    out.s = s;
    out.N = static_cast<std::int64_t>(n) + static_cast<std::int64_t>(s) * static_cast<std::int64_t>(a.size());

    for (unsigned lambda = 0; lambda <= s; ++lambda) {
        const ModuliReport rep = moduli_dimension(compose({a, b, lambda, s - lambda}), n, opts);
        ScanEntry e;
        e.lambda = lambda;
        e.m = rep.m;
        e.max_effective_j = rep.max_effective_j;
        if (lambda > 0) {
            const ScanEntry& prev = out.entries.back();
            BigInt diff = e.m - prev.m;
            DifferenceReport dec = decompose(a, b, n, lambda - 1, s);
            dec.direct = diff;
            dec.single_subset_regime = prev.max_effective_j <= 1 && e.max_effective_j <= 1;
            dec.agrees = dec.direct == dec.total;

            if (diff <= 0) {
                out.strictly_increasing = false;
            }
            if (!dec.single_subset_regime) {
                out.decomposition_applicable = false;
            } else if (!dec.agrees) {
                out.decomposition_consistent = false;
            }
            if (!out.min_difference || diff < *out.min_difference) {
                out.min_difference = diff;
            }
            e.difference = std::move(diff);
            e.decomposed = std::move(dec);
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

} // namespace cimod
