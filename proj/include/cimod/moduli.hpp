#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cimod/arith.hpp"
#include "cimod/multidegree.hpp"

namespace cimod {

struct EvalOptions {
    // Workers for the outer sum over degrees; 0 means hardware concurrency.
    unsigned threads = 1;
};

// Signed total of all subset terms of one size j.
struct CorrectionTerm {
    unsigned j = 0;
    BigInt total;
};

/// Moduli dimension of X_n(d) with the pieces of the formula
///
///     m = 1 - (N+1)^2 + sum_i C(N+d_i, N)
///           + sum_i sum_{j>=1} (-1)^j sum_{|K|=j} C(N + d_i - sum_{k in K} d_k, N)
///
/// kept separately. `corrections` holds j = 1..max_effective_j, where
/// max_effective_j is the largest subset size with a nonzero term.
struct ModuliReport {
    unsigned n = 0;
    std::int64_t N = 0;
    BigInt m;
    BigInt leading;
    std::vector<CorrectionTerm> corrections;
    unsigned max_effective_j = 0;

    BigInt reassembled() const;
};

// Throws ValidationError for n < 2 and DomainExclusion for quadric
// hypersurfaces and K3 surfaces.
void check_formula_domain(const Multidegree& md, unsigned n);

/// Exact moduli dimension. Subsets are enumerated over distinct degree values
/// with multiplicities, ascending, and a branch is cut as soon as its degree
/// sum exceeds d_i (every later term would be a vanishing binomial).
ModuliReport moduli_dimension(const Multidegree& md, unsigned n, const EvalOptions& opts = {});

inline constexpr std::size_t kOracleMaxLength = 20;

// Unpruned evaluation over all 2^r index subsets. Refuses r > kOracleMaxLength.
BigInt moduli_dimension_oracle(const Multidegree& md, unsigned n);

/// m(d_{lambda+1, s-lambda-1}) - m(d_{lambda, s-lambda}) split as M0 + M1,
/// where M0 is the change in the leading binomial sum and M1 the change in
/// the single-subset corrections. The split is exact only when no subset of
/// two or more degrees contributes; `direct` is the difference of two full
/// evaluations and `agrees` records whether they match.
struct DifferenceReport {
    unsigned lambda = 0;
    unsigned s = 0;
    BigInt M0;
    BigInt M1;
    BigInt total;
    BigInt direct;
    bool single_subset_regime = false;
    bool agrees = false;
};

// Requires len(a) == len(b), lambda < s, n >= 2.
DifferenceReport difference_decomposed(const Multidegree& a, const Multidegree& b, unsigned n,
                                       unsigned lambda, unsigned s, const EvalOptions& opts = {});

struct ScanEntry {
    unsigned lambda = 0;
    BigInt m;
    unsigned max_effective_j = 0;
    // m(d_{lambda, s-lambda}) - m(d_{lambda-1, s-lambda+1}); absent at lambda = 0.
    std::optional<BigInt> difference;
    std::optional<DifferenceReport> decomposed;
};

struct ScanResult {
    unsigned n = 0;
    unsigned s = 0;
    std::int64_t N = 0;
    std::vector<ScanEntry> entries;
    bool strictly_increasing = true;
    // Every step was in the single-subset regime.
    bool decomposition_applicable = true;
    // Every applicable step matched direct subtraction.
    bool decomposition_consistent = true;
    std::optional<BigInt> min_difference;
};

// m(d_{lambda, s-lambda}) for lambda = 0..s with consecutive differences
// cross-checked against difference_decomposed.
ScanResult monotonic_scan(const Multidegree& a, const Multidegree& b, unsigned n, unsigned s,
                          const EvalOptions& opts = {});

} // namespace cimod
