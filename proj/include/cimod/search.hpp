#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cimod/arith.hpp"
#include "cimod/multidegree.hpp"

namespace cimod {

// (d, s_1..s_k) of a tuple of degrees.
struct SearchKey {
    BigInt product;
    std::vector<BigInt> sums;

    friend bool operator==(const SearchKey&, const SearchKey&) = default;
};

struct SearchKeyHash {
    std::size_t operator()(const SearchKey& key) const noexcept;
};

SearchKey search_key(std::span<const Degree> degrees, unsigned k);

struct PairReport {
    Multidegree a;
    Multidegree b;
    unsigned k = 0;
    bool verified = false;
};

// verified iff a != b as multisets, the products agree and s_1..s_k agree.
PairReport verify_pair(const Multidegree& a, const Multidegree& b, unsigned k);

struct SearchParams {
    unsigned r = 0;
    unsigned k = 0;
    Degree lo = 2;
    Degree hi = 2;
    // Largest number of r-tuples the search will enumerate.
    BigInt budget = 10'000'000;
    // 0 means hardware concurrency.
    unsigned threads = 1;
    // Called once per finished shard with a short status line.
    std::function<void(const std::string&)> progress;
};

// Number of non-increasing r-tuples over [lo, hi]: C(hi - lo + r, r).
BigInt enumeration_size(unsigned r, Degree lo, Degree hi);

/// Every unordered pair of distinct non-increasing r-tuples over [lo, hi]
/// sharing the product and s_1..s_k, with a < b lexicographically, sorted by
/// (a, b). Output does not depend on the worker count.
///
/// Throws ValidationError when r < k + 2 (equal product plus k sums then
/// pins the multiset), k < 1, lo < 2 or lo > hi, and BudgetExceeded when
/// enumeration_size exceeds the budget.
std::vector<PairReport> find_pairs(const SearchParams& params);

} // namespace cimod
