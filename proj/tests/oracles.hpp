#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cimod/json_io.hpp"
#include "cimod/multidegree.hpp"
#include "cimod/search.hpp"

namespace oracle {

using cimod::BigInt;
using cimod::Degree;

inline BigInt factorial(std::int64_t n)
{
    BigInt f = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        f *= static_cast<unsigned long>(i);
    }
    return f;
}

// top! / (bottom! (top-bottom)!), zero for top < bottom.
inline BigInt factorial_binom(std::int64_t top, std::int64_t bottom)
{
    if (top < bottom) {
        return 0;
    }
    return factorial(top) / (factorial(bottom) * factorial(top - bottom));
}

inline unsigned repeated_division(BigInt x, unsigned long p)
{
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// All non-increasing r-tuples over [lo, hi], in lexicographic order.
inline std::vector<std::vector<Degree>> all_tuples(unsigned r, Degree lo, Degree hi)
{
    std::vector<std::vector<Degree>> out;
    std::vector<Degree> cur;
    std::function<void(Degree)> rec = [&](Degree cap) {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (Degree x = lo; x <= cap; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(hi);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool same_key(const std::vector<Degree>& a, const std::vector<Degree>& b, unsigned k)
{
    BigInt pa = 1, pb = 1;
    for (auto x : a) pa *= static_cast<unsigned long>(x);
    for (auto x : b) pb *= static_cast<unsigned long>(x);
    if (pa != pb) {
        return false;
    }
    for (unsigned i = 1; i <= k; ++i) {
        BigInt sa = 0, sb = 0;
        for (auto x : a) sa += cimod::pow(BigInt(static_cast<unsigned long>(x)), i);
        for (auto x : b) sb += cimod::pow(BigInt(static_cast<unsigned long>(x)), i);
        if (sa != sb) {
            return false;
        }
    }
    return true;
}

// Exhaustive pairwise comparison, serialized as JSON lines.
inline std::string naive_pairs(unsigned r, unsigned k, Degree lo, Degree hi)
{
    const auto tuples = all_tuples(r, lo, hi);
    std::string out;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (std::size_t j = i + 1; j < tuples.size(); ++j) {
            if (same_key(tuples[i], tuples[j], k)) {
                cimod::PairReport rep{cimod::Multidegree::make(tuples[i]),
                                      cimod::Multidegree::make(tuples[j]), k, true};
                out += cimod::to_json_line(rep) + "\n";
            }
        }
    }
    return out;
}

inline std::string serialize(const std::vector<cimod::PairReport>& pairs)
{
    std::string out;
    for (const auto& p : pairs) {
        out += cimod::to_json_line(p) + "\n";
    }
    return out;
}

// Number of distinct-multiset pairs of r-tuples over [2, hi] sharing s_1..s_r.
inline std::size_t newton_collisions(unsigned r, Degree hi)
{
    std::map<std::vector<std::int64_t>, std::size_t> seen;
    std::size_t collisions = 0;
    for (const auto& t : all_tuples(r, 2, hi)) {
        std::vector<std::int64_t> sums(r, 0);
        for (unsigned i = 0; i < r; ++i) {
            for (auto x : t) {
                std::int64_t p = 1;
                for (unsigned e = 0; e <= i; ++e) p *= x;
                sums[i] += p;
            }
        }
        collisions += seen[sums]++;
    }
    return collisions;
}

inline bool excluded(const std::vector<Degree>& sorted_desc, unsigned n)
{
    if (sorted_desc.size() == 1 && sorted_desc[0] == 2) return true;
    if (n != 2) return false;
    return sorted_desc == std::vector<Degree>{4} || sorted_desc == std::vector<Degree>{3, 2} ||
           sorted_desc == std::vector<Degree>{2, 2, 2};
}

inline std::vector<Degree> random_degrees(std::mt19937_64& rng, std::size_t max_len, Degree lo, Degree hi)
{
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<Degree> deg(lo, hi);
    std::vector<Degree> out(len(rng));
    for (auto& d : out) d = deg(rng);
    return out;
}

} // namespace oracle
