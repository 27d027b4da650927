#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cimod/arith.hpp"

namespace cimod {

using Degree = std::int64_t;

// Multiset of hypersurface degrees, each >= 2, kept in non-increasing order.
class Multidegree {
public:
    // Throws ValidationError on an empty list or any entry below 2.
    static Multidegree make(std::span<const Degree> raw);
    static Multidegree make(std::initializer_list<Degree> raw)
    {
        return make(std::span<const Degree>(raw.begin(), raw.size()));
    }

    const std::vector<Degree>& degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return degrees_.size(); }
    Degree max() const noexcept { return degrees_.front(); }
    Degree min() const noexcept { return degrees_.back(); }

    // "(5, 3, 2)"
    std::string to_string() const;

    friend bool operator==(const Multidegree&, const Multidegree&) = default;
    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

private:
    explicit Multidegree(std::vector<Degree> sorted) : degrees_(std::move(sorted)) {}

    std::vector<Degree> degrees_;
};

inline Multidegree make_multidegree(std::span<const Degree> raw)
{
    return Multidegree::make(raw);
}

// Characteristic data (n, d, s_1..s_n) shared by homeomorphic complete
// intersections.
struct InvariantTuple {
    unsigned n = 0;
    BigInt d;
    std::vector<BigInt> s;

    friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

// d_{lambda,mu}: lambda copies of a followed by mu copies of b.
struct ComposedSpec {
    Multidegree a;
    Multidegree b;
    unsigned lambda = 0;
    unsigned mu = 0;
};

BigInt total_degree(const Multidegree& md);

// s_i = sum_j d_j^i; throws ValidationError for i < 1.
BigInt power_sum(const Multidegree& md, unsigned i);

// Throws ValidationError for n < 1.
InvariantTuple invariant_tuple(const Multidegree& md, unsigned n);

// Throws ValidationError when lambda + mu == 0.
Multidegree compose(const ComposedSpec& spec);

// N = n + r for X_n(d) in CP^N.
std::int64_t ambient_dimension(const Multidegree& md, unsigned n);

} // namespace cimod
