#include "cimod/multidegree.hpp"

#include <algorithm>
#include <functional>

#include "cimod/errors.hpp"

namespace cimod {

Multidegree Multidegree::make(std::span<const Degree> raw)
{
    if (raw.empty()) {
        throw ValidationError("multidegree must be nonempty");
    }
    for (const Degree d : raw) {
        if (d < 2) {
            throw ValidationError("degree below 2: " + std::to_string(d));
        }
    }
    std::vector<Degree> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return Multidegree(std::move(sorted));
}

std::string Multidegree::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += std::to_string(degrees_[i]);
    }
    out += ')';
    return out;
}

BigInt total_degree(const Multidegree& md)
{
    BigInt d = 1;
    for (const Degree x : md.degrees()) {
        d *= static_cast<unsigned long>(x);
    }
    return d;
}

BigInt power_sum(const Multidegree& md, unsigned i)
{
    if (i < 1) {
        throw ValidationError("power sum index must be at least 1");
    }
    BigInt s = 0;
    for (const Degree x : md.degrees()) {
        s += pow(BigInt(static_cast<unsigned long>(x)), i);
    }
    return s;
}

InvariantTuple invariant_tuple(const Multidegree& md, unsigned n)
{
    if (n < 1) {
        throw ValidationError("dimension n must be at least 1");
    }
    InvariantTuple t;
    t.n = n;
    t.d = total_degree(md);
    t.s.reserve(n);
    // Running powers avoid recomputing x^i from scratch.
    std::vector<BigInt> powers(md.size(), 1);
    for (unsigned i = 1; i <= n; ++i) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < md.size(); ++j) {
            powers[j] *= static_cast<unsigned long>(md.degrees()[j]);
            sum += powers[j];
        }
        t.s.push_back(std::move(sum));
    }
    return t;
}

Multidegree compose(const ComposedSpec& spec)
{
    if (spec.lambda + spec.mu == 0) {
        throw ValidationError("composed multidegree needs lambda + mu >= 1");
    }
    std::vector<Degree> all;
    all.reserve(spec.lambda * spec.a.size() + spec.mu * spec.b.size());
    for (unsigned c = 0; c < spec.lambda; ++c) {
        all.insert(all.end(), spec.a.degrees().begin(), spec.a.degrees().end());
    }
    for (unsigned c = 0; c < spec.mu; ++c) {
        all.insert(all.end(), spec.b.degrees().begin(), spec.b.degrees().end());
    }
    return Multidegree::make(all);
}

std::int64_t ambient_dimension(const Multidegree& md, unsigned n)
{
    if (n < 1) {
        throw ValidationError("dimension n must be at least 1");
    }
    return static_cast<std::int64_t>(n) + static_cast<std::int64_t>(md.size());
}

} // namespace cimod
