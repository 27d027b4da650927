#pragma once

#include <cstdint>
#include <unordered_map>

#include <gmpxx.h>

namespace cimod {

using BigInt = mpz_class;

// Binomial coefficient C(top, bottom), zero when top < bottom.
// Throws ValidationError on a negative argument.
BigInt binom(std::int64_t top, std::int64_t bottom);

// C(N + m, N) for any integer shift m; zero whenever m < 0.
BigInt binom_shifted(std::int64_t N, std::int64_t m);

// Largest v with p^v | x. Requires x >= 1 and p >= 2; primality of p is
// not checked.
unsigned padic_valuation(const BigInt& x, std::int64_t p);

BigInt pow(const BigInt& base, unsigned long exponent);

// Memo of binom_shifted(N, m) for a fixed N. Not thread-safe; give each
// worker its own instance.
class ShiftedBinomialTable {
public:
    explicit ShiftedBinomialTable(std::int64_t N);

    std::int64_t N() const noexcept { return N_; }

    const BigInt& operator()(std::int64_t m);

private:
    std::int64_t N_;
    BigInt zero_{0};
    std::unordered_map<std::int64_t, BigInt> memo_;
};

} // namespace cimod
