#include "cimod/arith.hpp"

#include <algorithm>
#include <string>

#include "cimod/errors.hpp"

namespace cimod {

BigInt binom(std::int64_t top, std::int64_t bottom)
{
    if (top < 0 || bottom < 0) {
        throw ValidationError("binom: negative argument (" + std::to_string(top) + ", " +
                              std::to_string(bottom) + ")");
    }
    if (top < bottom) {
        return 0;
    }
    const std::int64_t k = std::min(bottom, top - bottom);
    BigInt acc = 1;
    // After step i, acc == C(top - k + i, i); each division is exact.
    for (std::int64_t i = 1; i <= k; ++i) {
        acc *= static_cast<unsigned long>(top - k + i);
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return acc;
}

BigInt binom_shifted(std::int64_t N, std::int64_t m)
{
    if (N < 0) {
        throw ValidationError("binom_shifted: negative N (" + std::to_string(N) + ")");
    }
    if (m < 0) {
        return 0;
    }
    return binom(N + m, N);
}

unsigned padic_valuation(const BigInt& x, std::int64_t p)
{
    if (x <= 0) {
        throw ValidationError("padic_valuation: x must be positive");
    }
    if (p < 2) {
        throw ValidationError("padic_valuation: p must be at least 2");
    }
    BigInt rest = x;
    unsigned v = 0;
    const auto up = static_cast<unsigned long>(p);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), up) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), up);
        ++v;
    }
    return v;
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

ShiftedBinomialTable::ShiftedBinomialTable(std::int64_t N) : N_(N)
{
    if (N < 0) {
        throw ValidationError("ShiftedBinomialTable: negative N");
    }
}

const BigInt& ShiftedBinomialTable::operator()(std::int64_t m)
{
    if (m < 0) {
        return zero_;
    }
    auto it = memo_.find(m);
    if (it == memo_.end()) {
        it = memo_.emplace(m, binom_shifted(N_, m)).first;
    }
    return it->second;
}

} // namespace cimod
