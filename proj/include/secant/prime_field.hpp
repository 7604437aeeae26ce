#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace secant {

/// Prime field F_p with single-word arithmetic, p < 2^31. Rank-deficiency
/// conclusions mod p are evidence only; full-rank conclusions lift to Q
/// (a nonzero minor mod p is a nonzero integer minor).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    /// a^e for signed e; negative exponents go through the inverse.
    std::uint64_t pow(std::uint64_t a, std::int64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t reduce(const mpz_class& z) const;
    std::uint64_t reduce(std::int64_t v) const;

private:
    std::uint64_t p_;
};

/// Fixed table of primes near 2^31 used for trial rotation.
std::span<const std::uint64_t> prime_table();

bool is_prime_u64(std::uint64_t n);

} // namespace secant
