#include "secant/prime_field.hpp"

#include <array>
#include <stdexcept>

namespace secant {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

constexpr std::array<std::uint64_t, 8> kPrimes = {
    2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL,
    2147483563ULL, 2147483549ULL, 2147483543ULL, 2147483497ULL,
};

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin witness set for n < 3.3e24
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (1ULL << 31))
        throw std::invalid_argument("PrimeField: modulus must be in (2, 2^31)");
    if (!is_prime_u64(p))
        throw std::invalid_argument("PrimeField: modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::int64_t e) const {
    a %= p_;
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    return powmod_u64(a, static_cast<std::uint64_t>(e), p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0)
        throw std::invalid_argument("PrimeField::inv: zero has no inverse");
    return powmod_u64(a, p_ - 2, p_);
}

std::uint64_t PrimeField::reduce(const mpz_class& z) const {
    mpz_class r = z % static_cast<unsigned long>(p_);
    if (r < 0) r += static_cast<unsigned long>(p_);
    return r.get_ui();
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r);
}

std::span<const std::uint64_t> prime_table() {
    return {kPrimes.data(), kPrimes.size()};
}

} // namespace secant
