#pragma once

// Word-size prime field arithmetic for primes below 2^61.

#include <cstdint>

#include <gmpxx.h>

namespace lefschetz {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Smallest prime >= n. Throws std::overflow_error past the supported range.
std::uint64_t next_prime(std::uint64_t n);

/// Largest prime accepted as a characteristic or modulus.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 61) - 1;

/// Mersenne prime 2^61 - 1; used as the certifying prime in characteristic 0.
inline constexpr std::uint64_t kCertifyingPrime = kMaxPrime;

class PrimeField {
public:
    /// Throws std::invalid_argument unless p is a prime <= kMaxPrime.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t prime() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept
    {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept
    {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept
    {
        return std::uint64_t((unsigned __int128)a * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    /// Throws std::domain_error for a == 0.
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t reduce(std::int64_t v) const noexcept;
    std::uint64_t reduce(const mpz_class& v) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

}  // namespace lefschetz
