#include "lefschetz/modular.hpp"

#include <stdexcept>
#include <string>

namespace lefschetz {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n)
{
    for (std::uint64_t c = n < 2 ? 2 : n; c <= kMaxPrime; ++c)
        if (is_prime(c))
            return c;
    throw std::overflow_error("next_prime: beyond supported range");
}

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p > kMaxPrime || !is_prime(p))
        throw std::invalid_argument("not a supported prime: " + std::to_string(p));
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept
{
    return powmod(a, e, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in prime field");
    return powmod(a, p_ - 2, p_);
}

std::uint64_t PrimeField::reduce(std::int64_t v) const noexcept
{
    const std::int64_t p = std::int64_t(p_);
    std::int64_t r = v % p;
    return std::uint64_t(r < 0 ? r + p : r);
}

std::uint64_t PrimeField::reduce(const mpz_class& v) const
{
    if (v.fits_slong_p())
        return reduce(std::int64_t(v.get_si()));
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
}

}  // namespace lefschetz
