#include "lefschetz/monomials.hpp"

#include <numeric>
#include <stdexcept>

namespace lefschetz {

Monomial Monomial::from_variables(std::size_t n, std::span<const std::size_t> vars)
{
    std::vector<Exponent> exps(n, 0);
    for (std::size_t k : vars) {
        if (k >= n)
            throw std::invalid_argument("variable index out of range");
        if (exps[k] != 0)
            throw std::invalid_argument("repeated variable in square-free monomial");
        exps[k] = 1;
    }
    return Monomial(std::move(exps));
}

Monomial Monomial::variable(std::size_t n, std::size_t k)
{
    const std::size_t vars[] = {k};
    return from_variables(n, vars);
}

unsigned Monomial::degree() const noexcept
{
    return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_squarefree() const noexcept
{
    for (Exponent e : exps_)
        if (e > 1)
            return false;
    return true;
}

std::vector<std::size_t> Monomial::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] != 0)
            out.push_back(k);
    return out;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (other.size() != size())
        throw std::invalid_argument("monomial length mismatch");
    std::vector<Exponent> exps(exps_);
    for (std::size_t k = 0; k < exps.size(); ++k) {
        const unsigned e = unsigned(exps[k]) + other.exps_[k];
        if (e > 255)
            throw std::overflow_error("monomial exponent overflow");
        exps[k] = Exponent(e);
    }
    return Monomial(std::move(exps));
}

std::string Monomial::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < exps_.size(); ++k) {
        if (exps_[k] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x' + std::to_string(k + 1);
        if (exps_[k] > 1)
            s += '^' + std::to_string(exps_[k]);
    }
    return s.empty() ? "1" : s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    // FNV-1a over the exponent bytes.
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

std::strong_ordering revlex_compare(const Monomial& u, const Monomial& v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("revlex_compare: monomial length mismatch");
    for (std::size_t k = u.size(); k-- > 0;) {
        if (u[k] != v[k])
            return u[k] < v[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::uint64_t binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r = r * (n - k + j) / j;
        if (r > UINT64_MAX)
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return std::uint64_t(r);
}

std::vector<Monomial> enumerate_squarefree(std::size_t n, unsigned t)
{
    std::vector<Monomial> out;
    if (t > n)
        return out;
    const std::uint64_t count = binomial(unsigned(n), t);
    out.reserve(count);
    // Colex successor on the ascending index tuple reproduces the revlex listing.
    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::uint64_t c = 0; c < count; ++c) {
        out.push_back(Monomial::from_variables(n, idx));
        std::size_t j = 0;
        while (j + 1 < t && idx[j] + 1 == idx[j + 1]) {
            idx[j] = j;
            ++j;
        }
        if (t > 0)
            ++idx[j];
    }
    return out;
}

BasisIndex squarefree_rank(const Monomial& m)
{
    if (!m.is_squarefree())
        throw std::invalid_argument("squarefree_rank: monomial is not square-free");
    BasisIndex bi;
    unsigned k = 0;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0)
            continue;
        ++k;
        bi.position += binomial(unsigned(v), k);
    }
    bi.degree = k;
    return bi;
}

Monomial squarefree_unrank(std::size_t n, unsigned t, std::size_t position)
{
    if (position >= binomial(unsigned(n), t))
        throw std::out_of_range("squarefree_unrank: position out of range");
    std::vector<Exponent> exps(n, 0);
    std::size_t rest = position;
    std::size_t top = n;
    for (unsigned k = t; k >= 1; --k) {
        // Largest c < top with C(c, k) <= rest.
        std::size_t c = top - 1;
        while (binomial(unsigned(c), k) > rest)
            --c;
        exps[c] = 1;
        rest -= binomial(unsigned(c), k);
        top = c;
    }
    return Monomial(std::move(exps));
}

}  // namespace lefschetz
