#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library kernels they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, mpz_class>;

/// u > v in reverse-lexicographic order: reversed exponent vectors compared
/// lexicographically, smaller one wins.
inline bool revlex_greater(const Exps& u, const Exps& v)
{
    return std::lexicographical_compare(u.rbegin(), u.rend(), v.rbegin(), v.rend());
}

/// All degree-t subsets of n variables via bitmasks, sorted decreasing revlex.
inline std::vector<Exps> squarefree_sorted(int n, int t)
{
    std::vector<Exps> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != t)
            continue;
        Exps e(n, 0);
        for (int k = 0; k < n; ++k)
            e[k] = (mask >> k) & 1;
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), revlex_greater);
    return out;
}

/// Every exponent vector with e_k < d_k and total degree t, sorted decreasing revlex.
inline std::vector<Exps> box_monomials(const std::vector<int>& d, int t)
{
    std::vector<Exps> out;
    Exps e(d.size(), 0);
    for (;;) {
        if (std::accumulate(e.begin(), e.end(), 0) == t)
            out.push_back(e);
        std::size_t k = 0;
        while (k < d.size() && ++e[k] == d[k])
            e[k++] = 0;
        if (k == d.size())
            break;
    }
    std::sort(out.begin(), out.end(), revlex_greater);
    return out;
}

/// Coefficients of prod (1 + x + ... + x^(d-1)) by naive polynomial multiplication.
inline std::vector<std::uint64_t> hilbert_series(const std::vector<int>& d)
{
    std::vector<std::uint64_t> p{1};
    for (int di : d) {
        std::vector<std::uint64_t> q(p.size() + di - 1, 0);
        for (std::size_t a = 0; a < p.size(); ++a)
            for (int b = 0; b < di; ++b)
                q[a + b] += p[a];
        p = q;
    }
    return p;
}

inline Poly poly_mul(const Poly& f, const Poly& g)
{
    Poly out;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            Exps e(a.size());
            for (std::size_t k = 0; k < a.size(); ++k)
                e[k] = a[k] + b[k];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/// Drops monomials outside the box and reduces coefficients mod p (p > 0).
inline Poly reduce(const Poly& f, const std::vector<int>& d, std::uint64_t p = 0)
{
    Poly out;
    for (const auto& [e, c] : f) {
        bool ok = true;
        for (std::size_t k = 0; k < e.size(); ++k)
            ok = ok && e[k] < d[k];
        if (!ok)
            continue;
        mpz_class r = c;
        if (p)
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        if (r != 0)
            out[e] = r;
    }
    return out;
}

/// M_i^t built by expanding l^t as a polynomial and multiplying each source
/// monomial, rows/cols in decreasing revlex order.
inline std::vector<std::vector<mpz_class>> multiplication_matrix(const std::vector<int>& d,
                                                                 const std::vector<long>& form, int i, int t)
{
    const int n = int(d.size());
    Poly ell;
    for (int k = 0; k < n; ++k) {
        Exps e(n, 0);
        e[k] = 1;
        if (form[k] != 0)
            ell[e] = form[k];
    }
    Poly power{{Exps(n, 0), 1}};
    for (int s = 0; s < t; ++s)
        power = poly_mul(power, ell);
    const auto src = box_monomials(d, i);
    const auto dst = box_monomials(d, i + t);
    std::vector<std::vector<mpz_class>> m(dst.size(), std::vector<mpz_class>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Poly image = reduce(poly_mul(power, Poly{{src[c], 1}}), d);
        for (const auto& [e, coeff] : image) {
            const auto r = std::find(dst.begin(), dst.end(), e) - dst.begin();
            m[r][c] = coeff;
        }
    }
    return m;
}

/// Leibniz expansion; fine up to 7x7.
inline mpz_class leibniz_det(const std::vector<std::vector<mpz_class>>& a)
{
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    mpz_class det = 0;
    do {
        int inversions = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                inversions += perm[x] > perm[y];
        mpz_class term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n; ++r)
            term *= a[r][perm[r]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Rank over Q by textbook Gaussian elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> a)
{
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rational_rank(const std::vector<std::vector<mpz_class>>& a)
{
    std::vector<std::vector<mpq_class>> q;
    for (const auto& row : a)
        q.emplace_back(row.begin(), row.end());
    return rational_rank(q);
}

/// Rank over F_p (p small) by reduced row echelon form with 64-bit ints.
inline std::size_t mod_rank(const std::vector<std::vector<mpz_class>>& in, long p)
{
    std::vector<std::vector<long>> a;
    for (const auto& row : in) {
        std::vector<long> r;
        for (const auto& e : row) {
            mpz_class m;
            mpz_fdiv_r_ui(m.get_mpz_t(), e.get_mpz_t(), p);
            r.push_back(m.get_si());
        }
        a.push_back(r);
    }
    auto inv = [p](long x) {
        long r = 1, b = x, e = p - 2;
        while (e) {
            if (e & 1)
                r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[rank]);
        const long s = inv(a[rank][c]);
        for (auto& x : a[rank])
            x = x * s % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const long f = a[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
