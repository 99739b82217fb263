#include "lefschetz/quotient_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lefschetz/modular.hpp"

namespace lefschetz {

AlgebraSpec::AlgebraSpec(std::vector<unsigned> exponents, std::uint64_t characteristic)
    : exponents_(std::move(exponents)), characteristic_(characteristic)
{
    if (exponents_.empty())
        throw std::invalid_argument("algebra needs at least one variable");
    for (unsigned d : exponents_)
        if (d < 1 || d > 255)
            throw std::invalid_argument("ideal exponent out of range [1, 255]: " + std::to_string(d));
    if (characteristic_ != 0 && (characteristic_ > kMaxPrime || !is_prime(characteristic_)))
        throw std::invalid_argument("characteristic must be 0 or a prime: " + std::to_string(characteristic_));
}

AlgebraSpec AlgebraSpec::quadratic(std::size_t n, std::uint64_t characteristic)
{
    return AlgebraSpec(std::vector<unsigned>(n, 2), characteristic);
}

unsigned AlgebraSpec::socle_degree() const noexcept
{
    return std::accumulate(exponents_.begin(), exponents_.end(), 0u) - unsigned(exponents_.size());
}

bool AlgebraSpec::is_quadratic() const noexcept
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned d) { return d == 2; });
}

AlgebraSpec AlgebraSpec::with_characteristic(std::uint64_t characteristic) const
{
    return AlgebraSpec(exponents_, characteristic);
}

AlgebraSpec AlgebraSpec::restricted(std::size_t vars) const
{
    if (vars == 0 || vars > n())
        throw std::invalid_argument("restricted: variable count out of range");
    return AlgebraSpec(std::vector<unsigned>(exponents_.begin(), exponents_.begin() + vars), characteristic_);
}

bool AlgebraSpec::survives(const Monomial& m) const
{
    if (m.size() != n())
        throw std::invalid_argument("monomial has wrong number of variables");
    for (std::size_t k = 0; k < n(); ++k)
        if (m[k] >= exponents_[k])
            return false;
    return true;
}

std::optional<Monomial> reduce(const AlgebraSpec& spec, const Monomial& m)
{
    if (spec.survives(m))
        return m;
    return std::nullopt;
}

namespace {

void standard_monomials(const AlgebraSpec& spec, std::size_t k, unsigned remaining,
                        std::vector<Exponent>& cur, std::vector<Monomial>& out)
{
    if (k == spec.n()) {
        if (remaining == 0)
            out.emplace_back(cur);
        return;
    }
    const unsigned top = std::min(remaining, spec.bound(k) - 1);
    for (unsigned e = 0; e <= top; ++e) {
        cur[k] = Exponent(e);
        standard_monomials(spec, k + 1, remaining - e, cur, out);
    }
    cur[k] = 0;
}

}  // namespace

std::vector<Monomial> graded_basis(const AlgebraSpec& spec, unsigned t)
{
    if (t > spec.socle_degree())
        return {};
    if (spec.is_quadratic())
        return enumerate_squarefree(spec.n(), t);
    std::vector<Monomial> out;
    std::vector<Exponent> cur(spec.n(), 0);
    standard_monomials(spec, 0, t, cur, out);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return revlex_compare(a, b) > 0; });
    return out;
}

GradedBasis::GradedBasis(const AlgebraSpec& spec, unsigned degree)
    : degree_(degree), squarefree_(spec.is_quadratic()), monomials_(graded_basis(spec, degree))
{
    if (!squarefree_)
        for (std::size_t k = 0; k < monomials_.size(); ++k)
            index_.emplace(monomials_[k], k);
}

std::optional<std::size_t> GradedBasis::position(const Monomial& m) const
{
    if (m.degree() != degree_ || monomials_.empty())
        return std::nullopt;
    if (squarefree_) {
        if (!m.is_squarefree() || m.size() != monomials_.front().size())
            return std::nullopt;
        return squarefree_rank(m).position;
    }
    const auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool HilbertVector::is_symmetric() const noexcept
{
    return std::equal(values_.begin(), values_.end(), values_.rbegin());
}

bool HilbertVector::is_unimodal() const noexcept
{
    std::size_t k = 1;
    while (k < values_.size() && values_[k - 1] <= values_[k])
        ++k;
    while (k < values_.size() && values_[k - 1] >= values_[k])
        ++k;
    return k >= values_.size();
}

HilbertVector hilbert_vector(const AlgebraSpec& spec)
{
    std::vector<std::uint64_t> h{1};
    for (unsigned d : spec.exponents()) {
        std::vector<std::uint64_t> next(h.size() + d - 1, 0);
        for (std::size_t j = 0; j < h.size(); ++j)
            for (unsigned e = 0; e < d; ++e)
                next[j + e] += h[j];
        h = std::move(next);
    }
    return HilbertVector(std::move(h));
}

AlgebraElement AlgebraElement::one(const AlgebraSpec& spec)
{
    return monomial(spec, Monomial(spec.n()));
}

AlgebraElement AlgebraElement::monomial(const AlgebraSpec& spec, const Monomial& m, const mpz_class& coeff)
{
    AlgebraElement e(spec);
    e.add_term(m, coeff);
    return e;
}

AlgebraElement AlgebraElement::linear(const AlgebraSpec& spec, const std::vector<std::int64_t>& coefficients)
{
    if (coefficients.size() != spec.n())
        throw std::invalid_argument("linear form length does not match variable count");
    AlgebraElement e(spec);
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        e.add_term(Monomial::variable(spec.n(), k), mpz_class(static_cast<long>(coefficients[k])));
    return e;
}

mpz_class AlgebraElement::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class AlgebraElement::normalize(const mpz_class& c) const
{
    if (spec_.characteristic() == 0)
        return c;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), spec_.characteristic());
    return r;
}

void AlgebraElement::add_term(const Monomial& m, const mpz_class& c)
{
    if (!spec_.survives(m))
        return;
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second = normalize(it->second + c);
    if (it->second == 0)
        terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const
{
    if (!(spec_ == other.spec_))
        throw std::invalid_argument("adding elements of different algebras");
    AlgebraElement out = *this;
    for (const auto& [m, c] : other.terms_)
        out.add_term(m, c);
    return out;
}

AlgebraElement AlgebraElement::scaled(const mpz_class& s) const
{
    AlgebraElement out(spec_);
    for (const auto& [m, c] : terms_)
        out.add_term(m, c * s);
    return out;
}

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g)
{
    if (!(f.spec() == g.spec()))
        throw std::invalid_argument("multiplying elements of different algebras");
    AlgebraElement out(f.spec());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms()) {
            const Monomial m = mf * mg;
            if (f.spec().survives(m))
                out.add_term(m, cf * cg);
        }
    return out;
}

AlgebraElement power(const AlgebraElement& f, unsigned e)
{
    AlgebraElement out = AlgebraElement::one(f.spec());
    for (unsigned k = 0; k < e; ++k)
        out = multiply(out, f);
    return out;
}

}  // namespace lefschetz
