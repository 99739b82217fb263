#pragma once

// The artinian monomial complete intersection
//   A = k[x1, ..., xn] / (x1^d1, ..., xn^dn)
// over k = Q (characteristic 0) or k = F_p.
//
// Exponent convention: d_i is the killed power, so x_i^(d_i - 1) is the
// largest surviving power and the socle degree is sum(d_i) - n. An
// algebra written with killed powers a_i + 1 corresponds to d_i = a_i + 1.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "lefschetz/monomials.hpp"

namespace lefschetz {

class AlgebraSpec {
public:
    /// Throws std::invalid_argument unless n >= 1, every d_i is in
    /// [1, 255], and the characteristic is 0 or a supported prime.
    explicit AlgebraSpec(std::vector<unsigned> exponents, std::uint64_t characteristic = 0);

    /// k[x1..xn]/(x1^2, ..., xn^2).
    static AlgebraSpec quadratic(std::size_t n, std::uint64_t characteristic = 0);

    std::size_t n() const noexcept { return exponents_.size(); }
    const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
    unsigned bound(std::size_t k) const { return exponents_[k]; }
    std::uint64_t characteristic() const noexcept { return characteristic_; }
    unsigned socle_degree() const noexcept;
    bool is_quadratic() const noexcept;

    AlgebraSpec with_characteristic(std::uint64_t characteristic) const;

    /// The algebra on the first `vars` variables (x_{vars+1}, ... set to 0).
    AlgebraSpec restricted(std::size_t vars) const;

    /// True if every exponent is below its bound.
    bool survives(const Monomial& m) const;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
    std::vector<unsigned> exponents_;
    std::uint64_t characteristic_ = 0;
};

/// Reduction modulo a monomial ideal: m itself, or nullopt for zero.
std::optional<Monomial> reduce(const AlgebraSpec& spec, const Monomial& m);

/// Standard monomials of degree t, decreasing revlex. Empty when t is
/// outside [0, socle degree].
std::vector<Monomial> graded_basis(const AlgebraSpec& spec, unsigned t);

/// graded_basis plus a position lookup.
class GradedBasis {
public:
    GradedBasis(const AlgebraSpec& spec, unsigned degree);

    unsigned degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    const Monomial& operator[](std::size_t k) const { return monomials_[k]; }
    std::optional<std::size_t> position(const Monomial& m) const;

private:
    unsigned degree_;
    bool squarefree_;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

class HilbertVector {
public:
    explicit HilbertVector(std::vector<std::uint64_t> values) : values_(std::move(values)) {}

    const std::vector<std::uint64_t>& values() const noexcept { return values_; }
    std::uint64_t operator[](std::size_t j) const { return j < values_.size() ? values_[j] : 0; }
    unsigned socle_degree() const noexcept { return unsigned(values_.size()) - 1; }
    bool is_symmetric() const noexcept;
    bool is_unimodal() const noexcept;

    friend bool operator==(const HilbertVector&, const HilbertVector&) = default;

private:
    std::vector<std::uint64_t> values_;
};

/// Coefficients of prod_i (1 + t + ... + t^(d_i - 1)).
HilbertVector hilbert_vector(const AlgebraSpec& spec);

/// An element of A. Coefficients are integers in characteristic 0 and
/// residues in [0, p) in characteristic p; zero coefficients and
/// vanishing monomials are never stored.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraSpec spec) : spec_(std::move(spec)) {}

    static AlgebraElement one(const AlgebraSpec& spec);
    static AlgebraElement monomial(const AlgebraSpec& spec, const Monomial& m, const mpz_class& coeff = 1);
    /// sum_k coefficients[k] * x_{k+1}.
    static AlgebraElement linear(const AlgebraSpec& spec, const std::vector<std::int64_t>& coefficients);

    const AlgebraSpec& spec() const noexcept { return spec_; }
    const std::map<Monomial, mpz_class>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of m (0 if absent).
    mpz_class coefficient(const Monomial& m) const;

    /// Adds c * m, reducing both the monomial and the coefficient.
    void add_term(const Monomial& m, const mpz_class& c);

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement scaled(const mpz_class& s) const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    mpz_class normalize(const mpz_class& c) const;

    AlgebraSpec spec_;
    std::map<Monomial, mpz_class> terms_;
};

/// Product in A. Throws std::invalid_argument if the specs differ.
AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);

/// f^e by repeated multiplication.
AlgebraElement power(const AlgebraElement& f, unsigned e);

}  // namespace lefschetz
