#pragma once

// Exponent-vector monomials and the ordered square-free bases.
//
// Bases are listed in decreasing reverse-lexicographic order with
// x1 > x2 > ... > xn, so for n = 4 the degree-2 basis reads
//   x1x2, x1x3, x2x3, x1x4, x2x4, x3x4.
// Square-free monomials in this order are indexed by the combinatorial
// number system (colex rank of the variable subset), which makes every
// basis O(t)-indexable without a lookup table.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

using Exponent = std::uint8_t;

class Monomial {
public:
    Monomial() = default;

    /// The constant monomial 1 in n variables.
    explicit Monomial(std::size_t n) : exps_(n, 0) {}

    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    /// Square-free monomial from 0-based variable indices.
    static Monomial from_variables(std::size_t n, std::span<const std::size_t> vars);

    /// The single variable x_{k+1} (0-based k).
    static Monomial variable(std::size_t n, std::size_t k);

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept;
    Exponent operator[](std::size_t k) const { return exps_[k]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    bool is_squarefree() const noexcept;

    /// 0-based indices of variables with nonzero exponent, ascending.
    std::vector<std::size_t> support() const;

    /// Exponent-wise sum; both operands must have the same length.
    Monomial operator*(const Monomial& other) const;

    /// Renders "x1*x3^2", or "1" for the constant monomial.
    std::string to_string() const;

    // Plain lexicographic comparison of exponent vectors; used only as a
    // container key order. The algebraic order is revlex_compare().
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

struct BasisIndex {
    unsigned degree = 0;
    std::size_t position = 0;
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

/// Reverse-lexicographic comparison with x1 > x2 > ... > xn: the last
/// variable at which u and v differ decides, the smaller exponent there
/// being the greater monomial. Throws std::invalid_argument on length
/// mismatch.
std::strong_ordering revlex_compare(const Monomial& u, const Monomial& v);

/// C(n, k) as a 64-bit integer; 0 when k > n. Throws std::overflow_error
/// if the value does not fit.
std::uint64_t binomial(unsigned n, unsigned k);

/// All square-free monomials of degree t in n variables, in decreasing
/// revlex order. Empty when t > n.
std::vector<Monomial> enumerate_squarefree(std::size_t n, unsigned t);

/// Position of a square-free monomial within enumerate_squarefree(n, deg).
BasisIndex squarefree_rank(const Monomial& m);

/// Inverse of squarefree_rank. Throws std::out_of_range when
/// position >= C(n, t).
Monomial squarefree_unrank(std::size_t n, unsigned t, std::size_t position);

}  // namespace lefschetz
