#pragma once

// Structured rank computation for the quadratic algebra
// B_n = k[x1..xn]/(x1^2, ..., xn^2).
//
// Splitting each square-free basis into the monomials without x_n followed
// by the x_n-multiples turns the matrix of x l^t : A_i -> A_{i+t} into
//
//     [ Mbar_i^t             0           ]
//     [ c_n * t * Mbar_i^{t-1}   Mbar_{i-1}^t ]
//
// over the algebra on x1..x_{n-1}. For the middle map t = n - 2i the
// rank identity rank([[AP, 0], [P, PB]]) = dim P + rank(APB) reduces the
// rank to C(n-1, i) plus the rank of the middle map of the smaller algebra
// at degree i-1, provided Mbar_i^{n-2i-1} is nonsingular and c_n (n - 2i)
// is a unit.

#include <cstddef>
#include <cstdint>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/quotient_algebra.hpp"

namespace lefschetz {

struct BlockDecomposition {
    AlgebraSpec restricted;  ///< the algebra on x1..x_{n-1}
    IntMatrix top_left;      ///< Mbar_i^t
    IntMatrix top_right;     ///< zero block
    IntMatrix inner;         ///< Mbar_i^{t-1}
    mpz_class bottom_left_scalar;  ///< c_n * t
    IntMatrix bottom_right;  ///< Mbar_{i-1}^t

    IntMatrix bottom_left() const { return scale(inner, bottom_left_scalar); }
    IntMatrix assemble() const;
};

/// Throws std::invalid_argument unless spec is quadratic, 1 <= i <= n-1
/// and 1 <= t <= n-i.
BlockDecomposition decompose(const AlgebraSpec& spec, const LinearForm& form, unsigned i, unsigned t);

struct RecursionOptions {
    /// Build Mbar_i^{n-2i-1} at every level and confirm it is nonsingular
    /// by elimination, in addition to the recursive certificate.
    bool verify_inner_blocks = false;
    /// Cache ranks by (variables, degree) within one call.
    bool memoize = false;
};

/// Rank of the middle map x l^{n-2i} : A_i -> A_{n-i} of a quadratic
/// algebra, computed by the block recursion. Whenever a level's
/// hypotheses fail (characteristic p <= number of variables, a vanishing
/// scalar, a singular inner block) that level falls back to dense
/// elimination and a note is recorded. Throws std::invalid_argument
/// unless spec is quadratic and 2i < n.
RankResult recursive_middle_rank(const AlgebraSpec& spec, const LinearForm& form, unsigned i,
                                 const RecursionOptions& options = {});

/// [[A P, 0], [P, P B]] for A (m x n), P (n x n), B (n x p).
IntMatrix assemble_rank_identity(const IntMatrix& a, const IntMatrix& b, const IntMatrix& p);
ModMatrix assemble_rank_identity(const ModMatrix& a, const ModMatrix& b, const ModMatrix& p);

/// n + rank(A P B). With cross_check set, the assembled matrix is also
/// eliminated directly and std::logic_error is thrown on disagreement.
/// Throws std::invalid_argument if P is singular or shapes do not conform.
RankResult rank_identity_reduce(const IntMatrix& a, const IntMatrix& b, const IntMatrix& p, bool cross_check = false);
RankResult rank_identity_reduce(const ModMatrix& a, const ModMatrix& b, const ModMatrix& p, bool cross_check = false);

}  // namespace lefschetz
