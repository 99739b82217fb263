#pragma once

// Realizes A = k[y1..yn]/(y1^(a1+1), ..., yn^(an+1)) inside the quadratic
// algebra B = k[x1..xm]/(x1^2, ..., xm^2), m = a1 + ... + an, through
//
//   phi(y_j) = x_{alpha_{j-1}+1} + ... + x_{alpha_j},   alpha_j = a1 + ... + aj.
//
// Injectivity of the induced map A -> B is certified degree by degree by
// the rank of the matrix of phi on standard monomials, and Lefschetz
// conclusions are transferred through x (sum y_j) on A versus x (sum x_k)
// on B.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/quotient_algebra.hpp"

namespace lefschetz {

class EmbeddingSpec {
public:
    /// block_sizes are a_1, ..., a_n, each >= 1. Throws
    /// std::invalid_argument otherwise or on a bad characteristic.
    explicit EmbeddingSpec(std::vector<unsigned> block_sizes, std::uint64_t characteristic = 0);

    const std::vector<unsigned>& block_sizes() const noexcept { return sizes_; }
    /// alpha_0 = 0 < alpha_1 < ... < alpha_n = m.
    const std::vector<unsigned>& prefix_sums() const noexcept { return alpha_; }
    unsigned m() const noexcept { return alpha_.back(); }
    std::uint64_t characteristic() const noexcept { return source_.characteristic(); }

    /// Killed powers a_j + 1.
    const AlgebraSpec& source() const noexcept { return source_; }
    /// Quadratic algebra in m variables.
    const AlgebraSpec& target() const noexcept { return target_; }

private:
    std::vector<unsigned> sizes_;
    std::vector<unsigned> alpha_;
    AlgebraSpec source_;
    AlgebraSpec target_;
};

/// A polynomial in y1..yn, not reduced modulo any ideal.
using Polynomial = std::map<Monomial, mpz_class>;

/// Evaluates phi on polynomials of the source ring. Powers of each block
/// sum are precomputed; the object is immutable after construction.
class Phi {
public:
    explicit Phi(EmbeddingSpec es);

    const EmbeddingSpec& spec() const noexcept { return es_; }

    AlgebraElement operator()(const Monomial& y) const;
    AlgebraElement operator()(const Polynomial& f) const;
    /// phi applied to a representative of an element of A.
    AlgebraElement operator()(const AlgebraElement& f) const;

    /// Matrix of phi : A_j -> B_j; rows index graded_basis(target, j),
    /// columns graded_basis(source, j).
    IntMatrix matrix(unsigned j) const;

private:
    EmbeddingSpec es_;
    // powers_[j][e] = phi(y_j)^e for e <= a_j; higher powers vanish in B.
    std::vector<std::vector<AlgebraElement>> powers_;
};

struct SocleImageRecord {
    mpz_class scalar;          ///< a_1! ... a_n! as an integer
    mpz_class scalar_in_field; ///< reduced mod p in characteristic p
    bool nonzero = false;      ///< scalar is a unit of the field
    bool image_matches = false;///< phi(y^a) == scalar * x1...xm in B
};

/// Computes phi(y1^a1 ... yn^an) and compares it with
/// (a_1! ... a_n!) x1 x2 ... xm.
SocleImageRecord verify_socle_image(const EmbeddingSpec& es);

struct DegreeRecord {
    unsigned j = 0;
    std::size_t dim_source = 0;
    std::size_t dim_target = 0;
    std::size_t rank = 0;
    bool ok = false;
};

/// Rank of phi on each degree j <= up_to_degree (clamped to m).
std::vector<DegreeRecord> verify_kernel_dims(const EmbeddingSpec& es, unsigned up_to_degree);

struct EmbeddedMapRecord {
    unsigned i = 0;
    std::size_t dim_source = 0;
    std::size_t rank = 0;
    bool injective = false;
};

struct TransferReport {
    LefschetzReport direct;
    std::vector<EmbeddedMapRecord> via_embedding;
    bool slp_direct = false;
    bool slp_via_embedding = false;
    bool agree() const noexcept { return slp_direct == slp_via_embedding; }
};

/// Decides the SLP of the source algebra with l = y1 + ... + yn twice:
/// directly (full mode), and through B by checking that
/// (x (x1+...+xm)^(m-2i) on B_i) * (phi on A_i) has rank dim A_i for
/// every 0 <= i < m/2.
TransferReport transfer_slp(const EmbeddingSpec& es, unsigned jobs = 1);

/// Everything the embed-verify command reports.
struct EmbeddingVerification {
    EmbeddingSpec spec;
    SocleImageRecord socle;
    std::vector<DegreeRecord> degrees;
    TransferReport transfer;
    bool ok() const noexcept;
};

EmbeddingVerification verify_embedding(const EmbeddingSpec& es, unsigned jobs = 1);

}  // namespace lefschetz
