#pragma once

// Multiplication matrices of powers of a linear form and the strong
// Lefschetz decision procedure.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/quotient_algebra.hpp"

namespace lefschetz {

/// l = c_1 x_1 + ... + c_n x_n with integer coefficients.
class LinearForm {
public:
    explicit LinearForm(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {}

    /// x_1 + ... + x_n.
    static LinearForm uniform(std::size_t n) { return LinearForm(std::vector<std::int64_t>(n, 1)); }

    std::size_t size() const noexcept { return coeffs_.size(); }
    std::int64_t operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
    bool all_nonzero() const noexcept;
    /// The form on the first `vars` variables.
    LinearForm prefix(std::size_t vars) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// Matrix of x l^t : A_i -> A_{i+t}. Rows follow graded_basis(spec, i+t),
/// columns graded_basis(spec, i). Entries are the exact integer
/// coefficients; in characteristic p they are reduced only by
/// in_field().
struct MultiplicationMatrix {
    AlgebraSpec spec;
    LinearForm form;
    unsigned source_degree;
    unsigned power;
    IntMatrix matrix;

    /// The matrix over the coefficient field of `spec` (the integer
    /// matrix itself in characteristic 0).
    ExactMatrix in_field() const;
};

/// Entry (r, c) is the coefficient of target monomial v_r in l^t * u_c:
/// t! / prod(delta_k!) * prod(c_k^delta_k) where delta = v_r - u_c, or 0
/// when v_r is not a multiple of u_c. Throws std::invalid_argument if
/// i + t exceeds the socle degree or the form length differs from n.
MultiplicationMatrix build_matrix(const AlgebraSpec& spec, const LinearForm& form, unsigned i, unsigned t);

struct MapCheck {
    unsigned i = 0;
    unsigned t = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t expected = 0;  ///< min(rows, cols)
    RankResult rank;
    bool maximal = false;
    double ms = 0.0;
};

/// Exact rank of a (characteristic 0) integer matrix: one modular run
/// with the certifying prime, falling back to fraction-free elimination
/// only if that run is rank deficient.
RankResult certified_rank(const IntMatrix& m);

/// Rank of m over the field of characteristic `characteristic`.
RankResult field_rank(const IntMatrix& m, std::uint64_t characteristic);

/// Maximal-rank verdict for one multiplication matrix. In characteristic
/// 0 a full-rank result mod the certifying prime is accepted as is;
/// deficiency is confirmed by exact elimination.
MapCheck max_rank_check(const MultiplicationMatrix& m);

enum class SlpMode { Full, Middle };
enum class RankStrategy { Dense, Block, Auto };

std::string to_string(SlpMode m);
std::string to_string(RankStrategy s);

struct SlpOptions {
    SlpMode mode = SlpMode::Full;
    RankStrategy strategy = RankStrategy::Dense;
    unsigned jobs = 1;
};

struct LefschetzReport {
    AlgebraSpec spec;
    LinearForm form;
    SlpMode mode;
    RankStrategy strategy;
    std::vector<MapCheck> maps;
    bool slp = true;
    double total_ms = 0.0;

    std::vector<std::pair<unsigned, unsigned>> failing() const;
};

/// The (i, t) pairs examined in a given mode: every i + t <= m with
/// t >= 0 in full mode, (i, m - 2i) for 0 <= i < m/2 in middle mode.
std::vector<std::pair<unsigned, unsigned>> maps_for_mode(const AlgebraSpec& spec, SlpMode mode);

/// Checks every map of the mode and reports. The Block strategy applies
/// the block recursion to middle maps of quadratic algebras whose form
/// has no zero coefficient; all other maps use dense elimination. Auto
/// is Block where it applies and Dense otherwise.
LefschetzReport slp_check(const AlgebraSpec& spec, const LinearForm& form, const SlpOptions& options = {});

struct CharSearchEntry {
    std::uint64_t prime;
    bool slp;
    std::vector<std::pair<unsigned, unsigned>> failing;
};

/// SLP verdict over F_p for every prime p in [lo, hi], with the integer
/// form reduced mod p.
std::vector<CharSearchEntry> char_search(const AlgebraSpec& spec, const LinearForm& form,
                                         std::uint64_t lo, std::uint64_t hi, const SlpOptions& options = {});

/// Runs f(0), ..., f(count - 1) on up to `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f);

}  // namespace lefschetz
