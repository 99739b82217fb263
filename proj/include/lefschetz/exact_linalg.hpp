#pragma once

// Dense exact matrices over the integers, the rationals and F_p, with
// rank, determinant and elimination kernels.
//
// Pivoting is always "first nonzero entry in column order": exact
// arithmetic needs no magnitude-based stabilization, and a fixed pivot
// rule keeps certificates reproducible.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lefschetz/modular.hpp"

namespace lefschetz {

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
    {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T>& entries() const noexcept { return data_; }
    std::vector<T>& entries() noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

/// Matrix over F_p; residues always lie in [0, p).
class ModMatrix {
public:
    ModMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), residues_(rows, cols) {}
    ModMatrix(PrimeField field, Matrix<std::uint64_t> residues);

    /// Reduces every integer entry mod p.
    static ModMatrix reduce(const IntMatrix& m, PrimeField field);

    const PrimeField& field() const noexcept { return field_; }
    std::uint64_t prime() const noexcept { return field_.prime(); }
    std::size_t rows() const noexcept { return residues_.rows(); }
    std::size_t cols() const noexcept { return residues_.cols(); }

    std::uint64_t operator()(std::size_t r, std::size_t c) const { return residues_(r, c); }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { residues_(r, c) = v % field_.prime(); }

    const Matrix<std::uint64_t>& residues() const noexcept { return residues_; }

    friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

private:
    PrimeField field_;
    Matrix<std::uint64_t> residues_;
};

enum class Domain { Integer, Rational, PrimeField };

using ExactMatrix = std::variant<IntMatrix, RatMatrix, ModMatrix>;

Domain domain_of(const ExactMatrix& m);

enum class RankMethod { FractionFree, Modular, BlockRecursive };

std::string to_string(RankMethod m);

struct Pivot {
    std::size_t row;
    std::size_t col;
    friend bool operator==(const Pivot&, const Pivot&) = default;
};

struct RankResult {
    std::size_t rank = 0;
    RankMethod method = RankMethod::FractionFree;
    /// Pivot positions in the original matrix (row indices before swaps).
    std::vector<Pivot> pivots;
    /// Largest entry bit size seen during elimination (0 when not tracked).
    std::size_t peak_bits = 0;
    /// Fallbacks and guard firings, in the order they happened.
    std::vector<std::string> notes;
};

RankResult rank_fraction_free(const IntMatrix& m);
RankResult rank_rational(const RatMatrix& m);
/// Throws std::invalid_argument if p is not a supported prime.
RankResult rank_mod_p(const IntMatrix& m, std::uint64_t p);
RankResult rank_mod_p(const ModMatrix& m);

/// Throws std::invalid_argument for non-square input.
mpz_class determinant(const IntMatrix& m);
mpq_class determinant(const RatMatrix& m);
std::uint64_t determinant(const ModMatrix& m);

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    Matrix<T> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);

template <class T>
Matrix<T> scale(const Matrix<T>& m, const T& s)
{
    Matrix<T> out = m;
    for (auto& e : out.entries())
        e *= s;
    return out;
}

ModMatrix scale(const ModMatrix& m, std::uint64_t s);

/// [[tl, tr], [bl, br]]. Row counts must agree across each block row and
/// column counts down each block column; empty blocks must still carry
/// the conforming dimension.
template <class T>
Matrix<T> block_assemble(const Matrix<T>& tl, const Matrix<T>& tr, const Matrix<T>& bl, const Matrix<T>& br)
{
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() || tr.cols() != br.cols())
        throw std::invalid_argument("block_assemble: nonconforming blocks");
    Matrix<T> out(tl.rows() + bl.rows(), tl.cols() + tr.cols());
    auto put = [&out](const Matrix<T>& b, std::size_t r0, std::size_t c0) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r0 + r, c0 + c) = b(r, c);
    };
    put(tl, 0, 0);
    put(tr, 0, tl.cols());
    put(bl, tl.rows(), 0);
    put(br, tl.rows(), tl.cols());
    return out;
}

ModMatrix block_assemble(const ModMatrix& tl, const ModMatrix& tr, const ModMatrix& bl, const ModMatrix& br);

/// Largest bit size over the entries (0 for an all-zero matrix).
std::size_t max_entry_bits(const IntMatrix& m);

// Import and export. CSV is one row per line with comma-separated decimal
// integers; JSON is {"rows":r,"cols":c,"entries":[[...],...]} where each
// entry is a number when it fits in 64 bits and a decimal string otherwise.
std::string to_csv(const IntMatrix& m);
IntMatrix from_csv(const std::string& text);
std::string to_json(const IntMatrix& m);
IntMatrix from_json(const std::string& text);
IntMatrix lift(const ModMatrix& m);

}  // namespace lefschetz
