#include "lefschetz/block_recursion.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace lefschetz {

namespace {

// build_matrix, but a target degree beyond the socle yields the empty
// matrix with the conforming column count instead of an error.
IntMatrix matrix_or_empty(const AlgebraSpec& spec, const LinearForm& form, unsigned i, unsigned t)
{
    if (i + t > spec.socle_degree())
        return IntMatrix(0, graded_basis(spec, i).size());
    return build_matrix(spec, form, i, t).matrix;
}

}  // namespace

IntMatrix BlockDecomposition::assemble() const
{
    return block_assemble(top_left, top_right, bottom_left(), bottom_right);
}

BlockDecomposition decompose(const AlgebraSpec& spec, const LinearForm& form, unsigned i, unsigned t)
{
    if (!spec.is_quadratic())
        throw std::invalid_argument("decompose: algebra is not quadratic");
    if (form.size() != spec.n())
        throw std::invalid_argument("decompose: form length does not match variable count");
    const unsigned n = unsigned(spec.n());
    if (n < 2 || i < 1 || i > n - 1 || t < 1 || t > n - i)
        throw std::invalid_argument("decompose: need 1 <= i <= n-1 and 1 <= t <= n-i");

    const AlgebraSpec bar = spec.restricted(n - 1);
    const LinearForm bar_form = form.prefix(n - 1);
    BlockDecomposition d{bar,
                         matrix_or_empty(bar, bar_form, i, t),
                         IntMatrix(binomial(n - 1, i + t), binomial(n - 1, i - 1)),
                         matrix_or_empty(bar, bar_form, i, t - 1),
                         mpz_class(static_cast<long>(form[n - 1])) * t,
                         matrix_or_empty(bar, bar_form, i - 1, t)};
    return d;
}

namespace {

class MiddleRankRecursion {
public:
    MiddleRankRecursion(std::uint64_t characteristic, const LinearForm& form, const RecursionOptions& options)
        : characteristic_(characteristic), form_(form), options_(options) {}

    std::size_t rank(unsigned vars, unsigned i)
    {
        if (options_.memoize) {
            const auto it = memo_.find({vars, i});
            if (it != memo_.end())
                return it->second;
        }
        const std::size_t r = compute(vars, i);
        if (options_.memoize)
            memo_[{vars, i}] = r;
        return r;
    }

    std::vector<std::string> notes;
    std::size_t peak_bits = 0;

private:
    bool is_unit(const mpz_class& v) const
    {
        if (characteristic_ == 0)
            return v != 0;
        return mpz_divisible_ui_p(v.get_mpz_t(), characteristic_) == 0;
    }

    std::string where(unsigned vars, unsigned i) const
    {
        return "n=" + std::to_string(vars) + " i=" + std::to_string(i);
    }

    std::size_t dense(unsigned vars, unsigned i, const std::string& reason)
    {
        notes.push_back(where(vars, i) + ": " + reason + "; dense elimination used");
        const MultiplicationMatrix m = build_matrix(AlgebraSpec::quadratic(vars, characteristic_),
                                                    form_.prefix(vars), i, vars - 2 * i);
        RankResult r = field_rank(m.matrix, characteristic_);
        peak_bits = std::max({peak_bits, r.peak_bits, max_entry_bits(m.matrix)});
        return r.rank;
    }

    std::size_t compute(unsigned vars, unsigned i)
    {
        const unsigned t = vars - 2 * i;
        if (i == 0) {
            // A_0 -> A_vars is the 1x1 matrix (vars! * c_1 * ... * c_vars).
            mpz_class entry;
            mpz_fac_ui(entry.get_mpz_t(), vars);
            for (unsigned k = 0; k < vars; ++k)
                entry *= mpz_class(static_cast<long>(form_[k]));
            if (entry != 0)
                peak_bits = std::max<std::size_t>(peak_bits, mpz_sizeinbase(entry.get_mpz_t(), 2));
            return is_unit(entry) ? 1 : 0;
        }
        if (characteristic_ != 0 && characteristic_ <= vars)
            return dense(vars, i, "characteristic " + std::to_string(characteristic_) + " <= n");
        const mpz_class scalar = mpz_class(static_cast<long>(form_[vars - 1])) * t;
        if (!is_unit(scalar))
            return dense(vars, i, "block scalar c_n*t vanishes");

        const std::size_t inner_dim = binomial(vars - 1, i);
        if (t >= 2) {
            // Mbar_i^{t-1} is the middle map of the smaller algebra at degree i.
            if (rank(vars - 1, i) != inner_dim)
                return dense(vars, i, "inner block singular");
            if (options_.verify_inner_blocks) {
                const AlgebraSpec bar = AlgebraSpec::quadratic(vars - 1, characteristic_);
                const MultiplicationMatrix inner = build_matrix(bar, form_.prefix(vars - 1), i, t - 1);
                if (field_rank(inner.matrix, characteristic_).rank != inner_dim)
                    return dense(vars, i, "inner block failed elimination check");
            }
        }
        // Mbar_{n-i-1} Mbar_i^{t-1} Mbar_{i-1} is the middle map of the
        // smaller algebra at degree i-1.
        return inner_dim + rank(vars - 1, i - 1);
    }

    std::uint64_t characteristic_;
    const LinearForm& form_;
    RecursionOptions options_;
    std::map<std::pair<unsigned, unsigned>, std::size_t> memo_;
};

template <class M>
void check_identity_shapes(const M& a, const M& b, const M& p)
{
    if (p.rows() != p.cols())
        throw std::invalid_argument("rank identity: P must be square");
    if (a.cols() != p.rows() || b.rows() != p.cols())
        throw std::invalid_argument("rank identity: nonconforming A, B, P");
}

}  // namespace

RankResult recursive_middle_rank(const AlgebraSpec& spec, const LinearForm& form, unsigned i,
                                 const RecursionOptions& options)
{
    if (!spec.is_quadratic())
        throw std::invalid_argument("recursive_middle_rank: algebra is not quadratic");
    if (form.size() != spec.n())
        throw std::invalid_argument("recursive_middle_rank: form length does not match variable count");
    if (2 * i >= spec.n())
        throw std::invalid_argument("recursive_middle_rank: need 2i < n");
    MiddleRankRecursion rec(spec.characteristic(), form, options);
    RankResult out;
    out.rank = rec.rank(unsigned(spec.n()), i);
    out.method = RankMethod::BlockRecursive;
    out.notes = std::move(rec.notes);
    out.peak_bits = rec.peak_bits;
    return out;
}

IntMatrix assemble_rank_identity(const IntMatrix& a, const IntMatrix& b, const IntMatrix& p)
{
    check_identity_shapes(a, b, p);
    return block_assemble(mat_mul(a, p), IntMatrix(a.rows(), b.cols()), p, mat_mul(p, b));
}

ModMatrix assemble_rank_identity(const ModMatrix& a, const ModMatrix& b, const ModMatrix& p)
{
    check_identity_shapes(a, b, p);
    return block_assemble(mat_mul(a, p), ModMatrix(a.field(), a.rows(), b.cols()), p, mat_mul(p, b));
}

RankResult rank_identity_reduce(const IntMatrix& a, const IntMatrix& b, const IntMatrix& p, bool cross_check)
{
    check_identity_shapes(a, b, p);
    if (determinant(p) == 0)
        throw std::invalid_argument("rank identity: P is singular");
    RankResult r = rank_fraction_free(mat_mul(mat_mul(a, p), b));
    r.rank += p.rows();
    r.pivots.clear();
    if (cross_check && rank_fraction_free(assemble_rank_identity(a, b, p)).rank != r.rank)
        throw std::logic_error("rank identity violated");
    return r;
}

RankResult rank_identity_reduce(const ModMatrix& a, const ModMatrix& b, const ModMatrix& p, bool cross_check)
{
    check_identity_shapes(a, b, p);
    if (determinant(p) == 0)
        throw std::invalid_argument("rank identity: P is singular");
    RankResult r = rank_mod_p(mat_mul(mat_mul(a, p), b));
    r.rank += p.rows();
    r.pivots.clear();
    if (cross_check && rank_mod_p(assemble_rank_identity(a, b, p)).rank != r.rank)
        throw std::logic_error("rank identity violated");
    return r;
}

}  // namespace lefschetz
