#include "lefschetz/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

namespace {

std::vector<unsigned> killed_powers(const std::vector<unsigned>& sizes)
{
    std::vector<unsigned> d;
    d.reserve(sizes.size());
    for (unsigned a : sizes) {
        if (a < 1)
            throw std::invalid_argument("embedding block sizes must be >= 1");
        d.push_back(a + 1);
    }
    return d;
}

std::vector<unsigned> prefix(const std::vector<unsigned>& sizes)
{
    std::vector<unsigned> alpha{0};
    for (unsigned a : sizes)
        alpha.push_back(alpha.back() + a);
    return alpha;
}

}  // namespace

EmbeddingSpec::EmbeddingSpec(std::vector<unsigned> block_sizes, std::uint64_t characteristic)
    : sizes_(std::move(block_sizes)),
      alpha_(prefix(sizes_)),
      source_(killed_powers(sizes_), characteristic),
      target_(AlgebraSpec::quadratic(alpha_.back(), characteristic))
{
}

Phi::Phi(EmbeddingSpec es) : es_(std::move(es))
{
    const AlgebraSpec& b = es_.target();
    const auto& alpha = es_.prefix_sums();
    powers_.resize(es_.block_sizes().size());
    for (std::size_t j = 0; j < powers_.size(); ++j) {
        AlgebraElement block_sum(b);
        for (unsigned k = alpha[j]; k < alpha[j + 1]; ++k)
            block_sum.add_term(Monomial::variable(b.n(), k), 1);
        powers_[j].push_back(AlgebraElement::one(b));
        for (unsigned e = 1; e <= es_.block_sizes()[j]; ++e)
            powers_[j].push_back(multiply(powers_[j].back(), block_sum));
    }
}

AlgebraElement Phi::operator()(const Monomial& y) const
{
    if (y.size() != powers_.size())
        throw std::invalid_argument("phi: monomial has wrong number of variables");
    AlgebraElement out = AlgebraElement::one(es_.target());
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] >= powers_[j].size())
            return AlgebraElement(es_.target());
        if (y[j] > 0)
            out = multiply(out, powers_[j][y[j]]);
    }
    return out;
}

AlgebraElement Phi::operator()(const Polynomial& f) const
{
    AlgebraElement out(es_.target());
    for (const auto& [y, c] : f)
        out = out + (*this)(y).scaled(c);
    return out;
}

AlgebraElement Phi::operator()(const AlgebraElement& f) const
{
    if (!(f.spec() == es_.source()))
        throw std::invalid_argument("phi: element is not in the source algebra");
    return (*this)(Polynomial(f.terms().begin(), f.terms().end()));
}

IntMatrix Phi::matrix(unsigned j) const
{
    const GradedBasis src(es_.source(), j);
    const GradedBasis dst(es_.target(), j);
    IntMatrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const AlgebraElement image = (*this)(src[c]);
        for (const auto& [x, coeff] : image.terms()) {
            const auto r = dst.position(x);
            if (!r)
                throw std::logic_error("phi: image monomial outside target basis");
            m(*r, c) = coeff;
        }
    }
    return m;
}

SocleImageRecord verify_socle_image(const EmbeddingSpec& es)
{
    SocleImageRecord rec;
    rec.scalar = 1;
    for (unsigned a : es.block_sizes()) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), a);
        rec.scalar *= f;
    }
    rec.scalar_in_field = rec.scalar;
    if (es.characteristic() != 0)
        mpz_fdiv_r_ui(rec.scalar_in_field.get_mpz_t(), rec.scalar.get_mpz_t(), es.characteristic());
    rec.nonzero = rec.scalar_in_field != 0;

    std::vector<Exponent> a;
    for (unsigned s : es.block_sizes())
        a.push_back(Exponent(s));
    const AlgebraElement image = Phi(es)(Monomial(a));
    const AlgebraElement expected = AlgebraElement::monomial(
        es.target(), Monomial(std::vector<Exponent>(es.m(), 1)), rec.scalar);
    rec.image_matches = image == expected;
    return rec;
}

std::vector<DegreeRecord> verify_kernel_dims(const EmbeddingSpec& es, unsigned up_to_degree)
{
    const Phi phi(es);
    std::vector<DegreeRecord> out;
    for (unsigned j = 0; j <= std::min(up_to_degree, es.m()); ++j) {
        const IntMatrix m = phi.matrix(j);
        DegreeRecord rec;
        rec.j = j;
        rec.dim_source = m.cols();
        rec.dim_target = m.rows();
        rec.rank = field_rank(m, es.characteristic()).rank;
        rec.ok = rec.rank == rec.dim_source;
        out.push_back(rec);
    }
    return out;
}

TransferReport transfer_slp(const EmbeddingSpec& es, unsigned jobs)
{
    TransferReport rep{slp_check(es.source(), LinearForm::uniform(es.source().n()),
                                 SlpOptions{SlpMode::Full, RankStrategy::Dense, jobs}),
                       {}, false, true};
    rep.slp_direct = rep.direct.slp;

    const Phi phi(es);
    const LinearForm ell_b = LinearForm::uniform(es.m());
    const unsigned m = es.m();
    rep.via_embedding.resize(m / 2 + m % 2);
    parallel_for(rep.via_embedding.size(), jobs, [&](std::size_t k) {
        const unsigned i = unsigned(k);
        const IntMatrix composite = mat_mul(build_matrix(es.target(), ell_b, i, m - 2 * i).matrix, phi.matrix(i));
        EmbeddedMapRecord r;
        r.i = i;
        r.dim_source = composite.cols();
        r.rank = field_rank(composite, es.characteristic()).rank;
        r.injective = r.rank == r.dim_source;
        rep.via_embedding[k] = r;
    });
    rep.slp_via_embedding = std::all_of(rep.via_embedding.begin(), rep.via_embedding.end(),
                                        [](const EmbeddedMapRecord& r) { return r.injective; });
    return rep;
}

bool EmbeddingVerification::ok() const noexcept
{
    return socle.nonzero && socle.image_matches && transfer.agree() && transfer.slp_direct &&
           std::all_of(degrees.begin(), degrees.end(), [](const DegreeRecord& d) { return d.ok; });
}

EmbeddingVerification verify_embedding(const EmbeddingSpec& es, unsigned jobs)
{
    return EmbeddingVerification{es, verify_socle_image(es), verify_kernel_dims(es, es.m()), transfer_slp(es, jobs)};
}

}  // namespace lefschetz
