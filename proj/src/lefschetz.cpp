#include "lefschetz/lefschetz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "lefschetz/block_recursion.hpp"

namespace lefschetz {

bool LinearForm::all_nonzero() const noexcept
{
    return std::none_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

LinearForm LinearForm::prefix(std::size_t vars) const
{
    if (vars > coeffs_.size())
        throw std::invalid_argument("LinearForm::prefix: too many variables");
    return LinearForm(std::vector<std::int64_t>(coeffs_.begin(), coeffs_.begin() + vars));
}

ExactMatrix MultiplicationMatrix::in_field() const
{
    if (spec.characteristic() == 0)
        return matrix;
    return ModMatrix::reduce(matrix, PrimeField(spec.characteristic()));
}

namespace {

// Enumerates increments delta with |delta| = remaining and
// base_k + delta_k < d_k, calling f(delta) for each.
template <class F>
void for_each_increment(const AlgebraSpec& spec, const Monomial& base, std::size_t k, unsigned remaining,
                        std::vector<Exponent>& delta, F&& f)
{
    if (k == spec.n()) {
        if (remaining == 0)
            f(delta);
        return;
    }
    const unsigned room = spec.bound(k) - 1 - base[k];
    const unsigned top = std::min(room, remaining);
    for (unsigned e = 0; e <= top; ++e) {
        delta[k] = Exponent(e);
        for_each_increment(spec, base, k + 1, remaining - e, delta, f);
    }
    delta[k] = 0;
}

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

MultiplicationMatrix build_matrix(const AlgebraSpec& spec, const LinearForm& form, unsigned i, unsigned t)
{
    if (form.size() != spec.n())
        throw std::invalid_argument("build_matrix: form length does not match variable count");
    if (i + t > spec.socle_degree())
        throw std::invalid_argument("build_matrix: degree out of range");

    const GradedBasis source(spec, i);
    const GradedBasis target(spec, i + t);

    std::vector<mpz_class> factorial(t + 1, 1);
    for (unsigned k = 1; k <= t; ++k)
        factorial[k] = factorial[k - 1] * k;
    // coeff_pow[k][e] = c_k^e
    std::vector<std::vector<mpz_class>> coeff_pow(spec.n());
    for (std::size_t k = 0; k < spec.n(); ++k) {
        const unsigned top = std::min(t, spec.bound(k) - 1);
        coeff_pow[k].assign(top + 1, 1);
        for (unsigned e = 1; e <= top; ++e)
            coeff_pow[k][e] = coeff_pow[k][e - 1] * mpz_class(static_cast<long>(form[k]));
    }

    IntMatrix m(target.size(), source.size());
    std::vector<Exponent> delta(spec.n(), 0);
    std::vector<Exponent> v(spec.n());
    for (std::size_t c = 0; c < source.size(); ++c) {
        const Monomial& u = source[c];
        for_each_increment(spec, u, 0, t, delta, [&](const std::vector<Exponent>& d) {
            mpz_class entry = factorial[t];
            for (std::size_t k = 0; k < spec.n(); ++k) {
                v[k] = Exponent(u[k] + d[k]);
                if (d[k] != 0) {
                    mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), factorial[d[k]].get_mpz_t());
                    entry *= coeff_pow[k][d[k]];
                }
            }
            const auto r = target.position(Monomial(v));
            if (!r)
                throw std::logic_error("build_matrix: target monomial missing from basis");
            m(*r, c) = std::move(entry);
        });
    }
    return MultiplicationMatrix{spec, form, i, t, std::move(m)};
}

RankResult certified_rank(const IntMatrix& m)
{
    RankResult modular = rank_mod_p(m, kCertifyingPrime);
    if (modular.rank == std::min(m.rows(), m.cols()))
        return modular;
    return rank_fraction_free(m);
}

RankResult field_rank(const IntMatrix& m, std::uint64_t characteristic)
{
    return characteristic == 0 ? certified_rank(m) : rank_mod_p(m, characteristic);
}

MapCheck max_rank_check(const MultiplicationMatrix& m)
{
    const auto start = std::chrono::steady_clock::now();
    MapCheck check;
    check.i = m.source_degree;
    check.t = m.power;
    check.rows = m.matrix.rows();
    check.cols = m.matrix.cols();
    check.expected = std::min(check.rows, check.cols);
    check.rank = field_rank(m.matrix, m.spec.characteristic());
    check.maximal = check.rank.rank == check.expected;
    check.ms = elapsed_ms(start);
    return check;
}

std::string to_string(SlpMode m)
{
    return m == SlpMode::Full ? "full" : "middle";
}

std::string to_string(RankStrategy s)
{
    switch (s) {
    case RankStrategy::Dense: return "dense";
    case RankStrategy::Block: return "block";
    case RankStrategy::Auto: return "auto";
    }
    return "unknown";
}

std::vector<std::pair<unsigned, unsigned>> LefschetzReport::failing() const
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (const auto& m : maps)
        if (!m.maximal)
            out.emplace_back(m.i, m.t);
    return out;
}

std::vector<std::pair<unsigned, unsigned>> maps_for_mode(const AlgebraSpec& spec, SlpMode mode)
{
    const unsigned socle = spec.socle_degree();
    std::vector<std::pair<unsigned, unsigned>> out;
    if (mode == SlpMode::Full) {
        for (unsigned i = 0; i <= socle; ++i)
            for (unsigned t = 0; i + t <= socle; ++t)
                out.emplace_back(i, t);
    } else {
        for (unsigned i = 0; 2 * i < socle; ++i)
            out.emplace_back(i, socle - 2 * i);
    }
    return out;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f)
{
    const unsigned width = std::max(1u, std::min<unsigned>(jobs, unsigned(count)));
    if (width <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            f(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (unsigned w = 0; w < width; ++w)
        pool.emplace_back([&] {
            for (std::size_t k; !failed && (k = next.fetch_add(1)) < count;) {
                try {
                    f(k);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

namespace {

bool block_applies(const AlgebraSpec& spec, const LinearForm& form, unsigned i, unsigned t)
{
    return spec.is_quadratic() && form.all_nonzero() && 2 * i < spec.n() && t == spec.n() - 2 * i;
}

MapCheck check_one(const AlgebraSpec& spec, const LinearForm& form, unsigned i, unsigned t, RankStrategy strategy)
{
    if (strategy != RankStrategy::Dense && block_applies(spec, form, i, t)) {
        const auto start = std::chrono::steady_clock::now();
        MapCheck check;
        check.i = i;
        check.t = t;
        check.rows = binomial(unsigned(spec.n()), i + t);
        check.cols = binomial(unsigned(spec.n()), i);
        check.expected = std::min(check.rows, check.cols);
        check.rank = recursive_middle_rank(spec, form, i);
        check.maximal = check.rank.rank == check.expected;
        check.ms = elapsed_ms(start);
        return check;
    }
    MapCheck check = max_rank_check(build_matrix(spec, form, i, t));
    if (strategy == RankStrategy::Block)
        check.rank.notes.push_back("block recursion not applicable; dense elimination used");
    return check;
}

}  // namespace

LefschetzReport slp_check(const AlgebraSpec& spec, const LinearForm& form, const SlpOptions& options)
{
    if (form.size() != spec.n())
        throw std::invalid_argument("slp_check: form length does not match variable count");
    const auto start = std::chrono::steady_clock::now();
    LefschetzReport report{spec, form, options.mode, options.strategy, {}, true, 0.0};
    const auto pairs = maps_for_mode(spec, options.mode);
    report.maps.resize(pairs.size());
    parallel_for(pairs.size(), options.jobs, [&](std::size_t k) {
        report.maps[k] = check_one(spec, form, pairs[k].first, pairs[k].second, options.strategy);
    });
    report.slp = std::all_of(report.maps.begin(), report.maps.end(), [](const MapCheck& m) { return m.maximal; });
    report.total_ms = elapsed_ms(start);
    return report;
}

std::vector<CharSearchEntry> char_search(const AlgebraSpec& spec, const LinearForm& form,
                                         std::uint64_t lo, std::uint64_t hi, const SlpOptions& options)
{
    if (lo > hi)
        throw std::invalid_argument("char_search: empty prime range");
    std::vector<CharSearchEntry> out;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi && p <= kMaxPrime; ++p) {
        if (!is_prime(p))
            continue;
        const LefschetzReport r = slp_check(spec.with_characteristic(p), form, options);
        out.push_back({p, r.slp, r.failing()});
    }
    return out;
}

}  // namespace lefschetz
