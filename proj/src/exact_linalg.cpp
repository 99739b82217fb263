#include "lefschetz/exact_linalg.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

namespace lefschetz {

ModMatrix::ModMatrix(PrimeField field, Matrix<std::uint64_t> residues)
    : field_(field), residues_(std::move(residues))
{
    for (auto& r : residues_.entries())
        r %= field_.prime();
}

ModMatrix ModMatrix::reduce(const IntMatrix& m, PrimeField field)
{
    ModMatrix out(field, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.residues_(r, c) = field.reduce(m(r, c));
    return out;
}

Domain domain_of(const ExactMatrix& m)
{
    switch (m.index()) {
    case 0: return Domain::Integer;
    case 1: return Domain::Rational;
    default: return Domain::PrimeField;
    }
}

std::string to_string(RankMethod m)
{
    switch (m) {
    case RankMethod::FractionFree: return "fraction-free";
    case RankMethod::Modular: return "modular";
    case RankMethod::BlockRecursive: return "block-recursive";
    }
    return "unknown";
}

namespace {

// Fraction-free (Bareiss) row echelon reduction in place. Returns the
// rank; `sign` flips on every row swap, `last_pivot` ends as the final
// leading principal minor of the echelon form.
struct BareissOutcome {
    std::size_t rank = 0;
    int sign = 1;
    mpz_class last_pivot = 1;
    std::vector<Pivot> pivots;
    std::size_t peak_bits = 0;
};

BareissOutcome bareiss(IntMatrix& a, bool track_bits)
{
    BareissOutcome out;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> origin(rows);
    std::iota(origin.begin(), origin.end(), std::size_t{0});
    mpz_class prev = 1, tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            for (std::size_t j = c; j < cols; ++j)
                mpz_swap(a(p, j).get_mpz_t(), a(r, j).get_mpz_t());
            std::swap(origin[p], origin[r]);
            out.sign = -out.sign;
        }
        out.pivots.push_back({origin[r], c});
        const mpz_class& piv = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpz_class& lead = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_ptr x = a(i, j).get_mpz_t();
                // x = (piv * x - lead * a(r, j)) / prev, exact by Sylvester's identity.
                mpz_mul(x, x, piv.get_mpz_t());
                if (lead != 0) {
                    mpz_mul(tmp.get_mpz_t(), lead.get_mpz_t(), a(r, j).get_mpz_t());
                    mpz_sub(x, x, tmp.get_mpz_t());
                }
                mpz_divexact(x, x, prev.get_mpz_t());
                if (track_bits)
                    out.peak_bits = std::max<std::size_t>(out.peak_bits, mpz_sizeinbase(x, 2));
            }
            lead = 0;
        }
        prev = piv;
        ++r;
    }
    out.rank = r;
    out.last_pivot = prev;
    return out;
}

// Gaussian elimination over F_p in place; same outcome fields as bareiss.
struct ModOutcome {
    std::size_t rank = 0;
    std::uint64_t det = 1;
    std::vector<Pivot> pivots;
};

ModOutcome eliminate_mod(Matrix<std::uint64_t>& a, const PrimeField& f)
{
    ModOutcome out;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> origin(rows);
    std::iota(origin.begin(), origin.end(), std::size_t{0});
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            for (std::size_t j = c; j < cols; ++j)
                std::swap(a(p, j), a(r, j));
            std::swap(origin[p], origin[r]);
            out.det = f.neg(out.det);
        }
        out.pivots.push_back({origin[r], c});
        out.det = f.mul(out.det, a(r, c));
        const std::uint64_t inv = f.inv(a(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0)
                continue;
            const std::uint64_t factor = f.mul(a(i, c), inv);
            for (std::size_t j = c + 1; j < cols; ++j)
                if (a(r, j) != 0)
                    a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
            a(i, c) = 0;
        }
        ++r;
    }
    out.rank = r;
    return out;
}

}  // namespace

RankResult rank_fraction_free(const IntMatrix& m)
{
    IntMatrix work = m;
    BareissOutcome o = bareiss(work, true);
    RankResult res;
    res.rank = o.rank;
    res.method = RankMethod::FractionFree;
    res.pivots = std::move(o.pivots);
    res.peak_bits = std::max(o.peak_bits, max_entry_bits(m));
    return res;
}

RankResult rank_rational(const RatMatrix& m)
{
    // Clear denominators row by row, then reuse the integer kernel.
    IntMatrix scaled(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (const auto& q : m.row(r))
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c)
            scaled(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    return rank_fraction_free(scaled);
}

RankResult rank_mod_p(const IntMatrix& m, std::uint64_t p)
{
    return rank_mod_p(ModMatrix::reduce(m, PrimeField(p)));
}

RankResult rank_mod_p(const ModMatrix& m)
{
    Matrix<std::uint64_t> work = m.residues();
    ModOutcome o = eliminate_mod(work, m.field());
    RankResult res;
    res.rank = o.rank;
    res.method = RankMethod::Modular;
    res.pivots = std::move(o.pivots);
    return res;
}

mpz_class determinant(const IntMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant: matrix is not square");
    if (m.rows() == 0)
        return 1;
    IntMatrix work = m;
    BareissOutcome o = bareiss(work, false);
    if (o.rank < m.rows())
        return 0;
    return o.sign * o.last_pivot;
}

mpq_class determinant(const RatMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant: matrix is not square");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = c; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0)
                continue;
            const mpq_class factor = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= factor * a(c, j);
        }
    }
    return det;
}

std::uint64_t determinant(const ModMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    Matrix<std::uint64_t> work = m.residues();
    ModOutcome o = eliminate_mod(work, m.field());
    return o.rank < m.rows() ? 0 : o.det;
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b)
{
    if (!(a.field() == b.field()))
        throw std::invalid_argument("mat_mul: matrices over different fields");
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    const PrimeField& f = a.field();
    Matrix<std::uint64_t> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    return ModMatrix(f, std::move(out));
}

ModMatrix scale(const ModMatrix& m, std::uint64_t s)
{
    Matrix<std::uint64_t> out = m.residues();
    s %= m.prime();
    for (auto& e : out.entries())
        e = m.field().mul(e, s);
    return ModMatrix(m.field(), std::move(out));
}

ModMatrix block_assemble(const ModMatrix& tl, const ModMatrix& tr, const ModMatrix& bl, const ModMatrix& br)
{
    if (!(tl.field() == tr.field() && tl.field() == bl.field() && tl.field() == br.field()))
        throw std::invalid_argument("block_assemble: blocks over different fields");
    return ModMatrix(tl.field(), block_assemble(tl.residues(), tr.residues(), bl.residues(), br.residues()));
}

std::size_t max_entry_bits(const IntMatrix& m)
{
    std::size_t bits = 0;
    for (const auto& e : m.entries())
        if (e != 0)
            bits = std::max<std::size_t>(bits, mpz_sizeinbase(e.get_mpz_t(), 2));
    return bits;
}

std::string to_csv(const IntMatrix& m)
{
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out += ',';
            out += m(r, c).get_str();
        }
        out += '\n';
    }
    return out;
}

IntMatrix from_csv(const std::string& text)
{
    std::vector<mpz_class> entries;
    std::size_t rows = 0, cols = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::size_t count = 0;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t");
            const auto e = cell.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw std::invalid_argument("from_csv: empty cell");
            mpz_class v;
            if (v.set_str(cell.substr(b, e - b + 1), 10) != 0)
                throw std::invalid_argument("from_csv: not an integer: " + cell);
            entries.push_back(std::move(v));
            ++count;
        }
        if (rows == 0)
            cols = count;
        else if (count != cols)
            throw std::invalid_argument("from_csv: ragged rows");
        ++rows;
    }
    return IntMatrix(rows, cols, std::move(entries));
}

std::string to_json(const IntMatrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& e : m.row(r)) {
            if (e.fits_slong_p())
                row.push_back(std::int64_t(e.get_si()));
            else
                row.push_back(e.get_str());
        }
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}}.dump();
}

IntMatrix from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& ent = j.at("entries");
    if (ent.size() != rows)
        throw std::invalid_argument("from_json: row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (ent[r].size() != cols)
            throw std::invalid_argument("from_json: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& v = ent[r][c];
            if (v.is_number_integer())
                m(r, c) = mpz_class(std::to_string(v.get<std::int64_t>()));
            else if (v.is_string()) {
                if (m(r, c).set_str(v.get<std::string>(), 10) != 0)
                    throw std::invalid_argument("from_json: not an integer");
            } else
                throw std::invalid_argument("from_json: entries must be integers");
        }
    }
    return m;
}

IntMatrix lift(const ModMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = mpz_class(std::to_string(m(r, c)));
    return out;
}

}  // namespace lefschetz
