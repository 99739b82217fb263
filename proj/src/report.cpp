#include "lefschetz/report.hpp"

#include <chrono>
#include <stdexcept>

namespace lefschetz {

json to_json(const Monomial& m)
{
    json out = json::array();
    for (Exponent e : m.exponents())
        out.push_back(unsigned(e));
    return out;
}

Monomial monomial_from_json(const json& j)
{
    std::vector<Exponent> exps;
    for (const auto& e : j) {
        const auto v = e.get<unsigned>();
        if (v > 255)
            throw std::invalid_argument("monomial exponent out of range");
        exps.push_back(Exponent(v));
    }
    return Monomial(std::move(exps));
}

json to_json(const AlgebraSpec& spec)
{
    return json{{"n", spec.n()}, {"exponents", spec.exponents()}, {"characteristic", spec.characteristic()}};
}

AlgebraSpec spec_from_json(const json& j)
{
    auto exps = j.at("exponents").get<std::vector<unsigned>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != exps.size())
        throw std::invalid_argument("spec: n does not match exponent count");
    return AlgebraSpec(std::move(exps), j.value("characteristic", std::uint64_t{0}));
}

json to_json(const HilbertVector& h)
{
    return json(h.values());
}

json to_json(const RankResult& r)
{
    json out{{"rank", r.rank}, {"method", to_string(r.method)}};
    if (!r.pivots.empty()) {
        json piv = json::array();
        for (const auto& p : r.pivots)
            piv.push_back({p.row, p.col});
        out["pivots"] = std::move(piv);
    }
    if (r.peak_bits)
        out["peak_bits"] = r.peak_bits;
    if (!r.notes.empty())
        out["notes"] = r.notes;
    return out;
}

json to_json(const MapCheck& m)
{
    json out{{"i", m.i},
             {"t", m.t},
             {"rows", m.rows},
             {"cols", m.cols},
             {"expected", m.expected},
             {"rank", m.rank.rank},
             {"maximal", m.maximal},
             {"method", to_string(m.rank.method)},
             {"ms", m.ms}};
    if (!m.rank.notes.empty())
        out["notes"] = m.rank.notes;
    return out;
}

namespace {

json pairs_to_json(const std::vector<std::pair<unsigned, unsigned>>& pairs)
{
    json out = json::array();
    for (const auto& [i, t] : pairs)
        out.push_back({i, t});
    return out;
}

}  // namespace

json to_json(const LefschetzReport& r)
{
    json maps = json::array();
    for (const auto& m : r.maps)
        maps.push_back(to_json(m));
    return json{{"spec", to_json(r.spec)},
                {"form", r.form.coefficients()},
                {"mode", to_string(r.mode)},
                {"strategy", to_string(r.strategy)},
                {"maps", std::move(maps)},
                {"slp", r.slp},
                {"failing", pairs_to_json(r.failing())},
                {"timing", {{"total_ms", r.total_ms}}}};
}

json to_json(const std::vector<CharSearchEntry>& entries)
{
    json out = json::array();
    for (const auto& e : entries)
        out.push_back({{"p", e.prime}, {"slp", e.slp}, {"failing", pairs_to_json(e.failing)}});
    return out;
}

json to_json(const EmbeddingVerification& v)
{
    json degrees = json::array();
    for (const auto& d : v.degrees)
        degrees.push_back({{"j", d.j},
                           {"dim_source", d.dim_source},
                           {"dim_target", d.dim_target},
                           {"rank", d.rank},
                           {"ok", d.ok}});
    json embedded = json::array();
    for (const auto& e : v.transfer.via_embedding)
        embedded.push_back({{"i", e.i}, {"dim_source", e.dim_source}, {"rank", e.rank}, {"injective", e.injective}});
    return json{{"block_sizes", v.spec.block_sizes()},
                {"source", to_json(v.spec.source())},
                {"m", v.spec.m()},
                {"socle_scalar", v.socle.scalar.get_str()},
                {"socle_scalar_in_field", v.socle.scalar_in_field.get_str()},
                {"socle_nonzero", v.socle.nonzero},
                {"socle_image_matches", v.socle.image_matches},
                {"degrees", std::move(degrees)},
                {"embedded_maps", std::move(embedded)},
                {"slp_direct", v.transfer.slp_direct},
                {"slp_via_embedding", v.transfer.slp_via_embedding},
                {"ok", v.ok()}};
}

json to_json(const BlockDecomposition& d)
{
    auto mat = [](const IntMatrix& m) { return json::parse(lefschetz::to_json(m)); };
    return json{{"restricted", to_json(d.restricted)},
                {"tl", mat(d.top_left)},
                {"tr", mat(d.top_right)},
                {"bl_scalar", d.bottom_left_scalar.get_str()},
                {"bl_inner", mat(d.inner)},
                {"br", mat(d.bottom_right)}};
}

json strip_timing(json j)
{
    if (j.is_object()) {
        j.erase("ms");
        j.erase("timing");
        for (auto& [k, v] : j.items())
            v = strip_timing(std::move(v));
    } else if (j.is_array()) {
        for (auto& v : j)
            v = strip_timing(std::move(v));
    }
    return j;
}

std::vector<BenchRecord> run_bench(unsigned n, const std::vector<std::string>& methods, std::uint64_t characteristic)
{
    for (const auto& name : methods)
        if (name != "dense" && name != "modular" && name != "block")
            throw std::invalid_argument("unknown bench method: " + name);
    const AlgebraSpec spec = AlgebraSpec::quadratic(n, characteristic);
    const LinearForm form = LinearForm::uniform(n);
    std::vector<BenchRecord> out;
    for (unsigned i = 0; 2 * i < n; ++i) {
        const unsigned t = n - 2 * i;
        std::vector<BenchRecord> row;
        for (const auto& name : methods) {
            const auto start = std::chrono::steady_clock::now();
            RankResult r;
            std::size_t rows = binomial(n, i + t), cols = binomial(n, i);
            if (name == "block") {
                r = recursive_middle_rank(spec, form, i);
            } else {
                const MultiplicationMatrix m = build_matrix(spec, form, i, t);
                if (name == "dense" && characteristic == 0)
                    r = rank_fraction_free(m.matrix);
                else
                    r = rank_mod_p(m.matrix, characteristic == 0 ? kCertifyingPrime : characteristic);
                r.peak_bits = std::max(r.peak_bits, max_entry_bits(m.matrix));
            }
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            row.push_back({n, i, t, rows, cols, name, ms, r.peak_bits, r.rank});
        }
        for (const auto& rec : row)
            if (rec.rank != row.front().rank)
                throw std::logic_error("bench: methods disagree on rank at i=" + std::to_string(i));
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

json to_json(const std::vector<BenchRecord>& records)
{
    json out = json::array();
    for (const auto& r : records)
        out.push_back({{"n", r.n},
                       {"i", r.i},
                       {"t", r.t},
                       {"rows", r.rows},
                       {"cols", r.cols},
                       {"method", r.method},
                       {"rank", r.rank},
                       {"peak_bits", r.peak_bits},
                       {"ms", r.ms}});
    return out;
}

}  // namespace lefschetz
