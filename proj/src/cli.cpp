#include "lefschetz/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lefschetz/report.hpp"

namespace lefschetz {

namespace {

struct RunConfig {
    std::optional<unsigned> quadratic;
    std::vector<unsigned> exponents;
    std::uint64_t characteristic = 0;
    std::vector<std::int64_t> form;
    std::string mode;  // empty: command default
    std::string method = "auto";
    std::vector<std::string> methods{"dense", "block"};
    std::string out_path;
    std::string format;  // empty: command default
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::string primes;
    std::optional<unsigned> i;
    std::optional<unsigned> t;
    std::string in_path;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_spec_options(CLI::App* cmd, RunConfig& cfg)
{
    auto* q = cmd->add_option("--quadratic", cfg.quadratic, "quadratic algebra in N variables");
    auto* e = cmd->add_option("--exponents", cfg.exponents, "killed powers d1,d2,...")->delimiter(',');
    q->excludes(e);
    cmd->add_option("--char", cfg.characteristic, "characteristic: 0 or a prime");
}

void add_output_options(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--out", cfg.out_path, "write machine-readable output to PATH");
    cmd->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_form_option(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--form", cfg.form, "linear form coefficients c1,c2,... (default all 1)")->delimiter(',');
}

AlgebraSpec spec_of(const RunConfig& cfg)
{
    if (cfg.quadratic) {
        if (*cfg.quadratic == 0)
            throw UsageError("--quadratic needs at least one variable");
        return AlgebraSpec::quadratic(*cfg.quadratic, cfg.characteristic);
    }
    if (cfg.exponents.empty())
        throw UsageError("one of --quadratic N or --exponents d1,d2,... is required");
    return AlgebraSpec(cfg.exponents, cfg.characteristic);
}

LinearForm form_of(const RunConfig& cfg, const AlgebraSpec& spec)
{
    if (cfg.form.empty())
        return LinearForm::uniform(spec.n());
    if (cfg.form.size() != spec.n())
        throw UsageError("--form needs exactly one coefficient per variable");
    return LinearForm(cfg.form);
}

RankStrategy strategy_of(const std::string& s)
{
    if (s == "dense")
        return RankStrategy::Dense;
    if (s == "block")
        return RankStrategy::Block;
    return RankStrategy::Auto;
}

SlpMode mode_of(const RunConfig& cfg, const AlgebraSpec& spec)
{
    if (cfg.mode.empty())
        return spec.is_quadratic() ? SlpMode::Middle : SlpMode::Full;
    return cfg.mode == "middle" ? SlpMode::Middle : SlpMode::Full;
}

std::pair<std::uint64_t, std::uint64_t> prime_range(const std::string& s)
{
    const auto dots = s.find("..");
    if (dots == std::string::npos)
        throw UsageError("--primes expects LO..HI");
    try {
        std::size_t used = 0;
        const auto lo = std::stoull(s.substr(0, dots), &used);
        if (used != dots)
            throw UsageError("--primes expects LO..HI");
        const std::string rest = s.substr(dots + 2);
        const auto hi = std::stoull(rest, &used);
        if (used != rest.size() || lo > hi)
            throw UsageError("--primes expects LO..HI with LO <= HI");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--primes expects LO..HI");
    }
}

std::string spec_label(const AlgebraSpec& spec)
{
    std::ostringstream s;
    s << "d=(";
    for (std::size_t k = 0; k < spec.n(); ++k)
        s << (k ? "," : "") << spec.exponents()[k];
    s << ") char " << spec.characteristic();
    return s.str();
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s;
}

std::string pairs_label(const std::vector<std::pair<unsigned, unsigned>>& pairs)
{
    std::string s;
    for (const auto& [i, t] : pairs)
        s += (s.empty() ? "" : ", ") + ("(" + std::to_string(i) + "," + std::to_string(t) + ")");
    return s;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open output file: " + path);
    f << text;
}

// Machine output goes to --out when given, else to stdout when a format
// was requested explicitly. Returns true if it was written to stdout.
bool emit_machine(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, text);
        return false;
    }
    if (!cfg.format.empty()) {
        out << text;
        return true;
    }
    return false;
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out)
{
    const AlgebraSpec spec = spec_of(cfg);
    const HilbertVector h = hilbert_vector(spec);
    const json j{{"spec", to_json(spec)}, {"socle_degree", spec.socle_degree()}, {"hilbert", to_json(h)}};
    if (!emit_machine(cfg, j.dump(2) + "\n", out))
        out << join(h.values()) << "\n";
    return kExitOk;
}

std::string matrix_text(const IntMatrix& m, const std::string& format)
{
    return format == "json" ? to_json(m) + "\n" : to_csv(m);
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.i || !cfg.t)
        throw UsageError("matrix needs --i and --t");
    const AlgebraSpec spec = spec_of(cfg);
    const MultiplicationMatrix m = build_matrix(spec, form_of(cfg, spec), *cfg.i, *cfg.t);
    const IntMatrix entries = spec.characteristic() == 0
                                  ? m.matrix
                                  : lift(ModMatrix::reduce(m.matrix, PrimeField(spec.characteristic())));
    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    const std::string text = matrix_text(entries, format);
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, text);
        out << "wrote " << entries.rows() << "x" << entries.cols() << " matrix to " << cfg.out_path << "\n";
    } else {
        out << text;
    }
    return kExitOk;
}

int cmd_rank(const RunConfig& cfg, std::ostream& out)
{
    RankResult r;
    std::size_t rows = 0, cols = 0;
    if (!cfg.in_path.empty()) {
        std::ifstream f(cfg.in_path, std::ios::binary);
        if (!f)
            throw UsageError("cannot read " + cfg.in_path);
        std::stringstream buf;
        buf << f.rdbuf();
        const bool is_json = cfg.in_path.size() >= 5 && cfg.in_path.substr(cfg.in_path.size() - 5) == ".json";
        const IntMatrix m = is_json ? from_json(buf.str()) : from_csv(buf.str());
        if (cfg.characteristic != 0 && !is_prime(cfg.characteristic))
            throw UsageError("--char must be 0 or a prime");
        rows = m.rows();
        cols = m.cols();
        r = cfg.method == "dense" && cfg.characteristic == 0 ? rank_fraction_free(m)
                                                             : field_rank(m, cfg.characteristic);
    } else {
        if (!cfg.i)
            throw UsageError("rank needs --in FILE or a spec with --i [--t]");
        const AlgebraSpec spec = spec_of(cfg);
        const LinearForm form = form_of(cfg, spec);
        const unsigned i = *cfg.i;
        const unsigned t = cfg.t ? *cfg.t : (spec.socle_degree() >= 2 * i ? spec.socle_degree() - 2 * i : 0);
        const bool middle = spec.is_quadratic() && 2 * i < spec.n() && t == spec.n() - 2 * i;
        if (cfg.method == "block" && !middle)
            throw UsageError("--method=block needs a middle map (t = n - 2i) of a quadratic algebra");
        if (cfg.method != "dense" && middle && form.all_nonzero()) {
            rows = binomial(unsigned(spec.n()), i + t);
            cols = binomial(unsigned(spec.n()), i);
            r = recursive_middle_rank(spec, form, i);
        } else {
            const MultiplicationMatrix m = build_matrix(spec, form, i, t);
            rows = m.matrix.rows();
            cols = m.matrix.cols();
            r = field_rank(m.matrix, spec.characteristic());
        }
    }
    json j = to_json(r);
    j["rows"] = rows;
    j["cols"] = cols;
    j["maximal"] = r.rank == std::min(rows, cols);
    if (!emit_machine(cfg, j.dump(2) + "\n", out))
        out << "rank " << r.rank << " of " << rows << "x" << cols << " (" << to_string(r.method) << ")"
            << (r.rank == std::min(rows, cols) ? ", maximal" : ", not maximal") << "\n";
    return kExitOk;
}

void print_report(const LefschetzReport& r, std::ostream& out)
{
    out << "algebra " << spec_label(r.spec) << ", mode " << to_string(r.mode) << ", strategy "
        << to_string(r.strategy) << "\n";
    out << std::setw(4) << "i" << std::setw(4) << "t" << std::setw(8) << "rows" << std::setw(8) << "cols"
        << std::setw(8) << "rank" << "  maximal  method\n";
    for (const auto& m : r.maps)
        out << std::setw(4) << m.i << std::setw(4) << m.t << std::setw(8) << m.rows << std::setw(8) << m.cols
            << std::setw(8) << m.rank.rank << "  " << (m.maximal ? "yes" : "NO ") << "      "
            << to_string(m.rank.method) << "\n";
    if (r.slp)
        out << "SLP holds\n";
    else
        out << "SLP fails at " << pairs_label(r.failing()) << "\n";
}

int cmd_slp(const RunConfig& cfg, std::ostream& out)
{
    const AlgebraSpec spec = spec_of(cfg);
    const LinearForm form = form_of(cfg, spec);
    const LefschetzReport r =
        slp_check(spec, form, SlpOptions{mode_of(cfg, spec), strategy_of(cfg.method), cfg.jobs});
    if (!emit_machine(cfg, to_json(r).dump(2) + "\n", out))
        print_report(r, out);
    return r.slp ? kExitOk : kExitFailed;
}

int cmd_char_search(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.characteristic != 0)
        throw UsageError("char-search takes --primes, not --char");
    const auto [lo, hi] = prime_range(cfg.primes.empty() ? "2..50" : cfg.primes);
    const AlgebraSpec spec = spec_of(cfg);
    const LinearForm form = form_of(cfg, spec);
    const auto entries = char_search(spec, form, lo, hi, SlpOptions{mode_of(cfg, spec), strategy_of(cfg.method), cfg.jobs});
    const json j{{"spec", to_json(spec)}, {"form", form.coefficients()}, {"socle_degree", spec.socle_degree()},
                 {"primes", to_json(entries)}};
    if (!emit_machine(cfg, j.dump(2) + "\n", out)) {
        out << "algebra " << spec_label(spec) << ", socle degree " << spec.socle_degree() << "\n";
        for (const auto& e : entries) {
            out << "p=" << e.prime << ": " << (e.slp ? "holds" : "fails");
            if (!e.slp)
                out << " at " << pairs_label(e.failing);
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_embed_verify(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.exponents.empty())
        throw UsageError("embed-verify needs --exponents a1,a2,... (block sizes)");
    const EmbeddingVerification v = verify_embedding(EmbeddingSpec(cfg.exponents, cfg.characteristic), cfg.jobs);
    const std::string text = to_json(v).dump(2) + "\n";
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, text);
        out << "m=" << v.spec.m() << " socle scalar " << v.socle.scalar.get_str() << ", "
            << (v.ok() ? "all certificates hold" : "some certificates fail") << "\n";
    } else {
        out << text;
    }
    return v.ok() ? kExitOk : kExitFailed;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out)
{
    if (!cfg.quadratic)
        throw UsageError("bench needs --quadratic N");
    const auto records = run_bench(*cfg.quadratic, cfg.methods, cfg.characteristic);
    if (!emit_machine(cfg, json{{"records", to_json(records)}}.dump(2) + "\n", out)) {
        out << std::setw(4) << "i" << std::setw(4) << "t" << std::setw(8) << "rows" << std::setw(8) << "cols"
            << std::setw(10) << "method" << std::setw(8) << "rank" << std::setw(10) << "bits" << std::setw(12)
            << "ms" << "\n";
        for (const auto& r : records)
            out << std::setw(4) << r.i << std::setw(4) << r.t << std::setw(8) << r.rows << std::setw(8) << r.cols
                << std::setw(10) << r.method << std::setw(8) << r.rank << std::setw(10) << r.peak_bits
                << std::setw(12) << std::fixed << std::setprecision(3) << r.ms << "\n";
    }
    return kExitOk;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out)
{
    bool all = true;
    auto report = [&](const char* name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        all = all && ok;
    };

    const IntMatrix golden{{2, 2, 2, 0}, {2, 2, 0, 2}, {2, 0, 2, 2}, {0, 2, 2, 2}};
    const auto m12 = build_matrix(AlgebraSpec::quadratic(4), LinearForm::uniform(4), 1, 2);
    report("golden 4x4 matrix", m12.matrix == golden);
    report("golden determinant -48", determinant(m12.matrix) == -48);
    report("hilbert (1,4,6,4,1)", hilbert_vector(AlgebraSpec::quadratic(4)).values() ==
                                      std::vector<std::uint64_t>{1, 4, 6, 4, 1});

    std::mt19937_64 rng(cfg.seed);
    const PrimeField f(101);
    bool identity_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::uniform_int_distribution<std::uint64_t> val(0, 100);
        const std::size_t m = dim(rng), n = dim(rng), p = dim(rng);
        auto random = [&](std::size_t r, std::size_t c) {
            ModMatrix x(f, r, c);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < c; ++b)
                    x.set(a, b, val(rng));
            return x;
        };
        ModMatrix P = random(n, n);
        while (determinant(P) == 0)
            P = random(n, n);
        const ModMatrix A = random(m, n), B = random(n, p);
        identity_ok = identity_ok && rank_identity_reduce(A, B, P).rank ==
                                         rank_mod_p(assemble_rank_identity(A, B, P)).rank;
    }
    report("rank identity, 50 random trials", identity_ok);

    bool rec_ok = true;
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned i = 0; 2 * i < n; ++i)
            rec_ok = rec_ok && recursive_middle_rank(AlgebraSpec::quadratic(n), LinearForm::uniform(n), i).rank ==
                                   rank_fraction_free(build_matrix(AlgebraSpec::quadratic(n),
                                                                   LinearForm::uniform(n), i, n - 2 * i).matrix).rank;
    report("block recursion matches dense rank, n <= 7", rec_ok);

    report("embedding a=(2,2)", verify_embedding(EmbeddingSpec({2, 2})).ok());
    return all ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Strong Lefschetz property checker for monomial complete intersections", "slpcheck"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert vector of the algebra");
    add_spec_options(hilbert, cfg);
    add_output_options(hilbert, cfg);

    auto* matrix = app.add_subcommand("matrix", "matrix of multiplication by l^t from degree i");
    add_spec_options(matrix, cfg);
    add_form_option(matrix, cfg);
    matrix->add_option("--i", cfg.i, "source degree")->required();
    matrix->add_option("--t", cfg.t, "power of the linear form")->required();
    add_output_options(matrix, cfg);

    auto* rank = app.add_subcommand("rank", "rank of a multiplication matrix or of a matrix file");
    add_spec_options(rank, cfg);
    add_form_option(rank, cfg);
    rank->add_option("--i", cfg.i, "source degree");
    rank->add_option("--t", cfg.t, "power (default: the middle map)");
    rank->add_option("--in", cfg.in_path, "matrix file (.csv or .json)");
    rank->add_option("--method", cfg.method, "dense|block|auto")->check(CLI::IsMember({"dense", "block", "auto"}));
    add_output_options(rank, cfg);

    auto* slp = app.add_subcommand("slp", "decide the strong Lefschetz property");
    add_spec_options(slp, cfg);
    add_form_option(slp, cfg);
    slp->add_option("--mode", cfg.mode, "full|middle (default: middle for quadratic algebras)")
        ->check(CLI::IsMember({"full", "middle"}));
    slp->add_option("--method", cfg.method, "dense|block|auto")->check(CLI::IsMember({"dense", "block", "auto"}));
    slp->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_output_options(slp, cfg);

    auto* search = app.add_subcommand("char-search", "SLP verdict over F_p for each prime in a range");
    add_spec_options(search, cfg);
    add_form_option(search, cfg);
    search->add_option("--primes", cfg.primes, "prime range LO..HI (default 2..50)");
    search->add_option("--mode", cfg.mode, "full|middle")->check(CLI::IsMember({"full", "middle"}));
    search->add_option("--method", cfg.method, "dense|block|auto")->check(CLI::IsMember({"dense", "block", "auto"}));
    search->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_output_options(search, cfg);

    auto* embed = app.add_subcommand("embed-verify", "verify the embedding into the quadratic algebra");
    embed->add_option("--exponents", cfg.exponents, "block sizes a1,a2,... (the algebra killed by y_j^(a_j+1))")
        ->delimiter(',')
        ->required();
    embed->add_option("--char", cfg.characteristic, "characteristic: 0 or a prime");
    embed->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    embed->add_option("--out", cfg.out_path, "write the JSON record to PATH");

    auto* bench = app.add_subcommand("bench", "time dense and block rank on the middle maps");
    bench->add_option("--quadratic", cfg.quadratic, "number of variables")->required();
    bench->add_option("--char", cfg.characteristic, "characteristic: 0 or a prime");
    bench->add_option("--methods", cfg.methods, "dense,modular,block")->delimiter(',');
    add_output_options(bench, cfg);

    auto* selftest = app.add_subcommand("selftest", "run built-in consistency checks");
    selftest->add_option("--seed", cfg.seed, "seed for randomized checks");

    std::vector<const char*> argv{"slpcheck"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (hilbert->parsed())
            return cmd_hilbert(cfg, out);
        if (matrix->parsed())
            return cmd_matrix(cfg, out);
        if (rank->parsed())
            return cmd_rank(cfg, out);
        if (slp->parsed())
            return cmd_slp(cfg, out);
        if (search->parsed())
            return cmd_char_search(cfg, out);
        if (embed->parsed())
            return cmd_embed_verify(cfg, out);
        if (bench->parsed())
            return cmd_bench(cfg, out);
        if (selftest->parsed())
            return cmd_selftest(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace lefschetz
