#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lefschetz/cli.hpp"
#include "lefschetz/report.hpp"

using namespace lefschetz;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(std::move(args));
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("hilbert command")
{
    const Run r = run({"hilbert", "--exponents", "3,3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "1,2,3,2,1\n");
    const json j = run_json({"hilbert", "--quadratic", "4"});
    CHECK(j["hilbert"] == json::array({1, 4, 6, 4, 1}));
    CHECK(j["socle_degree"] == 4);
}

TEST_CASE("matrix command writes CSV")
{
    const Run r = run({"matrix", "--quadratic", "4", "--i", "1", "--t", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "2,2,2,0\n2,2,0,2\n2,0,2,2\n0,2,2,2\n");
    CHECK(run({"matrix", "--quadratic", "4", "--i", "3", "--t", "2"}).code == kExitError);
}

TEST_CASE("rank command from file and from spec")
{
    const std::string path = "rank_input_test.csv";
    {
        std::ofstream f(path);
        f << "2,2,2,0\n2,2,0,2\n2,0,2,2\n0,2,2,2\n";
    }
    CHECK(run_json({"rank", "--in", path})["rank"] == 4);
    CHECK(run_json({"rank", "--in", path, "--char", "3"})["rank"] == 3);
    std::remove(path.c_str());
    CHECK(run_json({"rank", "--quadratic", "5", "--i", "1", "--method", "block"})["rank"] == 5);
    CHECK(run({"rank", "--in", "no/such/file.csv"}).code == kExitError);
}

TEST_CASE("slp exit codes follow the verdict")
{
    CHECK(run({"slp", "--quadratic", "4"}).code == kExitOk);
    const Run fail = run({"slp", "--quadratic", "3", "--char", "2"});
    CHECK(fail.code == kExitFailed);
    CHECK(fail.out.find("(0,3), (1,1)") != std::string::npos);
    CHECK(run({"slp", "--exponents", "3,4", "--mode", "full", "--jobs", "2"}).code == kExitOk);
}

TEST_CASE("slp JSON schema")
{
    const json j = run_json({"slp", "--quadratic", "4"});
    for (const char* key : {"spec", "form", "mode", "strategy", "maps", "slp", "failing", "timing"})
        CHECK(j.contains(key));
    CHECK(j["spec"] == json::parse(R"({"n":4,"exponents":[2,2,2,2],"characteristic":0})"));
    for (const auto& m : j["maps"])
        for (const char* key : {"i", "t", "rows", "cols", "rank", "maximal", "ms"})
            CHECK(m.contains(key));
}

TEST_CASE("output is deterministic once timing is stripped")
{
    const std::vector<std::string> args{"slp", "--exponents", "2,3,3", "--mode", "full"};
    CHECK(strip_timing(run_json(args)).dump() == strip_timing(run_json(args)).dump());
    const json stripped = strip_timing(run_json(args));
    CHECK_FALSE(stripped.contains("timing"));
    CHECK_FALSE(stripped["maps"][0].contains("ms"));
}

TEST_CASE("char-search output")
{
    const json j = run_json({"char-search", "--quadratic", "4", "--primes", "2..13"});
    std::vector<std::uint64_t> failing;
    for (const auto& e : j["primes"])
        if (!e["slp"].get<bool>())
            failing.push_back(e["p"]);
    CHECK(failing == std::vector<std::uint64_t>{2, 3});
    CHECK(run({"char-search", "--quadratic", "4", "--char", "3"}).code == kExitError);
    CHECK(run({"char-search", "--quadratic", "4", "--primes", "9..2"}).code == kExitError);
}

TEST_CASE("embed-verify")
{
    const Run ok = run({"embed-verify", "--exponents", "2,2"});
    CHECK(ok.code == kExitOk);
    const json j = json::parse(ok.out);
    CHECK(j["socle_scalar"] == "4");
    CHECK(j["ok"] == true);
    CHECK(run({"embed-verify", "--exponents", "3,1", "--char", "3"}).code == kExitFailed);
}

TEST_CASE("bench ranks agree across methods")
{
    const json j = run_json({"bench", "--quadratic", "6", "--methods", "dense,modular,block"});
    CHECK(j["records"].size() == 9);
    CHECK(run({"bench", "--quadratic", "4", "--methods", "magic"}).code == kExitError);
    const auto records = run_bench(7, {"dense", "block"});
    for (std::size_t k = 0; k + 1 < records.size(); k += 2)
        CHECK(records[k].rank == records[k + 1].rank);
}

TEST_CASE("malformed invocations exit with 2")
{
    CHECK(run({}).code == kExitError);
    CHECK(run({"slp", "--quadratic", "4", "--bogus"}).code == kExitError);
    CHECK(run({"slp", "--quadratic", "4", "--exponents", "2,2"}).code == kExitError);
    CHECK(run({"slp", "--exponents", "2,x"}).code == kExitError);
    CHECK(run({"slp", "--quadratic", "3", "--char", "4"}).code == kExitError);
    CHECK(run({"slp", "--quadratic", "3", "--form", "1,1"}).code == kExitError);
    CHECK(run({"frobnicate"}).code == kExitError);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("selftest passes")
{
    const Run r = run({"selftest"});
    CHECK(r.code == kExitOk);
}

TEST_CASE("spec and monomial JSON round-trip")
{
    const AlgebraSpec spec({3, 2, 5}, 7);
    CHECK(spec_from_json(to_json(spec)) == spec);
    CHECK(spec_from_json(json::parse(to_json(spec).dump())) == spec);
    const Monomial m(std::vector<Exponent>{1, 0, 4});
    CHECK(monomial_from_json(to_json(m)) == m);
    CHECK_THROWS(spec_from_json(json::parse(R"({"n":2,"exponents":[2],"characteristic":0})")));
}

TEST_CASE("block decomposition JSON")
{
    const json j = to_json(decompose(AlgebraSpec::quadratic(4), LinearForm::uniform(4), 1, 2));
    CHECK(j["bl_scalar"] == "2");
    CHECK(j["tl"].is_object());
}
