#pragma once

// JSON forms of specs, reports and verification records, and the
// dense-versus-block benchmark.
//
// Wall-clock fields are confined to keys named "ms" and "timing";
// strip_timing() removes them so that outputs can be compared
// byte-for-byte.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefschetz/block_recursion.hpp"
#include "lefschetz/embedding.hpp"
#include "lefschetz/lefschetz.hpp"
#include "lefschetz/monomials.hpp"
#include "lefschetz/quotient_algebra.hpp"

namespace lefschetz {

using json = nlohmann::ordered_json;

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

/// {"n":4,"exponents":[2,2,2,2],"characteristic":0}
json to_json(const AlgebraSpec& spec);
AlgebraSpec spec_from_json(const json& j);

json to_json(const HilbertVector& h);
json to_json(const RankResult& r);
json to_json(const MapCheck& m);
json to_json(const LefschetzReport& r);
json to_json(const std::vector<CharSearchEntry>& entries);
json to_json(const EmbeddingVerification& v);
json to_json(const BlockDecomposition& d);

/// Recursively drops every "ms" and "timing" key.
json strip_timing(json j);

struct BenchRecord {
    unsigned n = 0;
    unsigned i = 0;
    unsigned t = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::string method;
    double ms = 0.0;
    std::size_t peak_bits = 0;
    std::size_t rank = 0;
};

/// Times every requested method ("dense", "modular", "block") on each
/// middle map of the quadratic algebra in n variables with l = sum x_i.
/// "dense" is exact fraction-free elimination in characteristic 0.
/// Throws std::logic_error if the methods disagree on any rank, and
/// std::invalid_argument on an unknown method name.
std::vector<BenchRecord> run_bench(unsigned n, const std::vector<std::string>& methods,
                                   std::uint64_t characteristic = 0);

json to_json(const std::vector<BenchRecord>& records);

}  // namespace lefschetz
