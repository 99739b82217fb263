#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "lefschetz/block_recursion.hpp"
#include "lefschetz/exact_linalg.hpp"

using namespace lefschetz;

namespace {

const IntMatrix kGolden{{2, 2, 2, 0}, {2, 2, 0, 2}, {2, 0, 2, 2}, {0, 2, 2, 2}};

IntMatrix random_int(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (auto& e : m.entries())
        e = d(rng);
    return m;
}

ModMatrix random_mod(std::mt19937_64& rng, const PrimeField& f, std::size_t rows, std::size_t cols)
{
    ModMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rng() % f.prime());
    return m;
}

}  // namespace

TEST_CASE("identity and zero ranks")
{
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(rank_fraction_free(IntMatrix::identity(k)).rank == k);
    CHECK(rank_mod_p(IntMatrix(3, 5), 7).rank == 0);
    CHECK(rank_fraction_free(IntMatrix(0, 4)).rank == 0);
}

TEST_CASE("golden 4x4 matrix: full rank over Q and mod 5, deficient mod 3")
{
    CHECK(rank_fraction_free(kGolden).rank == 4);
    CHECK(rank_mod_p(kGolden, 5).rank == 4);
    CHECK(rank_mod_p(kGolden, 3).rank == oracle::mod_rank(testing::nested(kGolden), 3));
    CHECK(rank_mod_p(kGolden, 3).rank == 3);
    CHECK(rank_mod_p(kGolden, 2).rank == 0);
}

TEST_CASE("golden determinant")
{
    // The Leibniz oracle and all three library domains agree on -48 = -2^4 * 3.
    const mpz_class expected = oracle::leibniz_det(testing::nested(kGolden));
    CHECK(expected == -48);
    CHECK(determinant(kGolden) == expected);
    RatMatrix q(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            q(r, c) = kGolden(r, c);
    CHECK(determinant(q) == mpq_class(-48));
    CHECK(determinant(ModMatrix::reduce(kGolden, PrimeField(5))) == 2);  // -48 mod 5
    CHECK(determinant(ModMatrix::reduce(kGolden, PrimeField(3))) == 0);
    CHECK(determinant(IntMatrix{{7}}) == 7);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("rank of a product of random factors is certified by rational elimination")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const IntMatrix a = random_int(rng, 6, 3), b = random_int(rng, 3, 4);
        const IntMatrix m = mat_mul(a, b);
        const std::size_t expected = oracle::rational_rank(testing::nested(m));
        CHECK(rank_fraction_free(m).rank == expected);
        CHECK(expected <= 3);
    }
    // A seeded instance with rank exactly 3.
    IntMatrix a{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {2, 0, 1}};
    IntMatrix b{{1, 2, 0, 1}, {0, 1, 3, 1}, {4, 0, 1, 1}};
    CHECK(rank_fraction_free(mat_mul(a, b)).rank == 3);
    CHECK(oracle::rational_rank(testing::nested(mat_mul(a, b))) == 3);
}

TEST_CASE("fraction-free, rational and modular ranks agree with the oracles on random matrices")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        // Low-rank and sparse structure so deficiency actually occurs.
        IntMatrix m = random_int(rng, rows, cols, -2, 2);
        if (trial % 3 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c)
                m(rows - 1, c) = m(0, c) * 2 - (rows > 2 ? m(1, c) : 0);
        const auto nested = testing::nested(m);
        const std::size_t q = oracle::rational_rank(nested);
        const RankResult ff = rank_fraction_free(m);
        REQUIRE(ff.rank == q);
        RatMatrix rm(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                rm(r, c) = mpq_class(m(r, c), (r + c) % 3 + 1);
        std::vector<std::vector<mpq_class>> qrows(rows);
        for (std::size_t r = 0; r < rows; ++r)
            qrows[r].assign(rm.row(r).begin(), rm.row(r).end());
        REQUIRE(rank_rational(rm).rank == oracle::rational_rank(qrows));
        for (std::uint64_t p : {2ull, 3ull, 5ull, 101ull}) {
            const std::size_t mp = rank_mod_p(m, p).rank;
            REQUIRE(mp == oracle::mod_rank(nested, long(p)));
            REQUIRE(mp <= ff.rank);
        }
        if (rows == cols)
            REQUIRE((determinant(m) != 0) == (ff.rank == rows));
    }
}

TEST_CASE("modular rank equals rational rank when p misses a nonsingular maximal minor")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix m = random_int(rng, 2 + rng() % 5, 2 + rng() % 5, -3, 3);
        const RankResult ff = rank_fraction_free(m);
        // The pivot rows and columns select a nonsingular maximal minor.
        IntMatrix minor(ff.rank, ff.rank);
        std::vector<std::size_t> rows;
        for (const auto& p : ff.pivots)
            rows.push_back(p.row);
        std::sort(rows.begin(), rows.end());
        for (std::size_t r = 0; r < ff.rank; ++r)
            for (std::size_t c = 0; c < ff.rank; ++c)
                minor(r, c) = m(rows[r], ff.pivots[c].col);
        const mpz_class det = determinant(minor);
        REQUIRE(det != 0);
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
            if (mpz_divisible_ui_p(det.get_mpz_t(), p) == 0)
                REQUIRE(rank_mod_p(m, p).rank == ff.rank);
    }
}

TEST_CASE("rank_mod_p rejects composite moduli")
{
    CHECK_THROWS_AS(rank_mod_p(kGolden, 4), std::invalid_argument);
    CHECK_THROWS_AS(rank_mod_p(kGolden, 1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(kMaxPrime + 2), std::invalid_argument);
}

TEST_CASE("rank identity on the assembled block matrix over F_101")
{
    std::mt19937_64 rng(23);
    const PrimeField f(101);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8, p = 1 + rng() % 8;
        ModMatrix P = random_mod(rng, f, n, n);
        while (determinant(P) == 0)
            P = random_mod(rng, f, n, n);
        ModMatrix A = random_mod(rng, f, m, n), B = random_mod(rng, f, n, p);
        if (trial % 4 == 0)
            A = ModMatrix(f, m, n);
        const ModMatrix M = assemble_rank_identity(A, B, P);
        REQUIRE(M.rows() == m + n);
        REQUIRE(M.cols() == n + p);
        const std::size_t lhs = rank_mod_p(M).rank;
        REQUIRE(lhs == n + rank_mod_p(mat_mul(mat_mul(A, P), B)).rank);
        REQUIRE(lhs == oracle::mod_rank(testing::nested(lift(M)), 101));
    }
}

TEST_CASE("mat_mul and block_assemble")
{
    std::mt19937_64 rng(29);
    const IntMatrix a = random_int(rng, 3, 4);
    CHECK(mat_mul(a, IntMatrix::identity(4)) == a);
    CHECK_THROWS_AS(mat_mul(a, a), std::invalid_argument);

    const IntMatrix tl{{2, 2, 2}}, tr{{0}};
    const IntMatrix bl{{2, 2, 0}, {2, 0, 2}, {0, 2, 2}}, br{{2}, {2}, {2}};
    CHECK(block_assemble(tl, tr, bl, br) == kGolden);
    CHECK_THROWS_AS(block_assemble(tl, tr, bl, IntMatrix(2, 1)), std::invalid_argument);

    const PrimeField f(7);
    const ModMatrix x = ModMatrix::reduce(a, f);
    CHECK(lift(mat_mul(x, ModMatrix::reduce(IntMatrix::identity(4), f))) == lift(x));
    CHECK(scale(a, mpz_class(3))(1, 2) == a(1, 2) * 3);
}

TEST_CASE("CSV and JSON import/export round-trip, including big entries")
{
    IntMatrix m{{1, -2, 3}, {0, 40, -7}};
    m(1, 0) = mpz_class("123456789012345678901234567890");
    CHECK(to_csv(m) == "1,-2,3\n123456789012345678901234567890,40,-7\n");
    CHECK(from_csv(to_csv(m)) == m);
    CHECK(from_json(to_json(m)) == m);
    CHECK(from_json(R"({"rows":2,"cols":2,"entries":[[1,"2"],[3,4]]})") == IntMatrix{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(from_csv("1,2\n3\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_csv("1,x\n"), std::invalid_argument);
    CHECK_THROWS(from_json(R"({"rows":1,"cols":2,"entries":[[1]]})"));
}

TEST_CASE("primality")
{
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK(is_prime(kCertifyingPrime));
    CHECK(next_prime(24) == 29);
}
