#include <doctest.h>

#include "helpers.hpp"
#include "lefschetz/monomials.hpp"

using namespace lefschetz;

namespace {

Monomial sq(std::size_t n, std::initializer_list<std::size_t> one_based)
{
    std::vector<std::size_t> vars;
    for (auto v : one_based)
        vars.push_back(v - 1);
    return Monomial::from_variables(n, vars);
}

}  // namespace

TEST_CASE("revlex orders the degree-2 basis as x1x2 > x1x3 > x2x3")
{
    CHECK(revlex_compare(sq(4, {1, 2}), sq(4, {1, 3})) > 0);
    CHECK(revlex_compare(sq(4, {1, 3}), sq(4, {2, 3})) > 0);
    CHECK(revlex_compare(sq(4, {2, 3}), sq(4, {1, 4})) > 0);
    const Monomial u = sq(5, {2, 4});
    CHECK(revlex_compare(u, u) == 0);
    CHECK_THROWS_AS(revlex_compare(Monomial(3), Monomial(4)), std::invalid_argument);
}

TEST_CASE("sorting degree-3 square-free monomials in 5 variables matches the oracle")
{
    auto all = enumerate_squarefree(5, 3);
    std::reverse(all.begin(), all.end());
    std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) { return revlex_compare(a, b) > 0; });
    const auto expected = oracle::squarefree_sorted(5, 3);
    REQUIRE(all.size() == 10);
    for (std::size_t k = 0; k < all.size(); ++k)
        CHECK(testing::exps(all[k]) == expected[k]);
}

TEST_CASE("enumerate_squarefree reproduces the listed bases")
{
    const auto b2 = enumerate_squarefree(4, 2);
    const std::vector<Monomial> expected{sq(4, {1, 2}), sq(4, {1, 3}), sq(4, {2, 3}),
                                         sq(4, {1, 4}), sq(4, {2, 4}), sq(4, {3, 4})};
    CHECK(b2 == expected);

    // Degree 3 listing: x1x2x3, x1x2x4, x1x3x4, ..., x1x2xn, ...
    const auto b3 = enumerate_squarefree(6, 3);
    CHECK(b3[0] == sq(6, {1, 2, 3}));
    CHECK(b3[1] == sq(6, {1, 2, 4}));
    CHECK(b3[2] == sq(6, {1, 3, 4}));
    CHECK(b3[binomial(5, 3) - 1] == sq(6, {3, 4, 5}));  // x_{n-3}x_{n-2}x_{n-1}
    CHECK(b3[binomial(5, 3)] == sq(6, {1, 2, 6}));      // x1x2xn

    const auto b0 = enumerate_squarefree(7, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == Monomial(7));
    CHECK(enumerate_squarefree(3, 4).empty());
}

TEST_CASE("enumerate_squarefree(6, 3) equals brute-force generation and sort")
{
    const auto got = enumerate_squarefree(6, 3);
    const auto expected = oracle::squarefree_sorted(6, 3);
    REQUIRE(got.size() == 20);
    for (std::size_t k = 0; k < got.size(); ++k)
        CHECK(testing::exps(got[k]) == expected[k]);
}

TEST_CASE("basis sizes are binomial and strictly decreasing in revlex")
{
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned t = 0; t <= n; ++t) {
            const auto b = enumerate_squarefree(n, t);
            REQUIRE(b.size() == binomial(n, t));
            for (std::size_t k = 1; k < b.size(); ++k)
                REQUIRE(revlex_compare(b[k - 1], b[k]) > 0);
            if (t > 0)
                REQUIRE(b.front().degree() == t);
        }
}

TEST_CASE("rank and unrank are mutually inverse and agree with enumeration")
{
    CHECK(squarefree_rank(sq(4, {1, 2})).position == 0);
    CHECK(squarefree_unrank(4, 2, 3) == sq(4, {1, 4}));
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned t = 0; t <= n; ++t) {
            const auto b = enumerate_squarefree(n, t);
            for (std::size_t pos = 0; pos < b.size(); ++pos) {
                const BasisIndex bi = squarefree_rank(b[pos]);
                REQUIRE(bi.degree == t);
                REQUIRE(bi.position == pos);
                REQUIRE(squarefree_unrank(n, t, pos) == b[pos]);
            }
        }
    CHECK_THROWS_AS(squarefree_rank(Monomial(std::vector<Exponent>{2, 0})), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_unrank(4, 2, 6), std::out_of_range);
}

TEST_CASE("basis in n variables splits into the n-1 basis followed by x_n multiples")
{
    for (unsigned n = 1; n <= 9; ++n)
        for (unsigned t = 1; t <= n; ++t) {
            std::vector<Monomial> expected;
            auto extend = [n](const Monomial& m, Exponent last) {
                std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
                e.push_back(last);
                return Monomial(e);
            };
            for (const auto& m : enumerate_squarefree(n - 1, t))
                expected.push_back(extend(m, 0));
            for (const auto& m : enumerate_squarefree(n - 1, t - 1))
                expected.push_back(extend(m, 1));
            REQUIRE(enumerate_squarefree(n, t) == expected);
        }
}

TEST_CASE("monomial rendering and arithmetic")
{
    CHECK(sq(4, {1, 3}).to_string() == "x1*x3");
    CHECK(Monomial(3).to_string() == "1");
    CHECK(Monomial(std::vector<Exponent>{2, 0, 1}).to_string() == "x1^2*x3");
    CHECK((sq(3, {1}) * sq(3, {1, 2})) == Monomial(std::vector<Exponent>{2, 1, 0}));
    CHECK(Monomial(std::vector<Exponent>{2, 0, 1}).degree() == 3);
    CHECK_THROWS_AS(Monomial::from_variables(3, std::vector<std::size_t>{0, 0}), std::invalid_argument);
}
