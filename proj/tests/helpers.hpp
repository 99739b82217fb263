#pragma once

#include <vector>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/monomials.hpp"
#include "oracles.hpp"

namespace testing {

inline std::vector<std::vector<mpz_class>> nested(const lefschetz::IntMatrix& m)
{
    std::vector<std::vector<mpz_class>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        out[r].assign(m.row(r).begin(), m.row(r).end());
    return out;
}

inline oracle::Exps exps(const lefschetz::Monomial& m)
{
    return oracle::Exps(m.exponents().begin(), m.exponents().end());
}

inline lefschetz::Monomial mono(const oracle::Exps& e)
{
    return lefschetz::Monomial(std::vector<lefschetz::Exponent>(e.begin(), e.end()));
}

}  // namespace testing
