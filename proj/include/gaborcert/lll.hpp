#pragma once

// Lattice basis reduction with exact integer arithmetic (the lambda/d
// integral LLL of de Weger / Cohen Alg. 2.6.3).  Exactness matters: the
// no-relation certificates are lower bounds min_i |b*_i|^2 on Gram-Schmidt
// norms, read off the reduced basis as exact rationals d_i / d_{i-1}.

#include "gaborcert/numeric.hpp"

#include <vector>

namespace gaborcert {

using IntRow = std::vector<BigInt>;

struct LLLResult {
  std::vector<IntRow> basis;       // reduced basis, one vector per row
  std::vector<Rational> gs_norm2;  // exact squared Gram-Schmidt norms
  Rational min_gs_norm2;           // the certificate quantity
};

// rows must be linearly independent; delta defaults to 3/4.
LLLResult lll_reduce(std::vector<IntRow> rows,
                     const Rational& delta = Rational(3, 4));

// floor division (cpp_int operator/ truncates toward zero)
BigInt floor_div(const BigInt& a, const BigInt& b);
// nearest integer to a/b, b > 0, ties toward +infinity
BigInt round_div(const BigInt& a, const BigInt& b);

}  // namespace gaborcert
