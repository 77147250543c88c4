#include "gaborcert/lll.hpp"
#include "gaborcert/errors.hpp"

namespace gaborcert {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt round_div(const BigInt& a, const BigInt& b) {
  return floor_div(2 * a + b, 2 * b);
}

LLLResult lll_reduce(std::vector<IntRow> rows, const Rational& delta) {
  const int m = static_cast<int>(rows.size());
  if (m == 0) return {{}, {}, Rational(0)};
  const std::size_t dim = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != dim) throw DimensionMismatch("lll_reduce: ragged rows");

  auto dot = [&](int i, int j) {
    BigInt s = 0;
    for (std::size_t t = 0; t < dim; ++t) s += rows[i][t] * rows[j][t];
    return s;
  };

  // integral Gram-Schmidt bookkeeping: d[i] = det Gram(b_1..b_i), d[0] = 1,
  // lam[i][j] = d[j] * mu_{ij}; all updates below are exact divisions
  std::vector<BigInt> d(m + 1);
  std::vector<std::vector<BigInt>> lam(m + 1, std::vector<BigInt>(m + 1));
  d[0] = 1;
  auto init_row = [&](int i) {
    for (int j = 1; j <= i; ++j) {
      BigInt u = dot(i - 1, j - 1);
      for (int k = 1; k < j; ++k) u = (d[k] * u - lam[i][k] * lam[j][k]) / d[k - 1];
      if (j < i) lam[i][j] = u;
      else d[i] = u;
    }
    if (d[i] <= 0)
      throw PrecisionLoss("lll_reduce: rows not linearly independent");
  };
  for (int i = 1; i <= m; ++i) init_row(i);

  auto redi = [&](int k, int l) {
    if (2 * abs(lam[k][l]) <= d[l]) return;
    BigInt q = round_div(lam[k][l], d[l]);
    for (std::size_t t = 0; t < dim; ++t) rows[k - 1][t] -= q * rows[l - 1][t];
    lam[k][l] -= q * d[l];
    for (int j = 1; j < l; ++j) lam[k][j] -= q * lam[l][j];
  };

  auto swapi = [&](int k) {
    std::swap(rows[k - 1], rows[k - 2]);
    for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    BigInt lam_k = lam[k][k - 1];
    BigInt bnew = (d[k - 2] * d[k] + lam_k * lam_k) / d[k - 1];
    for (int i = k + 1; i <= m; ++i) {
      BigInt t = lam[i][k - 1];
      lam[i][k - 1] = (lam_k * t + lam[i][k] * d[k - 2]) / d[k - 1];
      lam[i][k] = (bnew * t - lam[i][k - 1] * lam_k) / d[k - 2];
    }
    d[k - 1] = bnew;
  };

  const BigInt dn = numerator(delta), dd = denominator(delta);
  int k = 2;
  while (k <= m) {
    redi(k, k - 1);
    // Lovasz: swap when d_k d_{k-2} < delta d_{k-1}^2 - lam^2
    if (dd * d[k] * d[k - 2] < dn * d[k - 1] * d[k - 1] - dd * lam[k][k - 1] * lam[k][k - 1]) {
      swapi(k);
      k = std::max(2, k - 1);
    } else {
      for (int l = k - 2; l >= 1; --l) redi(k, l);
      ++k;
    }
  }

  LLLResult res;
  res.basis = std::move(rows);
  res.gs_norm2.resize(m);
  for (int i = 1; i <= m; ++i) res.gs_norm2[i - 1] = Rational(d[i], d[i - 1]);
  res.min_gs_norm2 = *std::min_element(res.gs_norm2.begin(), res.gs_norm2.end());
  return res;
}

}  // namespace gaborcert
