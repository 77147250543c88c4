#pragma once

// Multi-index bookkeeping: graded enumeration of {alpha : |alpha| <= s},
// factorial/binomial helpers, and lexicographic k-subsets (the index sets
// behind the minor tables).

#include "gaborcert/numeric.hpp"
#include "gaborcert/errors.hpp"

#include <vector>

namespace gaborcert {

using MultiIndex = std::vector<int>;

inline int abs_sum(const MultiIndex& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

// componentwise alpha <= beta
inline bool leq(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline BigInt factorial(int m) {
  BigInt f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

inline BigInt multi_factorial(const MultiIndex& a) {
  BigInt f = 1;
  for (int v : a) f *= factorial(v);
  return f;
}

inline BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

inline BigInt multi_binom(const MultiIndex& a, const MultiIndex& g) {
  BigInt b = 1;
  for (std::size_t i = 0; i < a.size(); ++i) b *= binom(a[i], g[i]);
  return b;
}

// falling factorial beta!/(beta-gamma)!, gamma <= beta componentwise
inline BigInt falling_factorial(const MultiIndex& b, const MultiIndex& g) {
  BigInt f = 1;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int j = 0; j < g[i]; ++j) f *= (b[i] - j);
  return f;
}

// All alpha in N^n with |alpha| <= s, ordered by total degree, then by first
// coordinate descending (the natural recursion order); deterministic.
inline std::vector<MultiIndex> multiindices_upto(int n, int s) {
  if (n < 1 || s < 0) throw BadRange("multiindices_upto: need n >= 1, s >= 0");
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  for (int d = 0; d <= s; ++d) rec(rec, 0, d);
  return out;
}

inline BigInt count_multiindices(int n, int s) { return binom(n + s, n); }

// k-element subsets of {0,...,N-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int N, int k) {
  if (k < 0 || k > N) throw BadIndex("subsets: k out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == N - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace gaborcert
