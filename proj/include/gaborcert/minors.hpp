#pragma once

// Minor tables of a complexified lattice.  For generators e_1..e_{2n} in C^n,
// a degree 0 < k < n, and ascending coordinate tuples P (plain columns) and Q
// (conjugated columns) with |P| + |Q| = 2k, |P| > |Q| >= 0, the table maps
// each ascending 2k-tuple i of generator indices to
//
//   C^i_{P,Q} = det ( e_{i_r, P_1} ... e_{i_r, P_p}  conj e_{i_r, Q_1} ... )_r
//
// with rows in ascending i order.  The torus C^n / Gamma has no proper
// positive-dimensional analytic subvariety exactly when, for every k, no
// nonzero integer vector annihilates all degree-k tables at once; the
// transcendence layer runs that search on these values.

#include "gaborcert/indices.hpp"
#include "gaborcert/lattice.hpp"
#include "gaborcert/relation.hpp"
#include "gaborcert/surd.hpp"

#include <vector>

namespace gaborcert {

// I_k: ascending 2k-tuples from {0,...,2n-1} (the shared row-index set of
// every degree-k table), lexicographic.  Throws BadRange unless 0 < k < n.
std::vector<std::vector<int>> homology_indices(int n, int k);

// Admissible (P,Q) for degree k: ascending tuples from {0,...,n-1} with
// |P| + |Q| = 2k and |P| > |Q| >= 0.  Ordered by |Q| ascending (the
// conjugation-free forms come first; those are the generically independent
// ones), then lexicographically.
struct FormIndex {
  std::vector<int> P, Q;
};
std::vector<FormIndex> form_indices(int n, int k);

struct MinorTable {
  int n = 0;
  int k = 0;
  std::vector<int> P, Q;
  std::vector<std::vector<int>> index_set;  // = homology_indices(n, k)
  std::vector<Cx<QuadExpr>> exact;          // C^i_{P,Q} per index tuple
  bool rational = false;                    // all values Gaussian-rational

  std::vector<CxRat> rational_values() const;  // throws BadRange if !rational
  ValueVector values() const;                                    // ambient precision
};

// One table.  Entries live in the surd ring, so the determinants are expanded
// exactly there (no pivoting, no precision loss); numeric views round the
// exact values.  Throws BadIndex for a malformed (P,Q).
MinorTable minor_table(const ComplexLattice& Lc, int k, std::vector<int> P,
                       std::vector<int> Q);

// All tables of degree k, in form_indices order.
std::vector<MinorTable> minor_tables(const ComplexLattice& Lc, int k);

// Determinant of an m x m row-major matrix over a commutative ring (any T
// with default-zero, +=, -=, *): Laplace expansion along the last row,
// memoized over column subsets, O(2^m m) ring products.  Exact for exact T.
template <typename T>
T det_laplace(const std::vector<T>& a, int m) {
  if (m == 0) return T(1);
  std::vector<T> d(std::size_t(1) << m);
  d[0] = T(1);
  for (std::uint32_t mask = 1; mask < d.size(); ++mask) {
    int r = __builtin_popcount(mask);  // minor of rows 0..r-1, columns = mask
    T acc{};
    int t = 0;
    for (int j = 0; j < m; ++j) {
      if (!(mask & (1u << j))) continue;
      T term = a[std::size_t(r - 1) * m + j] * d[mask & ~(1u << j)];
      if (((r - 1) + t) % 2 == 0)
        acc += term;
      else
        acc -= term;
      ++t;
    }
    d[mask] = std::move(acc);
  }
  return d[d.size() - 1];
}

}  // namespace gaborcert
