#include "gaborcert/minors.hpp"
#include "gaborcert/errors.hpp"

#include <sstream>

namespace gaborcert {

std::vector<std::vector<int>> homology_indices(int n, int k) {
  if (n < 1) throw BadRange("homology_indices: need n >= 1");
  if (k <= 0 || k >= n) {
    std::ostringstream os;
    os << "homology_indices: no degree " << k << " for n = " << n
       << " (need 0 < k < n)";
    throw BadRange(os.str());
  }
  return subsets(2 * n, 2 * k);
}

std::vector<FormIndex> form_indices(int n, int k) {
  homology_indices(n, k);  // validates n, k
  std::vector<FormIndex> out;
  for (int q = 0; q < k; ++q) {
    int p = 2 * k - q;
    if (p > n) continue;
    for (const auto& P : subsets(n, p))
      for (const auto& Q : subsets(n, q)) out.push_back({P, Q});
  }
  return out;
}

namespace {

void check_form(int n, int k, const std::vector<int>& P,
                const std::vector<int>& Q) {
  auto check_tuple = [&](const std::vector<int>& t, const char* name) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 0 || t[i] >= n)
        throw BadIndex(std::string("minor_table: ") + name +
                       " entry out of range");
      if (i > 0 && t[i] <= t[i - 1])
        throw BadIndex(std::string("minor_table: ") + name +
                       " must be strictly ascending");
    }
  };
  check_tuple(P, "P");
  check_tuple(Q, "Q");
  if (static_cast<int>(P.size() + Q.size()) != 2 * k)
    throw BadIndex("minor_table: |P| + |Q| must equal 2k");
  if (P.size() <= Q.size())
    throw BadIndex("minor_table: need |P| > |Q|");
}

}  // namespace

std::vector<CxRat> MinorTable::rational_values() const {
  if (!rational)
    throw BadRange("MinorTable: values are not Gaussian-rational");
  std::vector<CxRat> out;
  out.reserve(exact.size());
  for (const auto& v : exact)
    out.push_back({v.re.rational_value(), v.im.rational_value()});
  return out;
}

ValueVector MinorTable::values() const {
  ValueVector out;
  out.reserve(exact.size());
  for (const auto& v : exact) out.push_back({v.re.value(), v.im.value()});
  return out;
}

MinorTable minor_table(const ComplexLattice& Lc, int k, std::vector<int> P,
                       std::vector<int> Q) {
  MinorTable tab;
  tab.n = Lc.n;
  tab.k = k;
  tab.index_set = homology_indices(Lc.n, k);
  check_form(Lc.n, k, P, Q);
  tab.P = std::move(P);
  tab.Q = std::move(Q);

  const int m = 2 * k;
  const int p = static_cast<int>(tab.P.size());
  std::vector<Cx<QuadExpr>> rowmajor(std::size_t(m) * m);
  tab.exact.reserve(tab.index_set.size());
  tab.rational = true;
  for (const auto& gens : tab.index_set) {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < p; ++c)
        rowmajor[std::size_t(r) * m + c] = Lc.entry(tab.P[c], gens[r]);
      for (int c = p; c < m; ++c)
        rowmajor[std::size_t(r) * m + c] =
            conj(Lc.entry(tab.Q[c - p], gens[r]));
    }
    Cx<QuadExpr> d = det_laplace(rowmajor, m);
    tab.rational = tab.rational && d.re.is_rational() && d.im.is_rational();
    tab.exact.push_back(std::move(d));
  }
  return tab;
}

std::vector<MinorTable> minor_tables(const ComplexLattice& Lc, int k) {
  std::vector<MinorTable> out;
  for (const auto& f : form_indices(Lc.n, k))
    out.push_back(minor_table(Lc, k, f.P, f.Q));
  return out;
}

}  // namespace gaborcert
