#include "gaborcert/relation.hpp"
#include "gaborcert/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gaborcert {

const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::RelationFound: return "RelationFound";
    case RelationKind::NoRelationUpToHeight: return "NoRelationUpToHeight";
    case RelationKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// gcd of absolute values
BigInt content(const std::vector<BigInt>& a) {
  BigInt g = 0;
  for (const auto& x : a) g = gcd(g, BigInt(abs(x)));
  return g;
}

void normalize(std::vector<BigInt>& a) {
  BigInt g = content(a);
  if (g > 1)
    for (auto& x : a) x /= g;
  for (const auto& x : a) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : a) y = -y;
    break;
  }
}

BigInt sup_norm(const std::vector<BigInt>& a) {
  BigInt m = 0;
  for (const auto& x : a) m = std::max(m, BigInt(abs(x)));
  return m;
}

Real residual_at(const std::vector<ValueVector>& tables,
                 const std::vector<BigInt>& a) {
  Real worst(0);
  for (const auto& tab : tables) {
    Cx<Real> s{Real(0), Real(0)};
    for (std::size_t i = 0; i < tab.size(); ++i) {
      Real c(a[i]);
      s += Cx<Real>(tab[i].re * c, tab[i].im * c);
    }
    worst = std::max(worst, abs_cx(s));
  }
  return worst;
}

Real table_scale(const std::vector<ValueVector>& tables) {
  Real m(0);
  for (const auto& tab : tables)
    for (const auto& v : tab) m = std::max(m, abs_cx(v));
  return m;
}

double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace

RelationVerdict exact_relation(const std::vector<std::vector<CxRat>>& tables) {
  if (tables.empty() || tables[0].empty())
    throw DimensionMismatch("exact_relation: empty input");
  const std::size_t m = tables[0].size();
  for (const auto& t : tables)
    if (t.size() != m) throw DimensionMismatch("exact_relation: ragged tables");

  // stack real and imaginary parts: rows of the constraint matrix over Q
  std::vector<std::vector<Rational>> rows;
  for (const auto& t : tables) {
    std::vector<Rational> re(m), im(m);
    for (std::size_t i = 0; i < m; ++i) {
      re[i] = t[i].re;
      im[i] = t[i].im;
    }
    rows.push_back(std::move(re));
    rows.push_back(std::move(im));
  }

  // row-reduce; record pivot columns
  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Rational p = rows[rank][col];
    for (std::size_t j = col; j < m; ++j) rows[rank][j] /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t j = col; j < m; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_of_row.push_back(static_cast<int>(col));
    ++rank;
  }

  RelationVerdict v;
  v.precision_bits = 0;
  v.complete = true;
  if (rank == m) {
    v.kind = RelationKind::NoRelationUpToHeight;
    v.height = 0;
    v.residual_floor = 0;
    v.note = "kernel over Q is trivial: no integer relation exists at any height";
    return v;
  }

  // kernel basis from the free columns, denominators cleared
  std::vector<bool> is_pivot(m, false);
  for (int c : pivot_of_row) is_pivot[c] = true;
  std::vector<IntRow> kernel;
  for (std::size_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> k(m, Rational(0));
    k[free] = 1;
    for (std::size_t r = 0; r < rank; ++r)
      k[pivot_of_row[r]] = -rows[r][free];
    BigInt l = 1;
    for (const auto& q : k) l = lcm(l, denominator(q));
    IntRow ik(m);
    for (std::size_t i = 0; i < m; ++i)
      ik[i] = numerator(k[i]) * (l / denominator(k[i]));
    kernel.push_back(std::move(ik));
  }

  // present a short representative
  auto red = lll_reduce(kernel);
  std::size_t best = 0;
  auto n2 = [](const IntRow& r) {
    BigInt s = 0;
    for (const auto& x : r) s += x * x;
    return s;
  };
  for (std::size_t i = 1; i < red.basis.size(); ++i)
    if (n2(red.basis[i]) < n2(red.basis[best])) best = i;
  std::vector<BigInt> a = red.basis[best];
  normalize(a);

  // exact substitution check
  for (const auto& t : tables) {
    CxRat s;
    for (std::size_t i = 0; i < m; ++i) s += t[i] * CxRat(Rational(a[i]));
    if (!is_zero(s)) throw PrecisionLoss("exact_relation: kernel vector fails substitution");
  }

  v.kind = RelationKind::RelationFound;
  v.relation = std::move(a);
  v.residual = 0;
  v.height = sup_norm(v.relation);
  std::ostringstream note;
  note << "exact kernel of dimension " << (m - rank) << " over Q; residual is exactly 0";
  v.note = note.str();
  return v;
}

RelationVerdict simultaneous_relation(const std::vector<ValueVector>& tables,
                                      const RelationOptions& opt) {
  if (tables.empty() || tables[0].empty())
    throw DimensionMismatch("simultaneous_relation: empty input");
  const std::size_t m = tables[0].size();
  for (const auto& t : tables)
    if (t.size() != m)
      throw DimensionMismatch("simultaneous_relation: ragged tables");
  if (opt.height <= 0) throw BadRange("simultaneous_relation: height must be positive");

  const unsigned p = opt.precision_bits;
  const std::size_t T = tables.size();
  ScopedPrecision prec(p);

  // embed: rows (e_i | round(2^p Re v_i^t), round(2^p Im v_i^t))_t
  std::vector<IntRow> rows(m, IntRow(m + 2 * T, BigInt(0)));
  for (std::size_t i = 0; i < m; ++i) {
    rows[i][i] = 1;
    for (std::size_t t = 0; t < T; ++t) {
      Real sr = ldexp(tables[t][i].re, static_cast<int>(p));
      Real si = ldexp(tables[t][i].im, static_cast<int>(p));
      rows[i][m + 2 * t] = round_to_bigint(sr);
      rows[i][m + 2 * t + 1] = round_to_bigint(si);
    }
  }
  auto red = lll_reduce(rows);

  // candidate scan: coefficient block of each reduced vector
  struct Candidate {
    std::vector<BigInt> a;
    BigInt sup;
  };
  std::vector<Candidate> cands;
  for (const auto& b : red.basis) {
    std::vector<BigInt> a(b.begin(), b.begin() + m);
    if (std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x == 0; }))
      continue;
    normalize(a);
    BigInt s = sup_norm(a);
    if (s <= opt.height) cands.push_back({std::move(a), std::move(s)});
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.sup != y.sup) return x.sup < y.sup;
    return x.a < y.a;
  });

  RelationVerdict v;
  v.precision_bits = p;
  v.height = opt.height;

  std::string reject_note;
  for (const auto& c : cands) {
    Real r1 = residual_at(tables, c.a);
    if (opt.reevaluate) {
      // confirm at doubled precision: a true relation's residual collapses
      // with the working precision, a near-relation's stalls
      ScopedPrecision confirm(2 * p);
      auto tables2 = opt.reevaluate(2 * p);
      Real r2 = residual_at(tables2, c.a);
      Real eps = ldexp(Real(1), -static_cast<int>(2 * p / 3));
      Real bound = eps * table_scale(tables2) * std::max(Real(1), Real(c.sup));
      bool small_enough = r2 <= bound;
      bool shrank = r2 <= r1 * ldexp(Real(1), -static_cast<int>(p / 2)) ||
                    r2 <= table_scale(tables2) * ldexp(Real(1), -static_cast<int>(3 * p / 2));
      if (small_enough && shrank) {
        v.kind = RelationKind::RelationFound;
        v.relation = c.a;
        v.residual = to_double(r2);
        v.note = "confirmed at doubled precision (" + std::to_string(2 * p) + " bits)";
        return v;
      }
      if (reject_note.empty()) {
        std::ostringstream os;
        os << "candidate rejected: residual " << r1 << " at " << p << " bits vs "
           << r2 << " at " << 2 * p << " bits";
        reject_note = os.str();
      }
    } else {
      // no re-evaluator: only an exactly-satisfied relation of the given
      // (dyadic) values can be confirmed
      std::vector<std::vector<CxRat>> exact_tabs(T);
      for (std::size_t t = 0; t < T; ++t)
        for (const auto& z : tables[t])
          exact_tabs[t].push_back(
              {z.re.convert_to<Rational>(), z.im.convert_to<Rational>()});
      CxRat zero;
      bool exact = true;
      for (std::size_t t = 0; t < T && exact; ++t) {
        CxRat s;
        for (std::size_t i = 0; i < m; ++i)
          s += exact_tabs[t][i] * CxRat(Rational(c.a[i]));
        exact = is_zero(s);
      }
      if (exact) {
        v.kind = RelationKind::RelationFound;
        v.relation = c.a;
        v.residual = 0;
        v.complete = true;
        v.note = "relation holds exactly for the given dyadic values";
        return v;
      }
      if (reject_note.empty()) {
        std::ostringstream os;
        os << "candidate with residual " << r1
           << " cannot be confirmed without a re-evaluator";
        reject_note = os.str();
      }
    }
  }

  // no confirmed relation: try the exact certificate
  // W(H) = m H^2 + T (m H / 2)^2 * 2 bounds the embedded norm^2 of any
  // exact relation with |a|_inf <= H (identity block + rounding slack)
  Rational H{opt.height};
  Rational W = Rational(m) * H * H +
               Rational(static_cast<long>(T) * static_cast<long>(m * m)) * H * H / 2;
  std::ostringstream cert;
  cert << "min |b*|^2 = " << red.min_gs_norm2.convert_to<double>()
       << ", exclusion needs > " << W.convert_to<double>();
  if (red.min_gs_norm2 > W) {
    v.kind = RelationKind::NoRelationUpToHeight;
    // any |a|_inf <= H forces max_t |sum a_i v_i^t| >= floor:
    // sqrt((min|b*|^2 - m H^2) / (2T)) - mH/2, rescaled by 2^-p
    Real lam = sqrt(to_real(red.min_gs_norm2 - Rational(m) * H * H) / Real(2 * T));
    Real fl = ldexp(lam - Real(m) * to_real(H) / 2, -static_cast<int>(p));
    v.residual_floor = to_double(fl);
    v.note = cert.str();
    return v;
  }

  v.kind = RelationKind::Inconclusive;
  v.note = "LLL gap test inconclusive at " + std::to_string(p) + " bits (" +
           cert.str() + ")" + (reject_note.empty() ? "" : "; " + reject_note);
  return v;
}

}  // namespace gaborcert
