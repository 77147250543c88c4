#include "gaborcert/lattice.hpp"
#include "gaborcert/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gaborcert {

namespace {

std::string literal_of(const QuadExpr& q) { return q.str(); }

Entry entry_of(QuadExpr q) {
  Entry e;
  e.literal = literal_of(q);
  e.exact = std::move(q);
  return e;
}

}  // namespace

Lattice::Lattice(int n, std::vector<Entry> entries_rowmajor)
    : n_(n), entries_(std::move(entries_rowmajor)) {
  if (n_ < 1) throw DimensionMismatch("Lattice: n must be >= 1");
  const std::size_t want = static_cast<std::size_t>(2 * n_) * (2 * n_);
  if (entries_.size() != want)
    throw DimensionMismatch("Lattice: need (2n)^2 = " + std::to_string(want) +
                            " entries, got " + std::to_string(entries_.size()));
  rational_ = std::all_of(entries_.begin(), entries_.end(),
                          [](const Entry& e) { return e.exact.is_rational(); });
}

Eigen::MatrixXd Lattice::gens_d() const {
  ScopedPrecision prec(64);
  Eigen::MatrixXd G(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      G(i, j) = entry(i, j).exact.value().convert_to<double>();
  return G;
}

MatReal Lattice::gens_mp() const {
  MatReal G(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) G(i, j) = entry(i, j).exact.value();
  return G;
}

MatRat Lattice::gens_q() const {
  if (!rational_) throw BadRange("Lattice: exact rational view of a surd lattice");
  MatRat G(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) G(i, j) = entry(i, j).exact.rational_value();
  return G;
}

Lattice make_lattice(int n, const Eigen::MatrixXd& gens) {
  if (gens.rows() != 2 * n || gens.cols() != 2 * n)
    throw DimensionMismatch("make_lattice: generator matrix must be 2n x 2n");
  std::vector<Entry> es;
  es.reserve(static_cast<std::size_t>(4) * n * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      es.push_back(entry_of(QuadExpr(Rational(gens(i, j)))));  // dyadic, exact
  return Lattice(n, std::move(es));
}

Lattice make_lattice(int n, const std::vector<std::string>& literals_rowmajor) {
  std::vector<Entry> es;
  es.reserve(literals_rowmajor.size());
  for (const auto& s : literals_rowmajor) {
    Entry e;
    e.exact = parse_entry_literal(s);
    e.literal = s;
    es.push_back(std::move(e));
  }
  return Lattice(n, std::move(es));
}

Lattice make_lattice_exact(int n, const std::vector<QuadExpr>& exact_rowmajor) {
  std::vector<Entry> es;
  es.reserve(exact_rowmajor.size());
  for (const auto& q : exact_rowmajor) es.push_back(entry_of(q));
  return Lattice(n, std::move(es));
}

Lattice read_lattice(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(raw);
  }
  if (lines.empty()) throw ParseError("lattice spec: empty input");

  // header: n = <int>
  {
    std::string h = lines[0];
    h.erase(std::remove_if(h.begin(), h.end(), [](unsigned char c) { return std::isspace(c); }),
            h.end());
    if (h.size() < 3 || h[0] != 'n' || h[1] != '=')
      throw ParseError("lattice spec: first line must be 'n = <int>'");
    lines[0] = h.substr(2);
  }
  int n = 0;
  try {
    n = std::stoi(lines[0]);
  } catch (const std::exception&) {
    throw ParseError("lattice spec: bad dimension '" + lines[0] + "'");
  }
  if (n < 1) throw ParseError("lattice spec: n must be >= 1");
  if (lines.size() != static_cast<std::size_t>(2 * n) + 1)
    throw ParseError("lattice spec: expected " + std::to_string(2 * n) +
                     " generator lines, got " + std::to_string(lines.size() - 1));

  std::vector<Entry> es(static_cast<std::size_t>(4) * n * n);
  for (int j = 0; j < 2 * n; ++j) {  // line j+1 = generator j
    std::istringstream ls(lines[j + 1]);
    std::string tok;
    int i = 0;
    while (ls >> tok) {
      if (i >= 2 * n) throw ParseError("lattice spec: too many entries on generator line");
      Entry e;
      e.exact = parse_entry_literal(tok);
      e.literal = tok;
      es[static_cast<std::size_t>(i) * 2 * n + j] = std::move(e);
      ++i;
    }
    if (i != 2 * n)
      throw ParseError("lattice spec: generator line needs " + std::to_string(2 * n) +
                       " entries");
  }
  return Lattice(n, std::move(es));
}

Lattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lattice spec file: " + path);
  return read_lattice(in);
}

void write_lattice(const Lattice& L, std::ostream& out) {
  out << "n = " << L.n() << "\n";
  for (int j = 0; j < L.dim(); ++j) {
    for (int i = 0; i < L.dim(); ++i)
      out << (i ? " " : "") << L.entry(i, j).literal;
    out << "\n";
  }
}

namespace {

// Determinant by cofactor expansion over the surd ring (no division there).
// Dimensions here are at most 8, so n! blowup is irrelevant.
QuadExpr det_ring(std::vector<QuadExpr>& a, int d) {
  if (d == 1) return a[0];
  QuadExpr det;
  std::vector<QuadExpr> minor((d - 1) * (d - 1));
  for (int c = 0; c < d; ++c) {
    if (!a[c].is_zero()) {
      for (int i = 1; i < d; ++i)
        for (int j = 0, mj = 0; j < d; ++j) {
          if (j == c) continue;
          minor[(i - 1) * (d - 1) + mj++] = a[i * d + j];
        }
      QuadExpr sub = det_ring(minor, d - 1) * a[c];
      det += (c % 2 == 0) ? sub : -sub;
    }
  }
  return det;
}

}  // namespace

QuadExpr covolume_exact(const Lattice& L) {
  std::vector<QuadExpr> a(static_cast<std::size_t>(L.dim()) * L.dim());
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) a[i * L.dim() + j] = L.entry(i, j).exact;
  QuadExpr det = det_ring(a, L.dim());
  // orient by the numeric sign; the magnitude is what callers use
  ScopedPrecision prec(128);
  return det.value() < 0 ? -det : det;
}

Real covolume(const Lattice& L) {
  MatReal G = L.gens_mp();
  Real det = G.determinant();
  return abs(det);
}

ComplexLattice complexify(const Lattice& L) {
  ComplexLattice Lc;
  Lc.n = L.n();
  Lc.entries.resize(static_cast<std::size_t>(Lc.n) * 2 * Lc.n);
  bool rational = true;
  for (int i = 0; i < Lc.n; ++i)
    for (int j = 0; j < 2 * Lc.n; ++j) {
      // z = x + i*xi: coordinate i of generator j
      const QuadExpr& xi = L.entry(i, j).exact;
      const QuadExpr& x = L.entry(Lc.n + i, j).exact;
      rational = rational && xi.is_rational() && x.is_rational();
      Lc.entries[static_cast<std::size_t>(i) * 2 * Lc.n + j] = Cx<QuadExpr>(x, xi);
    }
  Lc.rational = rational;
  return Lc;
}

Eigen::MatrixXcd ComplexLattice::gens_cd() const {
  ScopedPrecision prec(64);
  Eigen::MatrixXcd G(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      const auto& z = entry(i, j);
      G(i, j) = {z.re.value().convert_to<double>(), z.im.value().convert_to<double>()};
    }
  return G;
}

Cx<Real> ComplexLattice::entry_mp(int i, int j) const {
  const auto& z = entry(i, j);
  return {z.re.value(), z.im.value()};
}

namespace {

MatRat inverse_q(MatRat A) {
  const int d = static_cast<int>(A.rows());
  MatRat I = MatRat::Zero(d, d);
  for (int i = 0; i < d; ++i) I(i, i) = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && A(piv, col) == 0) ++piv;
    if (piv == d) throw SingularGenerators("symplectic_dual: singular generator matrix");
    A.row(col).swap(A.row(piv));
    I.row(col).swap(I.row(piv));
    Rational p = A(col, col);
    for (int j = 0; j < d; ++j) {
      A(col, j) /= p;
      I(col, j) /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || A(r, col) == 0) continue;
      Rational f = A(r, col);
      for (int j = 0; j < d; ++j) {
        A(r, j) -= f * A(col, j);
        I(r, j) -= f * I(col, j);
      }
    }
  }
  return I;
}

// Gauss-Jordan over the surd ring; pivots must be invertible inside the ring.
bool inverse_ring(std::vector<QuadExpr> A, int d, std::vector<QuadExpr>& out) {
  std::vector<QuadExpr> I(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) I[i * d + i] = QuadExpr(Rational(1));
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    std::optional<QuadExpr> pinv;
    for (int r = col; r < d; ++r) {
      if (A[r * d + col].is_zero()) continue;
      if ((pinv = try_inverse(A[r * d + col]))) { piv = r; break; }
    }
    if (piv < 0) return false;
    for (int j = 0; j < d; ++j) {
      std::swap(A[col * d + j], A[piv * d + j]);
      std::swap(I[col * d + j], I[piv * d + j]);
    }
    for (int j = 0; j < d; ++j) {
      A[col * d + j] *= *pinv;
      I[col * d + j] *= *pinv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || A[r * d + col].is_zero()) continue;
      QuadExpr f = A[r * d + col];
      for (int j = 0; j < d; ++j) {
        A[r * d + j] -= f * A[col * d + j];
        I[r * d + j] -= f * I[col * d + j];
      }
    }
  }
  out = std::move(I);
  return true;
}

}  // namespace

DualResult symplectic_dual(const Lattice& L) {
  const int d = L.dim(), n = L.n();
  // dual gens = J * gens^-T with J = [[0,I],[-I,0]]: the top block copies
  // rows n.. of gens^-T, the bottom block negates rows 0..; row i of gens^-T
  // is column i of inv(gens).
  if (L.rational()) {
    MatRat Minv = inverse_q(L.gens_q());  // M = gens; need gens^-T = Minv^T
    std::vector<Entry> es(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Rational v = (i < n) ? Minv(j, n + i) : -Minv(j, i - n);  // (J Minv^T)_{ij}
        es[static_cast<std::size_t>(i) * d + j] = entry_of(QuadExpr(v));
      }
    return {Lattice(n, std::move(es)), true};
  }

  std::vector<QuadExpr> A(static_cast<std::size_t>(d) * d), Ainv;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A[i * d + j] = L.entry(i, j).exact;
  if (inverse_ring(std::move(A), d, Ainv)) {
    std::vector<Entry> es(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // gens^-T entry (i,j) = Ainv(j,i)
        QuadExpr v = (i < n) ? Ainv[static_cast<std::size_t>(j) * d + (n + i)]
                             : -Ainv[static_cast<std::size_t>(j) * d + (i - n)];
        es[static_cast<std::size_t>(i) * d + j] = entry_of(std::move(v));
      }
    return {Lattice(n, std::move(es)), true};
  }

  // Fallback: dyadic approximation at the ambient precision.
  MatReal G = L.gens_mp();
  Eigen::FullPivLU<MatReal> lu(G);
  if (!lu.isInvertible())
    throw SingularGenerators("symplectic_dual: singular generator matrix");
  MatReal Minv = lu.inverse();
  std::vector<Entry> es(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Real v = (i < n) ? Minv(j, n + i) : -Minv(j, i - n);
      es[static_cast<std::size_t>(i) * d + j] =
          entry_of(QuadExpr(v.convert_to<Rational>()));
    }
  return {Lattice(n, std::move(es)), false};
}

std::vector<LatticePoint> enumerate_points(const Lattice& L, double R,
                                           std::size_t cap) {
  if (R < 0) throw BadRange("enumerate_points: negative radius");
  const int d = L.dim();
  Eigen::MatrixXd G = L.gens_d();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
  if (!lu.isInvertible())
    throw SingularGenerators("enumerate_points: singular generator matrix");
  Eigen::MatrixXd Ginv = lu.inverse();

  // coefficient box: |c_i| = |e_i^T G^-1 p| <= ||row_i(G^-1)|| R
  std::vector<long> lo(d), hi(d);
  double cells = 1;
  for (int i = 0; i < d; ++i) {
    double b = Ginv.row(i).norm() * R + 1e-9;
    lo[i] = static_cast<long>(std::floor(-b));
    hi[i] = static_cast<long>(std::floor(b));
    cells *= static_cast<double>(hi[i] - lo[i] + 1);
  }
  if (cells > 1e8)
    throw RadiusTooLarge("enumerate_points: search box of " + std::to_string(cells) +
                         " cells exceeds the hard limit");

  std::vector<LatticePoint> out;
  std::vector<long> c(lo);
  const double R2 = R * R * (1 + 1e-12) + 1e-12;
  while (true) {
    Eigen::VectorXd cv(d);
    for (int i = 0; i < d; ++i) cv[i] = static_cast<double>(c[i]);
    Eigen::VectorXd p = G * cv;
    if (double n2 = p.squaredNorm(); n2 <= R2) {
      if (out.size() == cap)
        throw RadiusTooLarge("enumerate_points: more than " + std::to_string(cap) +
                             " points in radius " + std::to_string(R));
      out.push_back({std::move(p), c, std::sqrt(n2)});
    }
    int i = d - 1;
    while (i >= 0 && c[i] == hi[i]) {
      c[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end(), [](const LatticePoint& a, const LatticePoint& b) {
    if (std::abs(a.norm - b.norm) > 1e-9) return a.norm < b.norm;
    return a.coeff < b.coeff;
  });
  return out;
}

std::vector<ComplexLatticePoint> enumerate_points(const ComplexLattice& Lc,
                                                  double R, std::size_t cap) {
  // realify: same lattice viewed in R^{2n}, |z| is the Euclidean norm there
  const int n = Lc.n;
  Eigen::MatrixXcd Gc = Lc.gens_cd();
  Eigen::MatrixXd Gr(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      Gr(i, j) = Gc(i, j).real();
      Gr(n + i, j) = Gc(i, j).imag();
    }
  auto pts = enumerate_points(make_lattice(n, Gr), R, cap);
  std::vector<ComplexLatticePoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    Eigen::VectorXcd z(n);
    for (int i = 0; i < n; ++i) z[i] = {p.x[i], p.x[n + i]};
    out.push_back({std::move(z), std::move(p.coeff), p.norm});
  }
  return out;
}

}  // namespace gaborcert
