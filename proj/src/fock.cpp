#include "gaborcert/fock.hpp"

#include "gaborcert/errors.hpp"
#include "gaborcert/rng.hpp"

#include <algorithm>
#include <cmath>

namespace gaborcert {

namespace {

Cplx powi(Cplx z, int m) {
  Cplx p(1.0, 0.0);
  for (int i = 0; i < m; ++i) p *= z;
  return p;
}

// All gamma with 0 <= gamma <= bound componentwise.
std::vector<MultiIndex> boxed_indices(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  MultiIndex cur(bound.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == bound.size()) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= bound[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

MultiIndex min_index(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::min(a[i], b[i]);
  return m;
}

double dfac(const MultiIndex& a) {
  return static_cast<double>(multi_factorial(a));
}

}  // namespace

HermiteCoeffs::HermiteCoeffs(int n, int cap)
    : n_(n), cap_(cap), idx_(multiindices_upto(n, cap)) {
  for (int i = 0; i < static_cast<int>(idx_.size()); ++i) pos_[idx_[i]] = i;
  c_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(idx_.size()));
}

Cplx& HermiteCoeffs::coeff(const MultiIndex& alpha) {
  if (static_cast<int>(alpha.size()) != n_)
    throw DimensionMismatch("HermiteCoeffs: dim alpha != n");
  auto it = pos_.find(alpha);
  if (it == pos_.end())
    throw DegreeOverflow("HermiteCoeffs: index beyond degree cap");
  return c_[it->second];
}

Cplx HermiteCoeffs::coeff(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != n_)
    throw DimensionMismatch("HermiteCoeffs: dim alpha != n");
  auto it = pos_.find(alpha);
  return it == pos_.end() ? Cplx(0.0, 0.0) : Cplx(c_[it->second]);
}

Cplx HermiteCoeffs::eval(const Eigen::VectorXd& t) const {
  if (t.size() != n_) throw DimensionMismatch("HermiteCoeffs: dim t != n");
  // Shared 1-D table: h_m(t_j) for all m <= cap.
  std::vector<double> table(static_cast<std::size_t>(cap_ + 1) * n_);
  for (int j = 0; j < n_; ++j)
    for (int m = 0; m <= cap_; ++m)
      table[static_cast<std::size_t>(m) * n_ + j] = hermite_eval(m, t[j]);
  Cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (c_[static_cast<Eigen::Index>(i)] == Cplx(0.0, 0.0)) continue;
    double prod = 1.0;
    for (int j = 0; j < n_; ++j)
      prod *= table[static_cast<std::size_t>(idx_[i][j]) * n_ + j];
    sum += c_[static_cast<Eigen::Index>(i)] * prod;
  }
  return sum;
}

int FockPoly::degree() const {
  int d = 0;
  for (const auto& [beta, c] : terms) d = std::max(d, abs_sum(beta));
  return d;
}

Cplx FockPoly::eval(const Eigen::VectorXcd& z) const {
  if (z.size() != n) throw DimensionMismatch("FockPoly: dim z != n");
  Cplx sum(0.0, 0.0);
  for (const auto& [beta, c] : terms) {
    Cplx m = c;
    for (int j = 0; j < n; ++j) m *= powi(z[j], beta[j]);
    sum += m;
  }
  return sum;
}

Cplx ZZbarPoly::eval(const Eigen::VectorXcd& z) const {
  if (z.size() != n) throw DimensionMismatch("ZZbarPoly: dim z != n");
  Cplx sum(0.0, 0.0);
  for (const auto& [key, c] : terms) {
    Cplx m = c;
    for (int j = 0; j < n; ++j) {
      m *= powi(z[j], key.first[j]);
      m *= powi(std::conj(z[j]), key.second[j]);
    }
    sum += m;
  }
  return sum;
}

FockPoly bargmann(const HermiteCoeffs& f) {
  FockPoly F;
  F.n = f.n();
  F.k = 1.0;
  const auto& idx = f.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    Cplx c = f.raw()[static_cast<Eigen::Index>(i)];
    if (c == Cplx(0.0, 0.0)) continue;
    double scale = std::pow(M_PI, abs_sum(idx[i]) / 2.0) /
                   std::sqrt(dfac(idx[i]));
    F.terms[idx[i]] = c * scale;
  }
  return F;
}

ShiftedFock fock_shift(const Eigen::VectorXcd& z, const FockPoly& F,
                       int cap) {
  if (z.size() != F.n) throw DimensionMismatch("fock_shift: dim z != n");
  if (F.k != 1.0)
    throw BadRange("fock_shift: defined on the k = 1 Fock space");
  if (cap < F.degree())
    throw DegreeOverflow("fock_shift: cap below the input degree");

  // G(zeta) = F(zeta + conj z), exact binomial expansion.
  std::map<MultiIndex, Cplx> G;
  for (const auto& [beta, c] : F.terms) {
    for (const MultiIndex& gamma : boxed_indices(beta)) {
      Cplx m = c * static_cast<double>(multi_binom(beta, gamma));
      for (int j = 0; j < F.n; ++j)
        m *= powi(std::conj(z[j]), beta[j] - gamma[j]);
      G[gamma] += m;
    }
  }

  // Multiply by e^{-pi zeta.z} = sum_mu (-pi)^{|mu|} z^mu zeta^mu / mu!,
  // truncated to total degree cap.
  FockPoly out;
  out.n = F.n;
  out.k = 1.0;
  for (const auto& [gamma, gc] : G) {
    if (gc == Cplx(0.0, 0.0)) continue;
    for (const MultiIndex& mu : multiindices_upto(F.n, cap - abs_sum(gamma))) {
      Cplx m = gc * std::pow(-M_PI, abs_sum(mu)) / dfac(mu);
      for (int j = 0; j < F.n; ++j) m *= powi(z[j], mu[j]);
      MultiIndex delta(gamma);
      for (int j = 0; j < F.n; ++j) delta[j] += mu[j];
      out.terms[delta] += m;
    }
  }

  // Scalar phase exp(i pi x.xi - pi |z|^2 / 2), z = x + i xi.
  double xdotxi = 0.0, z2 = 0.0;
  for (int j = 0; j < F.n; ++j) {
    xdotxi += z[j].real() * z[j].imag();
    z2 += std::norm(z[j]);
  }
  Cplx phase = std::exp(Cplx(-M_PI * z2 / 2.0, M_PI * xdotxi));
  for (auto& [beta, c] : out.terms) c *= phase;

  // Unitarity makes the discarded tail norm exact.
  double full2 = 0.0, kept2 = 0.0;
  for (const auto& [beta, c] : F.terms)
    full2 += std::norm(c) * fock_monomial_norm2(beta, 1.0);
  for (const auto& [beta, c] : out.terms)
    kept2 += std::norm(c) * fock_monomial_norm2(beta, 1.0);
  return ShiftedFock{std::move(out), std::sqrt(std::max(0.0, full2 - kept2))};
}

ZZbarPoly poly_bargmann_hermite(const MultiIndex& alpha,
                                const MultiIndex& beta) {
  if (alpha.size() != beta.size())
    throw DimensionMismatch("poly_bargmann_hermite: |alpha| != |beta| dims");
  int n = static_cast<int>(alpha.size());
  double s1 = std::pow(M_PI, (abs_sum(beta) - abs_sum(alpha)) / 2.0) /
              std::sqrt(dfac(alpha) * dfac(beta));
  ZZbarPoly P;
  P.n = n;
  for (const MultiIndex& gamma : boxed_indices(min_index(alpha, beta))) {
    double c = s1 * static_cast<double>(multi_binom(alpha, gamma)) *
               static_cast<double>(falling_factorial(beta, gamma)) *
               std::pow(-M_PI, abs_sum(alpha) - abs_sum(gamma));
    P.terms[{sub(beta, gamma), sub(alpha, gamma)}] += c;
  }
  return P;
}

ZZbarPoly poly_bargmann(const MultiIndex& alpha, const HermiteCoeffs& f) {
  if (static_cast<int>(alpha.size()) != f.n())
    throw DimensionMismatch("poly_bargmann: dim alpha != n");
  if (abs_sum(alpha) > f.cap())
    throw DegreeOverflow("poly_bargmann: |alpha| beyond the degree cap");
  ZZbarPoly out;
  out.n = f.n();
  const auto& idx = f.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    Cplx c = f.raw()[static_cast<Eigen::Index>(i)];
    if (c == Cplx(0.0, 0.0)) continue;
    ZZbarPoly piece = poly_bargmann_hermite(alpha, idx[i]);
    for (const auto& [key, v] : piece.terms) out.terms[key] += c * v;
  }
  return out;
}

ZZbarPoly full_poly_bargmann(int s, const std::vector<HermiteCoeffs>& fs) {
  if (s < 0) throw BadRange("full_poly_bargmann: level must be >= 0");
  if (fs.empty())
    throw DimensionMismatch("full_poly_bargmann: no components");
  int n = fs.front().n();
  std::vector<MultiIndex> levels = multiindices_upto(n, s);
  if (fs.size() != levels.size())
    throw DimensionMismatch(
        "full_poly_bargmann: component count != |N_s| in graded order");
  ZZbarPoly out;
  out.n = n;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (fs[i].n() != n)
      throw DimensionMismatch("full_poly_bargmann: mixed dimensions");
    ZZbarPoly piece = poly_bargmann(levels[i], fs[i]);
    for (const auto& [key, v] : piece.terms) out.terms[key] += v;
  }
  return out;
}

Cplx stft_matrix_element(const MultiIndex& beta, const MultiIndex& alpha,
                         const TFPoint& lambda) {
  int n = lambda.n();
  if (static_cast<int>(beta.size()) != n ||
      static_cast<int>(alpha.size()) != n ||
      lambda.x.size() != lambda.xi.size())
    throw DimensionMismatch("stft_matrix_element: dimension mismatch");

  double s1 = std::pow(M_PI, (abs_sum(beta) - abs_sum(alpha)) / 2.0) /
              std::sqrt(dfac(alpha) * dfac(beta));
  Cplx sum(0.0, 0.0);
  for (const MultiIndex& gamma : boxed_indices(min_index(alpha, beta))) {
    Cplx term(s1 * static_cast<double>(multi_binom(alpha, gamma)) *
                  static_cast<double>(falling_factorial(beta, gamma)) *
                  std::pow(-M_PI, abs_sum(alpha) - abs_sum(gamma)),
              0.0);
    for (int j = 0; j < n; ++j) {
      Cplx zj(-lambda.x[j], lambda.xi[j]);  // z = -x + i xi
      term *= powi(zj, beta[j] - gamma[j]);
      term *= powi(std::conj(zj), alpha[j] - gamma[j]);
    }
    sum += term;
  }
  Cplx phase =
      std::exp(Cplx(-M_PI * lambda.norm2() / 2.0,
                    -M_PI * lambda.x.dot(lambda.xi)));
  return phase * sum;
}

double fock_monomial_norm2(const MultiIndex& beta, double k) {
  if (!(k > 0)) throw BadRange("fock_monomial_norm2: weight must be > 0");
  int n = static_cast<int>(beta.size());
  return dfac(beta) * std::pow(M_PI, -abs_sum(beta)) *
         std::pow(k, -(abs_sum(beta) + n));
}

double fock_l2_norm(const FockPoly& F, double k) {
  double s = 0.0;
  for (const auto& [beta, c] : F.terms)
    s += std::norm(c) * fock_monomial_norm2(beta, k);
  return std::sqrt(s);
}

namespace {

struct SupObjective {
  const FockPoly& F;
  std::vector<FockPoly> dF;  // d/dz_j
  double k;

  explicit SupObjective(const FockPoly& F_, double k_) : F(F_), k(k_) {
    dF.resize(static_cast<std::size_t>(F.n));
    for (int j = 0; j < F.n; ++j) {
      dF[j].n = F.n;
      for (const auto& [beta, c] : F.terms) {
        if (beta[j] == 0) continue;
        MultiIndex b = beta;
        --b[j];
        dF[j].terms[b] += c * static_cast<double>(beta[j]);
      }
    }
  }

  double value(const Eigen::VectorXcd& z) const {
    double r2 = 0.0;
    for (int j = 0; j < F.n; ++j) r2 += std::norm(z[j]);
    return std::norm(F.eval(z)) * std::exp(-M_PI * k * r2);
  }

  // Gradient in the 2n real coordinates (x_j, y_j), z_j = x_j + i y_j.
  Eigen::VectorXd grad(const Eigen::VectorXcd& z) const {
    double r2 = 0.0;
    for (int j = 0; j < F.n; ++j) r2 += std::norm(z[j]);
    double env = std::exp(-M_PI * k * r2);
    Cplx w = F.eval(z);
    Eigen::VectorXd g(2 * F.n);
    for (int j = 0; j < F.n; ++j) {
      Cplx cw_dj = std::conj(w) * dF[static_cast<std::size_t>(j)].eval(z);
      g[2 * j] = env * (2.0 * cw_dj.real() -
                        2.0 * M_PI * k * z[j].real() * std::norm(w));
      g[2 * j + 1] = env * (-2.0 * cw_dj.imag() -
                            2.0 * M_PI * k * z[j].imag() * std::norm(w));
    }
    return g;
  }
};

}  // namespace

double fock_sup_norm(const FockPoly& F, double k) {
  if (!(k > 0)) throw BadRange("fock_sup_norm: weight must be > 0");
  bool all_zero = true;
  for (const auto& [beta, c] : F.terms)
    if (c != Cplx(0.0, 0.0)) all_zero = false;
  if (all_zero) return 0.0;

  SupObjective obj(F, k);
  int D = F.degree();
  // The true maximizer cannot sit far beyond r* = sqrt(D / (pi k)), where
  // the coefficient bound C^2 max(1,r)^{2D} e^{-pi k r^2} turns and dives;
  // starts are scattered to twice that radius.
  double rstar = std::sqrt(std::max(D, 1) / (M_PI * k));
  double spread = 2.0 * rstar + 2.0;

  std::vector<Eigen::VectorXcd> starts;
  starts.push_back(Eigen::VectorXcd::Zero(F.n));
  for (int j = 0; j < F.n; ++j)
    for (int dir = 0; dir < 4; ++dir) {
      Eigen::VectorXcd z = Eigen::VectorXcd::Zero(F.n);
      z[j] = powi(Cplx(0.0, 1.0), dir) * rstar;
      starts.push_back(z);
    }
  SplitMix64 rng(0x5eeded5ull);
  for (int i = 0; i < 64; ++i) {
    Eigen::VectorXcd z(F.n);
    for (int j = 0; j < F.n; ++j)
      z[j] = spread * Cplx(rng.uniform_sym(), rng.uniform_sym());
    starts.push_back(z);
  }

  double best = 0.0;
  for (Eigen::VectorXcd z : starts) {
    double v = obj.value(z);
    double step = 0.25 / (M_PI * k + 1.0);
    for (int it = 0; it < 500 && step > 1e-14; ++it) {
      Eigen::VectorXd g = obj.grad(z);
      Eigen::VectorXcd zn(F.n);
      for (int j = 0; j < F.n; ++j)
        zn[j] = z[j] + step * Cplx(g[2 * j], g[2 * j + 1]);
      double vn = obj.value(zn);
      if (vn > v) {
        z = zn;
        v = vn;
        step *= 1.3;
      } else {
        step *= 0.5;
      }
    }
    best = std::max(best, v);
  }
  return best;
}

WindowFn tf_shift(const TFPoint& lambda, const HermiteCoeffs& f) {
  if (lambda.n() != f.n() || lambda.xi.size() != lambda.x.size())
    throw DimensionMismatch("tf_shift: lambda dimension != n");
  return [lambda, f](const Eigen::VectorXd& t) {
    Cplx phase =
        std::exp(Cplx(0.0, 2.0 * M_PI * lambda.xi.dot(t)));
    return phase * f.eval(t - lambda.x);
  };
}

}  // namespace gaborcert
