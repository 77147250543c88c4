#include "gaborcert/thresholds.hpp"

#include "gaborcert/errors.hpp"
#include "gaborcert/indices.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace gaborcert {

namespace {

constexpr double kPi = 3.14159265358979323846;

// levels probed before an estimator gives up and reports saturation
constexpr int kMaxJetLevel = 16;

using Cplx = std::complex<double>;

// componentwise box {gamma : gamma <= min(alpha, beta)}
std::vector<MultiIndex> box_below(const MultiIndex& a, const MultiIndex& b) {
  const int n = static_cast<int>(a.size());
  std::vector<MultiIndex> out;
  MultiIndex g(n, 0);
  while (true) {
    out.push_back(g);
    int i = 0;
    while (i < n) {
      if (g[i] < std::min(a[i], b[i])) {
        ++g[i];
        break;
      }
      g[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

double covolume_cd(const ComplexLattice& Lc) {
  const int n = Lc.n;
  Eigen::MatrixXcd Gc = Lc.gens_cd();
  Eigen::MatrixXd Gr(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      Gr(i, j) = Gc(i, j).real();
      Gr(n + i, j) = Gc(i, j).imag();
    }
  return std::abs(Gr.determinant());
}

struct SectionShape {
  double radius;  // condition radius actually used
  int degree;     // column degree actually used
};

// Extreme singular values via the smaller Gram matrix (Jacobi and
// divide-and-conquer SVDs both misbehave on large complex sections; the
// Hermitian eigensolver is reliable, and the squaring floor sqrt(eps) ~
// 1e-8 relative sits two decades under the decision band).  Uniqueness
// asks for injectivity on the columns, interpolation for surjectivity on
// the rows; when the asked-for side is the larger one the corresponding
// extreme singular value is an exact structural zero.
JetLevelProbe probe_level(const ComplexLattice& Lc, double k, int s,
                          SectionShape shape, double tol, JetKind kind) {
  JetLevelProbe p;
  p.s = s;
  p.radius = shape.radius;
  p.degree = shape.degree;
  Eigen::MatrixXcd M =
      jet_evaluation_matrix(Lc, k, s, shape.radius, shape.degree);
  p.rows = M.rows();
  p.cols = M.cols();
  if (p.rows == 0) {
    // no conditions at all: everything vanishes on the empty set, and the
    // empty data set is trivially interpolated
    p.failure = (kind == JetKind::Uniqueness);
    return p;
  }
  Eigen::MatrixXcd G;
  if (p.rows >= p.cols)
    G.noalias() = M.adjoint() * M;
  else
    G.noalias() = M * M.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G,
                                                     Eigen::EigenvaluesOnly);
  p.sigma_max = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  const bool structural_zero = (kind == JetKind::Uniqueness)
                                   ? p.cols > p.rows
                                   : p.rows > p.cols;
  p.sigma_min = structural_zero
                    ? 0.0
                    : std::sqrt(std::max(0.0, es.eigenvalues().minCoeff()));
  p.failure = p.sigma_min < tol * p.sigma_max || p.sigma_max == 0.0;
  return p;
}

void validate_common(double k, int D, double tol) {
  if (!(k > 0)) throw BadRange("jet estimate: weight k must be positive");
  if (D < 0) throw BadRange("jet estimate: negative degree cap");
  if (!(tol > 0) || tol > 1e-2)
    throw BadRange("jet estimate: tol must lie in (0, 1e-2]");
}

}  // namespace

const char* to_string(JetKind k) {
  return k == JetKind::Uniqueness ? "uniqueness" : "interpolation";
}

const char* to_string(JetStatus s) {
  switch (s) {
    case JetStatus::Ok: return "ok";
    case JetStatus::Inconclusive: return "inconclusive";
    default: return "saturated";
  }
}

ThresholdReport seshadri_transcendental(double covol, int n) {
  if (n < 1) throw BadRange("seshadri_transcendental: need n >= 1");
  if (!(covol > 0))
    throw BadRange("seshadri_transcendental: covolume must be positive");
  ThresholdReport r;
  r.n = n;
  r.covolume = covol;
  double t = factorial(n).convert_to<double>() * covol;
  r.lambda0 = n == 1 ? t : (n == 2 ? std::sqrt(t) : std::pow(t, 1.0 / n));
  r.epsilon0 = r.lambda0;
  r.valid = true;
  r.note = "closed form assumes a transcendental lattice";
  return r;
}

ThresholdReport seshadri_transcendental(const Lattice& L,
                                        const TranscendenceVerdict& t) {
  ThresholdReport r =
      seshadri_transcendental(covolume(L).convert_to<double>(), L.n());
  r.valid = t.overall == TransKind::TranscendentalUpToHeight;
  r.note = r.valid
               ? "transcendental up to height " + t.height.str()
               : "transcendence not established; thresholds are conditional";
  return r;
}

Eigen::MatrixXcd jet_evaluation_matrix(const ComplexLattice& Lc, double k,
                                       int s, double R, int D) {
  if (!(k > 0))
    throw BadRange("jet_evaluation_matrix: weight k must be positive");
  if (s < 0) throw BadRange("jet_evaluation_matrix: negative jet level");
  if (D < 0) throw BadRange("jet_evaluation_matrix: negative degree");
  // all entries are evaluated through u^m / sqrt(m!) ladders whose peak is
  // about e^{|u|^2 / 2}; past this bound they would overflow
  if (R > 0 && kPi * k * R * R > 1400)
    throw PrecisionLoss("jet_evaluation_matrix: pi k R^2 beyond double range");
  const int n = Lc.n;
  const auto jets = multiindices_upto(n, s);
  const auto monos = multiindices_upto(n, D);
  if (monos.size() > 4096)
    throw TruncationCapExceeded("jet_evaluation_matrix: column count > 4096");
  const std::vector<ComplexLatticePoint> pts =
      R < 0 ? std::vector<ComplexLatticePoint>{} : enumerate_points(Lc, R);
  if (pts.size() * jets.size() > 200000)
    throw TruncationCapExceeded("jet_evaluation_matrix: row count > 200000");

  // In the scaled variable u = sqrt(pi k) z every power of (pi k) in the
  // weights and normalizations cancels, leaving
  //   entry = e^{-|u|^2/2} sum_gamma (-1)^{|alpha - gamma|}
  //           sqrt(binom(alpha, gamma) binom(beta, gamma))
  //           u^{beta - gamma} / sqrt((beta - gamma)!)
  //           conj(u)^{alpha - gamma} / sqrt((alpha - gamma)!),
  // and the fused ladders u^m / sqrt(m!) stay inside double range even for
  // degrees in the hundreds, where u^m and m! separately overflow.
  const double sk = std::sqrt(kPi * k);
  std::vector<std::vector<Cplx>> vlad(n, std::vector<Cplx>(D + 1));
  std::vector<std::vector<Cplx>> wlad(n, std::vector<Cplx>(s + 1));

  Eigen::MatrixXcd M(static_cast<Eigen::Index>(pts.size() * jets.size()),
                     static_cast<Eigen::Index>(monos.size()));
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const Eigen::VectorXcd& z = pts[p].z;
    const double gauss = std::exp(-0.5 * kPi * k * z.squaredNorm());
    for (int i = 0; i < n; ++i) {
      const Cplx u = sk * z[i];
      vlad[i][0] = 1.0;
      for (int m = 1; m <= D; ++m)
        vlad[i][m] = vlad[i][m - 1] * u / std::sqrt(double(m));
      wlad[i][0] = 1.0;
      for (int m = 1; m <= s; ++m)
        wlad[i][m] = wlad[i][m - 1] * std::conj(u) / std::sqrt(double(m));
    }
    for (std::size_t a = 0; a < jets.size(); ++a) {
      const MultiIndex& alpha = jets[a];
      const Eigen::Index row = static_cast<Eigen::Index>(p * jets.size() + a);
      for (std::size_t c = 0; c < monos.size(); ++c) {
        const MultiIndex& beta = monos[c];
        Cplx jet = 0.0;
        for (const MultiIndex& gamma : box_below(alpha, beta)) {
          Cplx term =
              std::sqrt(multi_binom(alpha, gamma).convert_to<double>() *
                        multi_binom(beta, gamma).convert_to<double>());
          if ((abs_sum(alpha) - abs_sum(gamma)) % 2) term = -term;
          for (int i = 0; i < n; ++i) {
            term *= vlad[i][beta[i] - gamma[i]];
            term *= wlad[i][alpha[i] - gamma[i]];
          }
          jet += term;
        }
        M(row, static_cast<Eigen::Index>(c)) = gauss * jet;
      }
    }
  }
  return M;
}

JetNumberEstimate uniqueness_number_estimate(const ComplexLattice& Lc,
                                             double k, double R, int D,
                                             double tol) {
  validate_common(k, D, tol);
  if (!(R > 1))
    throw BadRange("uniqueness_number_estimate: need radius > 1");
  JetNumberEstimate est;
  est.kind = JetKind::Uniqueness;
  est.k = k;
  est.radius = R;
  est.degree = D;
  est.tol = tol;
  // cap the columns at the degree whose monomials stay well inside the
  // condition ball (mass of z^beta sits near |z| = sqrt(|beta| / (pi k)))
  SectionShape shape{R, std::min(D, static_cast<int>(std::ceil(
                                        kPi * k * (R - 1) * (R - 1))))};
  for (int s = 0; s <= kMaxJetLevel; ++s) {
    JetLevelProbe p = probe_level(Lc, k, s, shape, tol, JetKind::Uniqueness);
    est.probes.push_back(p);
    if (!p.failure) {
      if (p.sigma_min < 10 * tol * p.sigma_max)
        est.status = JetStatus::Inconclusive;
      return est;
    }
    est.value = s + 1;
  }
  est.status = JetStatus::Saturated;
  return est;
}

JetNumberEstimate interpolation_number_estimate(const ComplexLattice& Lc,
                                                double k, double R, int D,
                                                double tol) {
  validate_common(k, D, tol);
  if (!(R > 0))
    throw BadRange("interpolation_number_estimate: need radius > 0");
  // keep only conditions the retained monomials can reach; beyond radius
  // sqrt(D / (pi k)) - 1 the section is degree-starved
  const double reach = std::sqrt(D / (kPi * k)) - 1.0;
  if (!(reach > 0))
    throw BadRange(
        "interpolation_number_estimate: degree cap too small for the weight");
  const double reff = std::min(R, reach);
  // columns beyond the conditions' reach are numerically zero; drop them
  SectionShape shape{reff, std::min(D, static_cast<int>(std::ceil(
                                           kPi * k * (reff + 2) * (reff + 2))))};
  JetNumberEstimate est;
  est.kind = JetKind::Interpolation;
  est.k = k;
  est.radius = R;
  est.degree = D;
  est.tol = tol;
  est.value = -1;
  for (int s = 0; s <= kMaxJetLevel; ++s) {
    JetLevelProbe p =
        probe_level(Lc, k, s, shape, tol, JetKind::Interpolation);
    est.probes.push_back(p);
    if (p.failure) return est;
    if (p.sigma_min < 10 * tol * p.sigma_max) {
      est.status = JetStatus::Inconclusive;
      return est;
    }
    est.value = s;
  }
  est.status = JetStatus::Saturated;
  return est;
}

AsymptoticReport asymptotic_report(const ComplexLattice& Lc,
                                   const std::vector<double>& ks, double R,
                                   int D, double tol) {
  if (ks.empty()) throw BadRange("asymptotic_report: empty k list");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (!(ks[i] > 0)) throw BadRange("asymptotic_report: k must be positive");
    if (i > 0 && !(ks[i] > ks[i - 1]))
      throw BadRange("asymptotic_report: k list must be strictly increasing");
  }
  AsymptoticReport rep;
  rep.n = Lc.n;
  rep.covolume = covolume_cd(Lc);
  ThresholdReport thr = seshadri_transcendental(rep.covolume, Lc.n);
  rep.lambda0 = thr.lambda0;
  rep.epsilon0 = thr.epsilon0;
  // slack for comparing an integer ratio against the closed form
  const double slack = 1e-9;
  for (double k : ks) {
    AsymptoticRow row;
    row.k = k;
    row.mu = uniqueness_number_estimate(Lc, k, R, D, tol);
    row.sigma = interpolation_number_estimate(Lc, k, R, D, tol);
    row.mu_ratio = row.mu.value / k;
    row.sigma_ratio = row.sigma.value / k;
    row.mu_ok =
        row.mu.status == JetStatus::Ok && row.mu_ratio <= rep.lambda0 + slack;
    row.sigma_ok = row.sigma.status == JetStatus::Ok &&
                   row.sigma_ratio <= rep.epsilon0 + slack;
    rep.flagged_cells += (row.mu.status != JetStatus::Ok) +
                         (row.sigma.status != JetStatus::Ok);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace gaborcert
