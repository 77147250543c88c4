#include "gaborcert/frame.hpp"

#include "gaborcert/errors.hpp"
#include "gaborcert/indices.hpp"
#include "gaborcert/windows.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace gaborcert {

namespace {

void validate(const GaborSystem& sys) {
  if (sys.s < 0) throw BadRange("window level s must be nonnegative");
  if (sys.degree < 0)
    throw BadRange("section degree cap must be nonnegative");
  if (sys.s > sys.degree)
    throw BadRange("window level s exceeds the section degree cap");
}

// Smallest nonzero lattice vector norm, by enumeration over doubling radii.
double shortest_vector(const Lattice& L) {
  for (double r = 1.0; r <= 1048576.0; r *= 2.0) {
    std::vector<LatticePoint> pts = enumerate_points(L, r);
    double best = std::numeric_limits<double>::infinity();
    for (const LatticePoint& p : pts)
      if (p.norm > 0.0) best = std::min(best, p.norm);
    if (std::isfinite(best)) return best;
  }
  throw PrecisionLoss("no nonzero lattice vector found within radius 2^20");
}

// Absolute-coefficient envelopes of the window/section ZZbar polynomials:
// |<h_beta, pi_lambda h_alpha>| <= e^{-pi r^2 / 2} p_{alpha beta}(r).
using Envelope = std::vector<std::pair<double, int>>;  // (|coeff|, degree)

std::vector<Envelope> window_envelopes(const GaborSystem& sys) {
  const int n = sys.lattice.n();
  std::vector<Envelope> out;
  for (const MultiIndex& alpha : multiindices_upto(n, sys.s))
    for (const MultiIndex& beta : multiindices_upto(n, sys.degree)) {
      ZZbarPoly P = poly_bargmann_hermite(alpha, beta);
      Envelope env;
      for (const auto& [key, c] : P.terms)
        env.emplace_back(std::abs(c),
                         abs_sum(key.first) + abs_sum(key.second));
      out.push_back(std::move(env));
    }
  return out;
}

double envelope2(const std::vector<Envelope>& envs, double r) {
  double total = 0.0;
  for (const Envelope& env : envs) {
    double p = 0.0;
    for (const auto& [c, deg] : env) p += c * std::pow(r, deg);
    total += p * p;
  }
  return total;
}

}  // namespace

const char* to_string(FrameMode m) {
  return m == FrameMode::Multiwindow ? "multiwindow" : "super";
}

const char* to_string(Certification c) {
  switch (c) {
    case Certification::CertifiedUpToHeight:
      return "CertifiedUpToHeight";
    case Certification::NotCertifiedByCriterion:
      return "NotCertifiedByCriterion";
    default:
      return "Inconclusive";
  }
}

Eigen::MatrixXcd frame_operator_section(const GaborSystem& sys) {
  validate(sys);
  const int n = sys.lattice.n();
  std::vector<MultiIndex> basis = multiindices_upto(n, sys.degree);
  std::vector<MultiIndex> windows = multiindices_upto(n, sys.s);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (dim > 4096)
    throw DegreeOverflow("frame section would exceed 4096 Hermite levels");

  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(dim, dim);
  if (sys.radius < 0.0) return S;
  Eigen::VectorXcd v(dim);
  for (const LatticePoint& p : enumerate_points(sys.lattice, sys.radius)) {
    TFPoint lam = tf_point(p.x);
    for (const MultiIndex& alpha : windows) {
      for (Eigen::Index b = 0; b < dim; ++b)
        v[b] = stft_matrix_element(basis[b], alpha, lam);
      S.noalias() += v * v.adjoint();
    }
  }
  return S;
}

Eigen::MatrixXcd riesz_gram_section(const GaborSystem& sys) {
  validate(sys);
  const int n = sys.lattice.n();
  std::vector<MultiIndex> windows = multiindices_upto(n, sys.s);
  std::vector<LatticePoint> pts;
  if (sys.radius >= 0.0) pts = enumerate_points(sys.lattice, sys.radius);
  const auto w = static_cast<Eigen::Index>(windows.size());
  const auto dim = static_cast<Eigen::Index>(pts.size()) * w;
  if (dim > 4096)
    throw RadiusTooLarge("Gram section would exceed 4096 rows");

  Eigen::MatrixXcd G(dim, dim);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    TFPoint li = tf_point(pts[i].x);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      TFPoint lj = tf_point(pts[j].x);
      TFPoint diff = tf_point(pts[i].x - pts[j].x);
      Cplx phase =
          std::exp(Cplx(0.0, 2.0 * M_PI * (li.xi - lj.xi).dot(lj.x)));
      for (Eigen::Index a = 0; a < w; ++a)
        for (Eigen::Index b = 0; b < w; ++b)
          G(static_cast<Eigen::Index>(i) * w + a,
            static_cast<Eigen::Index>(j) * w + b) =
              phase * std::conj(stft_matrix_element(
                          windows[static_cast<std::size_t>(b)],
                          windows[static_cast<std::size_t>(a)], diff));
    }
  }
  return G;
}

double lattice_tail_bound(const GaborSystem& sys) {
  validate(sys);
  const int d = 2 * sys.lattice.n();
  std::vector<Envelope> envs = window_envelopes(sys);
  const double rho = shortest_vector(sys.lattice) / 2.0;
  auto ball = [d](double r) {
    return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0) *
           std::pow(r, d);
  };
  const double start = std::max(sys.radius, 0.0);
  double total = 0.0;
  for (int shell = 0; shell < 100000; ++shell) {
    double lo = start + shell, hi = lo + 1.0;
    double count =
        (ball(hi + rho) - ball(std::max(lo - rho, 0.0))) / ball(rho);
    double term =
        count * std::exp(-M_PI * lo * lo) * envelope2(envs, hi);
    total += term;
    if (term < 1e-300 || (shell > 3 && term < 1e-18 * total)) break;
  }
  return total;
}

const std::vector<std::pair<double, int>> kDefaultLadder{
    {4.0, 10}, {6.0, 20}, {8.0, 30}};

BoundsEstimate frame_bounds_estimate(
    const GaborSystem& sys,
    const std::vector<std::pair<double, int>>& ladder) {
  validate(sys);
  if (ladder.empty()) throw BadRange("empty truncation ladder");

  GaborSystem probe = sys;
  if (sys.mode == FrameMode::Super)
    probe.lattice = symplectic_dual(sys.lattice).lattice;

  BoundsEstimate out;
  for (const auto& [radius, degree] : ladder) {
    GaborSystem cur = probe;
    cur.radius = radius;
    cur.degree = degree;
    LadderRung rung;
    rung.radius = radius;
    rung.degree = degree;
    Eigen::MatrixXcd M = sys.mode == FrameMode::Super
                             ? riesz_gram_section(cur)
                             : frame_operator_section(cur);
    if (M.rows() > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
          M, Eigen::EigenvaluesOnly);
      rung.a_est = es.eigenvalues().minCoeff();
      rung.b_est = es.eigenvalues().maxCoeff();
    }
    rung.tail_bound =
        sys.mode == FrameMode::Super ? 0.0 : lattice_tail_bound(cur);
    out.ladder.push_back(rung);
  }
  out.a_est = out.ladder.back().a_est;
  out.b_est = out.ladder.back().b_est;
  out.tail_bound = out.ladder.back().tail_bound;
  return out;
}

CriterionVerdict criterion_verdict(const Lattice& L, int s, FrameMode mode,
                                   const RelationOptions& opt,
                                   KernelMode kmode) {
  if (s < 0) throw BadRange("window level s must be nonnegative");
  const int n = L.n();
  CriterionVerdict v;
  v.mode = mode;
  v.n = n;
  v.s = s;
  QuadExpr covol = covolume_exact(L);
  v.covolume = covol.value().convert_to<double>();
  v.dual_covolume = 1.0 / v.covolume;

  BigInt nfact = factorial(n);
  auto power = [n](long base) {
    BigInt p = 1;
    for (int i = 0; i < n; ++i) p *= base;
    return p;
  };
  Rational threshold = mode == FrameMode::Multiwindow
                           ? Rational(power(s + 1), nfact)
                           : Rational(nfact, power(n + s));
  Rational alt(power(s), nfact);
  v.threshold = threshold.convert_to<double>();
  v.alt_threshold = alt.convert_to<double>();
  v.density_ok = sign(covol - QuadExpr(threshold)) < 0;

  std::ostringstream note;
  if (mode == FrameMode::Multiwindow) {
    v.transcendence = is_transcendental(L, opt, kmode);
  } else {
    DualResult dual = symplectic_dual(L);
    v.transcendence = is_transcendental(dual.lattice, opt, kmode);
    if (!dual.exact)
      note << "adjoint lattice entries approximated at ambient precision; ";
  }

  if (v.density_ok &&
      v.transcendence.overall == TransKind::TranscendentalUpToHeight)
    v.overall = Certification::CertifiedUpToHeight;
  else if (v.density_ok &&
           v.transcendence.overall == TransKind::Inconclusive)
    v.overall = Certification::Inconclusive;
  else
    v.overall = Certification::NotCertifiedByCriterion;

  note << "recap density variant s^n/n! = " << v.alt_threshold
       << " alongside threshold " << v.threshold << "; comparison only";
  v.note = note.str();
  return v;
}

}  // namespace gaborcert
