#include "gaborcert/windows.hpp"

#include "gaborcert/errors.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace gaborcert {

namespace {

// Advances (h_{k-1}, h_k) -> (h_k, h_{k+1}); linear, so it commutes with the
// shared power-of-2 rescaling used on the tail path.
inline void recurrence_step(int k, double t, double& prev, double& cur) {
  double next = -(2.0 * std::sqrt(M_PI) * t / std::sqrt(k + 1.0)) * cur -
                std::sqrt(k / (k + 1.0)) * prev;
  prev = cur;
  cur = next;
}

}  // namespace

double hermite_eval(int m, double t) {
  if (m < 0) throw BadRange("hermite_eval: level must be >= 0");
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  static const double seed_scale = std::pow(2.0, 0.25);
  const double pt2 = M_PI * t * t;

  if (pt2 <= 600.0) {
    double prev = 0.0;
    double cur = seed_scale * std::exp(-pt2);
    for (int k = 0; k < m; ++k) recurrence_step(k, t, prev, cur);
    return cur;
  }

  // Seed below ~1e-260: track log2 of the seed and renormalize the pair
  // whenever it drifts 100 binades, deferring under/overflow to the final
  // ldexp (which flushes a genuinely unrepresentable value to zero).
  double lg = 0.25 - pt2 / M_LN2;
  // The recurrence climbs at most a factor 2 sqrt(pi)|t| + 1 per level; if
  // even that ceiling stays below the subnormal range the value is zero.
  if (lg + m * std::log2(2.0 * std::sqrt(M_PI) * std::abs(t) + 1.0) < -1080.0)
    return 0.0;
  int e = static_cast<int>(std::floor(lg));
  double prev = 0.0;
  double cur = std::exp2(lg - e);
  for (int k = 0; k < m; ++k) {
    recurrence_step(k, t, prev, cur);
    double mag = std::max(std::abs(prev), std::abs(cur));
    if (mag > 0x1p100) {
      prev *= 0x1p-100;
      cur *= 0x1p-100;
      e += 100;
    } else if (mag > 0.0 && mag < 0x1p-100) {
      prev *= 0x1p100;
      cur *= 0x1p100;
      e -= 100;
    }
  }
  return std::ldexp(cur, e);
}

double hermite_eval_multi(const MultiIndex& alpha, const Eigen::VectorXd& t) {
  if (static_cast<int>(alpha.size()) != t.size())
    throw DimensionMismatch("hermite_eval_multi: |alpha| != dim t");
  double prod = 1.0;
  for (int i = 0; i < t.size(); ++i) prod *= hermite_eval(alpha[i], t[i]);
  return prod;
}

GaussianWindow::GaussianWindow(Eigen::MatrixXcd omega)
    : omega_(std::move(omega)) {
  if (omega_.rows() != omega_.cols() || omega_.rows() < 1)
    throw DimensionMismatch("GaussianWindow: omega must be square, n >= 1");
  double asym = (omega_ - omega_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-14)
    throw NotInSiegelHalfSpace("GaussianWindow: omega not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(omega_.imag());
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw NotInSiegelHalfSpace(
        "GaussianWindow: Im(omega) not positive definite");
}

std::complex<double> GaussianWindow::operator()(
    const Eigen::VectorXd& t) const {
  if (t.size() != omega_.rows())
    throw DimensionMismatch("GaussianWindow: dim t != n");
  Eigen::VectorXcd tc = t.cast<std::complex<double>>();
  std::complex<double> q = tc.dot(omega_ * tc);  // t real: dot == t^T . t
  return std::exp(std::conj(std::complex<double>(0.0, M_PI) * q));
}

std::complex<double> gaussian_eval(const Eigen::MatrixXcd& omega,
                                   const Eigen::VectorXd& t) {
  return GaussianWindow(omega)(t);
}

TFPoint tf_point(const Eigen::VectorXd& stacked) {
  if (stacked.size() % 2 != 0 || stacked.size() == 0)
    throw DimensionMismatch("tf_point: stacked vector must have even size");
  Eigen::Index n = stacked.size() / 2;
  return TFPoint{stacked.head(n), stacked.tail(n)};
}

WindowFn tf_shift(const TFPoint& lambda, WindowFn f) {
  if (lambda.xi.size() != lambda.x.size())
    throw DimensionMismatch("tf_shift: xi and x sizes differ");
  return [lambda, f = std::move(f)](const Eigen::VectorXd& t) {
    std::complex<double> phase =
        std::exp(std::complex<double>(0.0, 2.0 * M_PI * lambda.xi.dot(t)));
    return phase * f(t - lambda.x);
  };
}

}  // namespace gaborcert
