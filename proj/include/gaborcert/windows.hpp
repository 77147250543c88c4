#pragma once

// Hermite and Gaussian windows on R^n, and time-frequency shifts.  Window
// evaluation is plain double arithmetic: nothing here feeds the exact
// certification layers, only the quadrature cross-checks and the report
// plots.  All evaluators are stateless and safe to call concurrently.

#include "gaborcert/indices.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>

namespace gaborcert {

// L^2-normalized Hermite function of level m,
//   h_m(t) = c_m e^{pi t^2} (d/dt)^m e^{-2 pi t^2},  c_m > 0,
// evaluated through the equivalent normalized three-term recurrence
//   h_0(t)     = 2^{1/4} e^{-pi t^2},
//   h_{m+1}(t) = -(2 sqrt(pi) t / sqrt(m+1)) h_m(t)
//                - sqrt(m/(m+1)) h_{m-1}(t),
// which keeps every iterate O(1) where h_m lives.  Far tails run on an
// explicit mantissa/exponent pair: the seed underflows double long before
// the recurrence has climbed back into representable range.
double hermite_eval(int m, double t);

// h_alpha(t) = prod_i h_{alpha_i}(t_i).
double hermite_eval_multi(const MultiIndex& alpha, const Eigen::VectorXd& t);

struct HermiteWindow {
  MultiIndex alpha;
  double operator()(const Eigen::VectorXd& t) const {
    return hermite_eval_multi(alpha, t);
  }
};

// Gaussian window parameter: Omega in the Siegel upper half space, i.e.
// symmetric (entrywise within 1e-14) with positive definite imaginary part.
// Validation happens once at construction.
class GaussianWindow {
 public:
  explicit GaussianWindow(Eigen::MatrixXcd omega);

  const Eigen::MatrixXcd& omega() const { return omega_; }
  int n() const { return static_cast<int>(omega_.rows()); }

  // g_Omega(t) = conj(exp(pi i t^T Omega t))
  std::complex<double> operator()(const Eigen::VectorXd& t) const;

 private:
  Eigen::MatrixXcd omega_;
};

// One-shot form; validates omega on every call.
std::complex<double> gaussian_eval(const Eigen::MatrixXcd& omega,
                                   const Eigen::VectorXd& t);

// Point lambda = (xi, x) of time-frequency space R^n x R^n.
struct TFPoint {
  Eigen::VectorXd xi, x;

  int n() const { return static_cast<int>(xi.size()); }
  double norm2() const { return xi.squaredNorm() + x.squaredNorm(); }
};

// Split a stacked coordinate vector (xi_1..xi_n, x_1..x_n) in two.
TFPoint tf_point(const Eigen::VectorXd& stacked);

using WindowFn = std::function<std::complex<double>(const Eigen::VectorXd&)>;

// (pi_lambda f)(t) = e^{2 pi i xi.t} f(t - x)
WindowFn tf_shift(const TFPoint& lambda, WindowFn f);

}  // namespace gaborcert
