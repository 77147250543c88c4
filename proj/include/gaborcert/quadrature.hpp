#pragma once

// Gauss-Hermite quadrature matched to the e^{-2 pi t^2} envelope shared by
// all window products.  Rules integrate over the plain Lebesgue measure, so
// integrands carry their own Gaussian decay; a rule with `count` nodes is
// exact for p(t) e^{-2 pi t^2} with deg p <= 2 count - 1.

#include <Eigen/Dense>

#include <complex>
#include <functional>

namespace gaborcert {

struct QuadRule {
  Eigen::VectorXd t;  // nodes
  Eigen::VectorXd w;  // plain-measure weights: sum_i w_i f(t_i) ~ int f
};

// Golub-Welsch nodes/weights, rescaled from the e^{-x^2} weight to the
// e^{-2 pi t^2} envelope (t = x / sqrt(2 pi)).  Rules are cached; safe to
// call concurrently.
const QuadRule& hermite_rule(int count);

// Adaptive wrapper: doubles the node count (20, 40, ..., max_nodes) until
// two successive estimates agree to `tol` (relative once |I| > 1).  Throws
// PrecisionLoss if the cap is reached without convergence.
std::complex<double> integrate(
    const std::function<std::complex<double>(double)>& f, double tol = 1e-12,
    int max_nodes = 320);
double integrate_real(const std::function<double(double)>& f,
                      double tol = 1e-12, int max_nodes = 320);

}  // namespace gaborcert
