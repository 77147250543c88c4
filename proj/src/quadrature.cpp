#include "gaborcert/quadrature.hpp"

#include "gaborcert/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace gaborcert {

namespace {

QuadRule build_rule(int count) {
  if (count < 1) throw BadRange("hermite_rule: node count must be >= 1");
  // Beyond ~340 nodes the Christoffel sums below leave double range.
  if (count > 340) throw BadRange("hermite_rule: node count cap is 340");
  // Jacobi matrix of the (physicists') Hermite weight e^{-x^2}: zero
  // diagonal, off-diagonal beta_k = sqrt(k/2).  Eigenvalues are the nodes.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
  Eigen::VectorXd sub(count > 1 ? count - 1 : 0);
  for (int k = 1; k < count; ++k) sub[k - 1] = std::sqrt(k / 2.0);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw PrecisionLoss("hermite_rule: tridiagonal eigensolve failed");

  const double root2pi = std::sqrt(2.0 * M_PI);
  const double p0 = std::pow(M_PI, -0.25);
  QuadRule rule;
  rule.t.resize(count);
  rule.w.resize(count);
  for (int i = 0; i < count; ++i) {
    double x = es.eigenvalues()[i];
    rule.t[i] = x / root2pi;
    // Christoffel weight 1/w_i = sum_k p_k(x_i)^2 over the orthonormal
    // Hermite polynomials.  (The textbook squared-first-eigenvector form
    // drowns in eigensolver noise once the true component e^{-x^2/2} drops
    // below machine epsilon, i.e. for rules past ~60 nodes.)
    double prev = 0.0, cur = p0, s = p0 * p0;
    for (int k = 1; k < count; ++k) {
      double next = (x * cur - std::sqrt((k - 1) / 2.0) * prev) /
                    std::sqrt(k / 2.0);
      prev = cur;
      cur = next;
      s += cur * cur;
    }
    // Plain-measure weight e^{x^2} / (s sqrt(2 pi)), assembled in log space.
    rule.w[i] = std::exp(x * x - std::log(s)) / root2pi;
  }
  return rule;
}

}  // namespace

const QuadRule& hermite_rule(int count) {
  static std::mutex mu;
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(count);
  if (it == cache.end()) it = cache.emplace(count, build_rule(count)).first;
  return it->second;
}

std::complex<double> integrate(
    const std::function<std::complex<double>(double)>& f, double tol,
    int max_nodes) {
  if (!(tol > 0)) throw BadRange("integrate: tolerance must be positive");
  std::complex<double> prev{};
  bool have_prev = false;
  for (int count = 20; count <= max_nodes; count *= 2) {
    const QuadRule& rule = hermite_rule(count);
    std::complex<double> sum{};
    for (int i = 0; i < rule.t.size(); ++i) sum += rule.w[i] * f(rule.t[i]);
    if (have_prev && std::abs(sum - prev) <= tol * std::max(1.0, std::abs(sum)))
      return sum;
    prev = sum;
    have_prev = true;
  }
  throw PrecisionLoss("integrate: node cap reached without convergence");
}

double integrate_real(const std::function<double(double)>& f, double tol,
                      int max_nodes) {
  return integrate([&](double t) { return std::complex<double>(f(t), 0.0); },
                   tol, max_nodes)
      .real();
}

}  // namespace gaborcert
