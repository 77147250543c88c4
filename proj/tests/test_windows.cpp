#include "doctest.h"

#include "gaborcert/errors.hpp"
#include "gaborcert/numeric.hpp"
#include "gaborcert/quadrature.hpp"
#include "gaborcert/windows.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace gaborcert;
using Cd = std::complex<double>;

namespace {

// Rodrigues oracle: (d/dt)^m e^{-2 pi t^2} = Q_m(t) e^{-2 pi t^2} with
//   Q_0 = 1,  Q_{m+1} = Q_m' - 4 pi t Q_m,
// so h_m = c_m Q_m(t) e^{-pi t^2} with c_m > 0 fixed by the norm integral.
// Entirely independent of the recurrence under test.
std::vector<double> rodrigues_poly(int m) {
  std::vector<double> q{1.0};
  for (int j = 0; j < m; ++j) {
    std::vector<double> next(q.size() + 1, 0.0);
    for (std::size_t d = 1; d < q.size(); ++d)
      next[d - 1] += static_cast<double>(d) * q[d];
    for (std::size_t d = 0; d < q.size(); ++d)
      next[d + 1] -= 4.0 * M_PI * q[d];
    q = std::move(next);
  }
  return q;
}

double poly_eval(const std::vector<double>& q, double t) {
  double v = 0.0;
  for (std::size_t d = q.size(); d-- > 0;) v = v * t + q[d];
  return v;
}

double rodrigues_eval(int m, double t) {
  static std::vector<double> cm_cache;
  std::vector<double> q = rodrigues_poly(m);
  while (static_cast<int>(cm_cache.size()) <= m) {
    int level = static_cast<int>(cm_cache.size());
    std::vector<double> qk = rodrigues_poly(level);
    double norm2 = integrate_real([&](double s) {
      double v = poly_eval(qk, s) * std::exp(-M_PI * s * s);
      return v * v;
    });
    cm_cache.push_back(1.0 / std::sqrt(norm2));
  }
  return cm_cache[static_cast<std::size_t>(m)] * poly_eval(q, t) *
         std::exp(-M_PI * t * t);
}

// Same recurrence run in multiprecision, where the seed never underflows;
// validates the double-path rescaling bookkeeping in the far tail.
double hermite_eval_mp(int m, double t) {
  ScopedPrecision prec(256);
  Real pi = boost::math::constants::pi<Real>();
  Real tt(t);
  Real prev(0);
  Real cur = sqrt(sqrt(Real(2))) * exp(-pi * tt * tt);
  for (int k = 0; k < m; ++k) {
    Real next = -(2 * sqrt(pi) * tt / sqrt(Real(k + 1))) * cur -
                sqrt(Real(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

Eigen::VectorXd vec1(double t) {
  return Eigen::VectorXd::Constant(1, t);
}

}  // namespace

TEST_CASE("quadrature rules: exactness and adaptivity") {
  CHECK_THROWS_AS(hermite_rule(0), BadRange);
  CHECK_THROWS_AS(integrate_real([](double) { return 0.0; }, -1.0), BadRange);

  // Fixed 8-node rule integrates t^4 e^{-2 pi t^2} exactly (degree 4 <= 15).
  const QuadRule& r8 = hermite_rule(8);
  double quartic = 0.0, mass = 0.0;
  for (int i = 0; i < 8; ++i) {
    double t = r8.t[i], g = std::exp(-2.0 * M_PI * t * t);
    quartic += r8.w[i] * t * t * t * t * g;
    mass += r8.w[i] * g;
  }
  CHECK(quartic == doctest::Approx(3.0 / (16.0 * M_PI * M_PI * std::sqrt(2.0)))
                       .epsilon(1e-13));
  CHECK(mass == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

  // Adaptive: a Gaussian not matching the envelope still converges.
  double gauss = integrate_real([](double t) { return std::exp(-t * t); });
  CHECK(gauss == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

  Cd osc = integrate([](double t) {
    return std::exp(Cd(0.0, 2.0 * M_PI * 0.4 * t)) * std::exp(-M_PI * t * t);
  });
  // int e^{2 pi i b t} e^{-pi t^2} dt = e^{-pi b^2}
  CHECK(std::abs(osc - Cd(std::exp(-M_PI * 0.16), 0.0)) < 1e-12);

  // Too-slow decay exhausts the node ladder.
  CHECK_THROWS_AS(
      integrate_real([](double t) { return std::exp(-0.01 * t * t); }),
      PrecisionLoss);
}

TEST_CASE("hermite recurrence matches the Rodrigues oracle") {
  for (int m = 0; m <= 8; ++m)
    for (double t = -3.0; t <= 3.0 + 1e-9; t += 0.25)
      CHECK(hermite_eval(m, t) ==
            doctest::Approx(rodrigues_eval(m, t)).epsilon(1e-10));
}

TEST_CASE("hermite seed, parity, and norms") {
  CHECK_THROWS_AS(hermite_eval(-1, 0.0), BadRange);

  CHECK(hermite_eval(0, 0.0) == doctest::Approx(std::pow(2.0, 0.25)));
  for (double t = -2.0; t <= 2.0 + 1e-9; t += 0.1)
    CHECK(hermite_eval(0, t) ==
          doctest::Approx(std::pow(2.0, 0.25) * std::exp(-M_PI * t * t)));

  for (double t = 0.0; t <= 3.0 + 1e-9; t += 0.3) {
    CHECK(hermite_eval(3, -t) + hermite_eval(3, t) == doctest::Approx(0.0));
    for (int m = 0; m <= 8; ++m) {
      double sign = (m % 2 == 0) ? 1.0 : -1.0;
      CHECK(hermite_eval(m, -t) ==
            doctest::Approx(sign * hermite_eval(m, t)).epsilon(1e-12));
    }
  }

  for (int m = 0; m <= 12; ++m) {
    double norm2 = integrate_real([m](double t) {
      double v = hermite_eval(m, t);
      return v * v;
    });
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-10));
  }

  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k < m; ++k) {
      double ip = integrate_real(
          [&](double t) { return hermite_eval(m, t) * hermite_eval(k, t); });
      CHECK(std::abs(ip) < 1e-9);
    }
}

TEST_CASE("hermite far tail stays finite and accurate") {
  // Underflow of the seed is not underflow of the value: at t = 16 the
  // direct formula for h_0 is flushed to zero, yet h_800(16) sits near the
  // classical turning point and is comfortably representable.
  CHECK(std::pow(2.0, 0.25) * std::exp(-M_PI * 256.0) == 0.0);
  CHECK(hermite_eval(800, 16.0) != 0.0);

  struct Probe {
    int m;
    double t;
  };
  for (Probe p : {Probe{100, 8.0}, Probe{400, 12.0}, Probe{800, 16.0}}) {
    double want = hermite_eval_mp(p.m, p.t);
    REQUIRE(want != 0.0);
    CHECK(std::abs(hermite_eval(p.m, p.t) - want) <= 1e-10 * std::abs(want));
  }

  // Genuinely unrepresentable values flush to zero without NaN/inf.
  CHECK(hermite_eval(0, 40.0) == 0.0);
  double far = hermite_eval(5, 1e4);
  CHECK(std::isfinite(far));
  CHECK(far == 0.0);
}

TEST_CASE("hermite products over coordinates") {
  MultiIndex alpha{2, 0, 1};
  Eigen::VectorXd t(3);
  t << 0.3, -1.1, 0.7;
  CHECK(hermite_eval_multi(alpha, t) ==
        doctest::Approx(hermite_eval(2, 0.3) * hermite_eval(0, -1.1) *
                        hermite_eval(1, 0.7)));
  HermiteWindow w{alpha};
  CHECK(w(t) == hermite_eval_multi(alpha, t));
  CHECK_THROWS_AS(hermite_eval_multi(MultiIndex{1}, t), DimensionMismatch);

  double norm2 = integrate_real([](double u) {
    double v = hermite_eval(4, u);
    return v * v;
  });
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("gaussian windows on the Siegel half space") {
  using Eigen::MatrixXcd;
  const Cd I(0.0, 1.0);

  // Omega = iI reproduces e^{-pi |t|^2} to machine precision, n <= 3.
  for (int n = 1; n <= 3; ++n) {
    GaussianWindow g(MatrixXcd::Identity(n, n) * I);
    int per_axis = (n == 1) ? 1000 : (n == 2 ? 32 : 10);
    Eigen::VectorXd t(n);
    int checked = 0;
    for (int a = 0; a < per_axis; ++a)
      for (int b = 0; b < (n >= 2 ? per_axis : 1); ++b)
        for (int c = 0; c < (n >= 3 ? per_axis : 1); ++c) {
          t[0] = -2.0 + 4.0 * a / (per_axis - 1.0);
          if (n >= 2) t[1] = -2.0 + 4.0 * b / (per_axis - 1.0);
          if (n >= 3) t[2] = -2.0 + 4.0 * c / (per_axis - 1.0);
          Cd got = g(t);
          double want = std::exp(-M_PI * t.squaredNorm());
          REQUIRE(std::abs(got - Cd(want, 0.0)) <= 1e-13);
          ++checked;
        }
    CHECK(checked >= 1000);
  }

  // n=1, Omega = i: coincides with h_0 / 2^{1/4}.
  for (double t = -2.5; t <= 2.5 + 1e-9; t += 0.05) {
    Cd got = gaussian_eval(MatrixXcd::Identity(1, 1) * I, vec1(t));
    CHECK(std::abs(got - hermite_eval(0, t) / std::pow(2.0, 0.25)) < 1e-12);
  }

  // A non-diagonal point of the half space, checked by hand at t = (1, 2):
  // q = 1.2 + 5i, g = conj(e^{i pi q}) = e^{-5 pi} e^{-1.2 pi i}.
  MatrixXcd off(2, 2);
  off << I, Cd(0.3, 0.0), Cd(0.3, 0.0), I;
  Eigen::VectorXd t12(2);
  t12 << 1.0, 2.0;
  Cd want = std::exp(-5.0 * M_PI) *
            std::exp(Cd(0.0, -1.2 * M_PI));
  CHECK(std::abs(gaussian_eval(off, t12) - want) < 1e-15);

  // Rejections: real Omega, indefinite imaginary part, asymmetry, shape.
  CHECK_THROWS_AS(GaussianWindow(MatrixXcd::Identity(2, 2)),
                  NotInSiegelHalfSpace);
  MatrixXcd indef(2, 2);
  indef << I, Cd(0, 0), Cd(0, 0), -I;
  CHECK_THROWS_AS(GaussianWindow{indef}, NotInSiegelHalfSpace);
  MatrixXcd asym = MatrixXcd::Identity(2, 2) * I;
  asym(0, 1) = Cd(1e-12, 0.0);
  CHECK_THROWS_AS(GaussianWindow{asym}, NotInSiegelHalfSpace);
  MatrixXcd near = MatrixXcd::Identity(2, 2) * I;
  near(0, 1) = near(1, 0) = Cd(1e-15, 0.0);  // symmetric tweak: fine
  CHECK_NOTHROW(GaussianWindow{near});
  CHECK_THROWS_AS(GaussianWindow(MatrixXcd::Identity(2, 3)),
                  DimensionMismatch);
  GaussianWindow g1(MatrixXcd::Identity(1, 1) * I);
  Eigen::VectorXd t2(2);
  t2 << 0.1, 0.2;
  CHECK_THROWS_AS(g1(t2), DimensionMismatch);
}

TEST_CASE("time-frequency shifts") {
  WindowFn h0 = [](const Eigen::VectorXd& t) {
    return Cd(hermite_eval(0, t[0]), 0.0);
  };

  // pi_0 f = f.
  TFPoint zero{Eigen::VectorXd::Zero(1), Eigen::VectorXd::Zero(1)};
  WindowFn shifted0 = tf_shift(zero, h0);
  for (double t = -2.0; t <= 2.0 + 1e-9; t += 0.25)
    CHECK(std::abs(shifted0(vec1(t)) - h0(vec1(t))) < 1e-15);

  TFPoint lam{vec1(0.3), vec1(0.7)};
  CHECK(lam.n() == 1);
  CHECK(lam.norm2() == doctest::Approx(0.09 + 0.49));
  WindowFn pl = tf_shift(lam, h0);

  // Unitarity: the shifted window still has unit norm.
  double norm2 = integrate_real([&](double t) {
    return std::norm(pl(vec1(t)));
  });
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-10));

  // Gaussian ambiguity function: |<h_0, pi_lambda h_0>| = e^{-pi |lambda|^2 / 2}.
  Cd ip = integrate([&](double t) {
    return Cd(hermite_eval(0, t), 0.0) * std::conj(pl(vec1(t)));
  });
  CHECK(std::abs(ip) ==
        doctest::Approx(std::exp(-M_PI * lam.norm2() / 2.0)).epsilon(1e-8));

  // Composition law: pi_lambda pi_mu = e^{-2 pi i eta . x} pi_{lambda + mu}.
  TFPoint mu{vec1(-0.2), vec1(0.4)};
  TFPoint sum{lam.xi + mu.xi, lam.x + mu.x};
  WindowFn lhs = tf_shift(lam, tf_shift(mu, h0));
  WindowFn rhs_raw = tf_shift(sum, h0);
  Cd phase = std::exp(Cd(0.0, -2.0 * M_PI * mu.xi.dot(lam.x)));
  for (double t = -1.5; t <= 1.5 + 1e-9; t += 0.3)
    CHECK(std::abs(lhs(vec1(t)) - phase * rhs_raw(vec1(t))) < 1e-12);

  // Splitting stacked coordinates.
  Eigen::VectorXd stacked(4);
  stacked << 1.0, 2.0, 3.0, 4.0;
  TFPoint p = tf_point(stacked);
  CHECK(p.xi.isApprox(Eigen::Vector2d(1.0, 2.0)));
  CHECK(p.x.isApprox(Eigen::Vector2d(3.0, 4.0)));
  CHECK_THROWS_AS(tf_point(Eigen::VectorXd::Zero(3)), DimensionMismatch);
  CHECK_THROWS_AS(tf_shift(TFPoint{vec1(0.0), Eigen::VectorXd::Zero(2)}, h0),
                  DimensionMismatch);
}
