#pragma once

// Bargmann-Fock side of the window calculus: the Bargmann transform
//   Bf(z) = 2^{n/4} int f(t) e^{-pi t.t - 2 pi z.t - pi z.z/2} dt,
// its intertwined shift pi_z^C, polyanalytic transforms B^alpha, and the
// closed-form STFT matrix elements <h_beta, pi_lambda h_alpha> that every
// frame computation routes through.
//
// The shift displayed in the source material carries an undetermined
// normalization; the operator implemented here,
//   (pi_z^C F)(zeta) = exp(i pi x.xi - pi |z|^2 / 2) e^{-pi zeta.z} F(zeta
//   + conj(z)),  z = x + i xi,
// is the calibration that actually satisfies pi_z^C B f = B pi_{(xi,x)} f;
// the identity is enforced numerically in the test suite.

#include "gaborcert/indices.hpp"
#include "gaborcert/windows.hpp"

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace gaborcert {

using Cplx = std::complex<double>;

// f = sum c_alpha h_alpha over |alpha| <= cap, in the graded order of
// multiindices_upto.  Parseval: ||f||_2^2 = sum |c_alpha|^2.
class HermiteCoeffs {
 public:
  HermiteCoeffs(int n, int cap);

  int n() const { return n_; }
  int cap() const { return cap_; }
  const std::vector<MultiIndex>& indices() const { return idx_; }

  Cplx& coeff(const MultiIndex& alpha);        // throws DegreeOverflow
  Cplx coeff(const MultiIndex& alpha) const;  // zero if |alpha| > cap

  Eigen::VectorXcd& raw() { return c_; }
  const Eigen::VectorXcd& raw() const { return c_; }

  double norm() const { return c_.norm(); }
  Cplx eval(const Eigen::VectorXd& t) const;

 private:
  int n_, cap_;
  std::vector<MultiIndex> idx_;
  std::map<MultiIndex, int> pos_;
  Eigen::VectorXcd c_;
};

// Polynomial sum c_beta z^beta on C^n with the F^2_k weight attached.
struct FockPoly {
  int n = 1;
  double k = 1.0;
  std::map<MultiIndex, Cplx> terms;

  int degree() const;
  Cplx eval(const Eigen::VectorXcd& z) const;
};

// Mixed polynomial sum c_{a,b} z^a conj(z)^b; carrier for the Leibniz
// expansion behind B^alpha.
struct ZZbarPoly {
  int n = 1;
  std::map<std::pair<MultiIndex, MultiIndex>, Cplx> terms;

  Cplx eval(const Eigen::VectorXcd& z) const;
};

// B maps h_alpha to (pi^{|alpha|}/alpha!)^{1/2} z^alpha.
FockPoly bargmann(const HermiteCoeffs& f);

// pi_z^C F truncated to |beta| <= cap.  Monomials are orthogonal and the
// shift is unitary on F^2_1, so the discarded tail has the exact norm
// sqrt(||F||^2 - ||kept||^2); it is reported, not hidden.  Because that
// difference of squares is taken in double precision, the report bottoms
// out near ||F|| * sqrt(machine epsilon) even when the true tail is far
// smaller.
struct ShiftedFock {
  FockPoly poly;
  double tail_norm;
};
ShiftedFock fock_shift(const Eigen::VectorXcd& z, const FockPoly& F, int cap);

// True polyanalytic Bargmann transform
//   B^alpha f = (pi^{|alpha|} alpha!)^{-1/2} e^{pi|z|^2} d^alpha/dz^alpha
//               (e^{-pi|z|^2} Bf),
// closed form via the Leibniz rule; the Gaussian factors cancel and a pure
// (z, conj z) polynomial remains.
ZZbarPoly poly_bargmann_hermite(const MultiIndex& alpha,
                                const MultiIndex& beta);
ZZbarPoly poly_bargmann(const MultiIndex& alpha, const HermiteCoeffs& f);

// B^s((f_alpha)) = sum over alpha in N_s of B^alpha f_alpha; the component
// list follows the graded order of multiindices_upto(n, s).
ZZbarPoly full_poly_bargmann(int s, const std::vector<HermiteCoeffs>& fs);

// <h_beta, pi_lambda h_alpha> = exp(-i pi x.xi - pi |lambda|^2 / 2)
//                               (B^alpha h_beta)(-x + i xi),
// the argument sign fixed by matching direct quadrature of the inner
// product (the test suite pins it for all levels <= 3).
Cplx stft_matrix_element(const MultiIndex& beta, const MultiIndex& alpha,
                         const TFPoint& lambda);

// ||z^beta||^2 in F^2_k: beta! / (pi^{|beta|} k^{|beta| + n}).
double fock_monomial_norm2(const MultiIndex& beta, double k);

double fock_l2_norm(const FockPoly& F, double k);
inline double fock_l2_norm(const FockPoly& F) { return fock_l2_norm(F, F.k); }

// sup over z of |F(z)|^2 e^{-pi k |z|^2} (squared-modulus convention),
// located by deterministic multistart ascent inside the radius where the
// coefficient bound says the Gaussian has won.
double fock_sup_norm(const FockPoly& F, double k);
inline double fock_sup_norm(const FockPoly& F) {
  return fock_sup_norm(F, F.k);
}

// Lazy time-frequency shift of a Hermite expansion.
WindowFn tf_shift(const TFPoint& lambda, const HermiteCoeffs& f);

}  // namespace gaborcert
