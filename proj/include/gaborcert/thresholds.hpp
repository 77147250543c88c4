#pragma once

// Closed-form Seshadri / pseudoeffective thresholds for transcendental
// lattices, and finite-section estimators for the uniqueness numbers mu_k
// and interpolation numbers sigma_k of a complex lattice, with their
// asymptotic ratios against the closed-form targets.
//
// The jet numbers are defined through infinite-dimensional function
// spaces; here they are estimated from weighted jet-evaluation sections
// with an explicit inconclusive band instead of a hard threshold, so
// truncation cannot manufacture false integer jumps.  Every estimate
// carries its singular-value evidence ladder and the truncation actually
// used.

#include "gaborcert/lattice.hpp"
#include "gaborcert/transcendence.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace gaborcert {

struct ThresholdReport {
  int n = 1;
  double covolume = 0.0;
  // equal under transcendence: (n! covolume)^{1/n}
  double epsilon0 = 0.0;
  double lambda0 = 0.0;
  // the closed form is valid when the lattice is transcendental; the raw
  // overload assumes it, the verdict overload records it
  bool valid = false;
  std::string note;
};

ThresholdReport seshadri_transcendental(double covol, int n);
ThresholdReport seshadri_transcendental(const Lattice& L,
                                        const TranscendenceVerdict& t);

// Rows = (lambda, alpha) with |lambda| <= R and |alpha| <= s, columns =
// monomials z^beta / ||z^beta|| with |beta| <= D.  The entry is the
// twisted jet
//   (d/dz - pi k conj(lambda))^alpha (z^beta) at lambda,
// scaled by ((pi k)^{|alpha|} alpha!)^{-1/2} k^{-n/2} e^{-pi k
// |lambda|^2/2}: the alpha = 0 rows are then exactly the normalized
// reproducing-kernel samples, every row has norm <= 1, and the singular
// values are invariant under the rescaling (k, Lambda) -> (1, sqrt(k)
// Lambda).  Vanishing of the twisted jets up to level s is equivalent to
// vanishing of the plain jets (the relation is unitriangular), so kernel
// detection is unaffected.  A negative radius denotes the empty ball.
Eigen::MatrixXcd jet_evaluation_matrix(const ComplexLattice& Lc, double k,
                                       int s, double R, int D);

enum class JetKind { Uniqueness, Interpolation };
enum class JetStatus { Ok, Inconclusive, Saturated };
const char* to_string(JetKind k);
const char* to_string(JetStatus s);

struct JetLevelProbe {
  int s = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  double radius = 0.0;  // condition radius actually used
  int degree = 0;       // column degree actually used
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  bool failure = false;
};

struct JetNumberEstimate {
  JetKind kind = JetKind::Uniqueness;
  double k = 1.0;
  // mu estimate (>= 0), or sigma estimate (>= -1); when status is
  // Saturated the value is only the tested lower bound, not a number
  int value = 0;
  JetStatus status = JetStatus::Ok;
  double radius = 0.0;
  int degree = 0;
  double tol = 1e-6;
  std::vector<JetLevelProbe> probes;
};

// mu_k: levels s = 0, 1, ... are probed until the section stops having a
// numerical kernel; mu is the count of failing levels.  The columns are
// capped at degree pi k (R-1)^2 so that every retained monomial lives
// well inside the condition ball: beyond that cap a monomial vanishes
// numerically on all conditions and would fake a kernel.  Failure means
// sigma_min < tol * sigma_max; a result inside [tol, 10 tol) stops the
// sweep as Inconclusive.
JetNumberEstimate uniqueness_number_estimate(const ComplexLattice& Lc,
                                             double k, double R, int D,
                                             double tol = 1e-6);

// sigma_k: levels are probed for numerical surjectivity (smallest of the
// row-count singular values above the band).  Here the conditions are
// capped at radius sqrt(D / (pi k)) - 1 so that the retained columns can
// actually reach every condition: beyond that radius the section is
// degree-starved and would fake a failure.  sigma = -1 when level 0
// already fails.
JetNumberEstimate interpolation_number_estimate(const ComplexLattice& Lc,
                                                double k, double R, int D,
                                                double tol = 1e-6);

struct AsymptoticRow {
  double k = 1.0;
  JetNumberEstimate mu;
  JetNumberEstimate sigma;
  double mu_ratio = 0.0;     // mu / k
  double sigma_ratio = 0.0;  // sigma / k
  bool mu_ok = false;        // mu/k <= lambda0 (+ slack) with Ok status
  bool sigma_ok = false;     // sigma/k <= epsilon0 (+ slack)
};

struct AsymptoticReport {
  int n = 1;
  double covolume = 0.0;
  double lambda0 = 0.0;
  double epsilon0 = 0.0;
  std::vector<AsymptoticRow> rows;
  int flagged_cells = 0;  // Inconclusive or Saturated estimates
};

// One row per k (strictly increasing list): both jet numbers, their
// ratios, and the one-sided comparisons against the closed-form targets.
AsymptoticReport asymptotic_report(const ComplexLattice& Lc,
                                   const std::vector<double>& ks, double R,
                                   int D, double tol = 1e-6);

}  // namespace gaborcert
