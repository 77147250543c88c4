#pragma once

// Deciding ker int_Gamma = 0 for a complexified lattice: the torus C^n/Gamma
// carries no proper positive-dimensional analytic subvariety exactly when,
// for every degree 0 < k < n, no nonzero integer vector annihilates all
// degree-k minor tables simultaneously.  n = 1 is vacuous.  Verdicts are
// three-valued, with an explicit height/precision bound unless an exact
// kernel computation settled the question completely.

#include "gaborcert/minors.hpp"
#include "gaborcert/relation.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gaborcert {

// Exact: integer kernel over Q -- directly on Gaussian-rational values, and
// through coordinates over the (Q-linearly independent) basis {sqrt f} for
// surd values; complete either way.  Numeric: LLL search with a no-relation
// certificate, bounded by height and precision.  Auto picks Exact when every
// minor value is Gaussian-rational, Numeric otherwise.
enum class KernelMode { Auto, Exact, Numeric };
const char* to_string(KernelMode m);

enum class TransKind { NotTranscendental, TranscendentalUpToHeight, Inconclusive };
const char* to_string(TransKind k);

// Outcome for one homology degree k.
struct DegreeResult {
  int k = 0;
  int table_count = 0;
  // index into form_indices(n, k) of the single table whose no-relation
  // certificate settled the degree (sufficient condition); -1 when the full
  // simultaneous test decided it
  int fast_form = -1;
  RelationVerdict verdict;
};

struct TranscendenceVerdict {
  TransKind overall = TransKind::Inconclusive;
  bool complete = false;  // decided for every height (exact kernel path)
  BigInt height;
  unsigned precision_bits = 0;
  KernelMode mode = KernelMode::Numeric;  // mode actually used
  std::vector<DegreeResult> degrees;
  std::string note;
};

TranscendenceVerdict is_transcendental(const ComplexLattice& Lc,
                                       const RelationOptions& opt = {},
                                       KernelMode mode = KernelMode::Auto);
TranscendenceVerdict is_transcendental(const Lattice& L,
                                       const RelationOptions& opt = {},
                                       KernelMode mode = KernelMode::Auto);

// n = 2 shortcut: the six 2x2 generator minors a_j b_k - a_k b_j (writing
// e_j = (a_j, b_j)), 1 <= j < k <= 4 in (j,k) lexicographic order.  Feeding
// them to integer_relation reproduces is_transcendental at n = 2.
std::vector<Cx<QuadExpr>> n2_minors(const ComplexLattice& Lc);
ValueVector n2_shortcut(const ComplexLattice& Lc);  // ambient precision

// Product-lattice criterion for Lambda = A Z^2 x Z^2, A = [[a,b],[c,d]]:
// Lambda and its symplectic dual are transcendental iff ad - bc is
// irrational and {a,b,c,d} are Z-linearly independent; the lattice then
// induces a Gabor frame if additionally |ad - bc| < 1/2.  All entry literals
// live in the surd ring, so all three conditions are decided exactly.
struct ProductLatticeCheck {
  QuadExpr det;  // ad - bc
  bool det_irrational = false;
  bool entries_independent = false;
  bool det_below_half = false;
  bool certified = false;  // all three conditions hold
  bool complete = false;   // every condition decided exactly
  // the {a,b,c,d} search backing entries_independent (certificate when they
  // are dependent)
  RelationVerdict independence;
  std::string note;
};
ProductLatticeCheck product_lattice_check(const std::string& a,
                                          const std::string& b,
                                          const std::string& c,
                                          const std::string& d,
                                          const RelationOptions& opt = {});

// Monte-Carlo genericity experiment: sample generator matrices with i.i.d.
// uniform [-1,1) entries (53-bit dyadics from a deterministic SplitMix64
// stream) and count transcendence verdicts.  The search runs in Numeric mode
// on purpose: sampled entries are rational, so an exact kernel always exists
// at astronomical heights, and the statement under test is the absence of
// relations below the height bound.
struct GenericityOptions {
  int trials = 100;
  int n = 2;
  std::uint64_t seed = 1;
  RelationOptions relation;
  // test hook: mutate the sampled generator matrix before use (exercises
  // probability-zero inputs deterministically)
  std::function<void(int trial, Eigen::MatrixXd&)> inject;
};

struct TrialOutcome {
  int trial = 0;
  std::uint64_t rng_state = 0;  // SplitMix64 state before the trial; replayable
  TransKind kind = TransKind::Inconclusive;
};

struct GenericityReport {
  int trials = 0;
  int transcendental = 0;
  int not_transcendental = 0;
  int inconclusive = 0;
  double pass_fraction = 0;
  std::vector<TrialOutcome> failures;  // every non-transcendental trial
  std::uint64_t seed = 0;
};

GenericityReport genericity_sample(const GenericityOptions& opt);
GenericityReport genericity_sample(int trials, const BigInt& height,
                                   unsigned precision_bits,
                                   std::uint64_t seed);

}  // namespace gaborcert
