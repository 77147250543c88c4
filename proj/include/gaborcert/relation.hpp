#pragma once

// Integer relation detection for vectors of complex values, exact
// (Gaussian-rational kernel) and numeric (LLL embedding with an exact
// no-relation certificate).  A "simultaneous" relation is one integer vector
// annihilating several value tables at once.

#include "gaborcert/lll.hpp"
#include "gaborcert/numeric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gaborcert {

enum class RelationKind { RelationFound, NoRelationUpToHeight, Inconclusive };

const char* to_string(RelationKind k);

struct RelationVerdict {
  RelationKind kind = RelationKind::Inconclusive;
  // RelationFound: content-reduced, first nonzero entry positive
  std::vector<BigInt> relation;
  // achieved max_t |sum_i a_i v_i^t| at the confirmation precision; exact
  // zeros are reported as 0
  double residual = 0;
  // proven lower bound on that quantity over all 0 < |a|_inf <= H
  // (NoRelationUpToHeight only)
  double residual_floor = 0;
  BigInt height;            // the height bound H the verdict refers to
  bool complete = false;    // certified for all heights (exact kernel path)
  unsigned precision_bits = 0;
  std::string note;
};

using ValueVector = std::vector<Cx<Real>>;

struct RelationOptions {
  unsigned precision_bits = 256;
  BigInt height = 1000000;
  // Recompute the value tables at a requested precision; used to confirm a
  // candidate at doubled precision.  Without it a candidate can only be
  // confirmed when the given values satisfy it exactly (they are dyadic).
  std::function<std::vector<ValueVector>(unsigned bits)> reevaluate;
};

// Exact path: values are Gaussian rationals; kernel of the stacked [Re; Im]
// matrix over Q.  Verdicts are complete (no height cap).
RelationVerdict exact_relation(const std::vector<std::vector<CxRat>>& tables);

// Numeric path.  All tables must have the same length m = number of unknowns.
RelationVerdict simultaneous_relation(const std::vector<ValueVector>& tables,
                                      const RelationOptions& opt);

inline RelationVerdict integer_relation(const ValueVector& values,
                                        const RelationOptions& opt) {
  return simultaneous_relation({values}, opt);
}

}  // namespace gaborcert
