#pragma once

// Exact arithmetic in the ring of Q-linear combinations of sqrt(m) for
// squarefree m.  This is all the algebraic-number machinery the lattice
// entry grammar needs: rationals, decimals (exact rationals), and sqrt
// literals with rational multipliers.

#include "gaborcert/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace gaborcert {

// m = s * f^2 with s squarefree; returns {s, f}.  Trial division; m is an
// entry-literal radicand, so sizes are small.  Throws BadRange past 10^12.
std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t m);

class QuadExpr {
 public:
  QuadExpr() = default;
  QuadExpr(Rational r);  // NOLINT: rationals embed implicitly
  QuadExpr(long v) : QuadExpr(Rational(v)) {}
  QuadExpr(int v) : QuadExpr(Rational(v)) {}

  // coef * sqrt(m); m >= 1, reduced to squarefree form internally.
  static QuadExpr root(std::uint64_t m, const Rational& coef = Rational(1));

  QuadExpr operator-() const;
  QuadExpr& operator+=(const QuadExpr& o);
  QuadExpr& operator-=(const QuadExpr& o);
  QuadExpr& operator*=(const QuadExpr& o);
  friend QuadExpr operator+(QuadExpr a, const QuadExpr& b) { return a += b; }
  friend QuadExpr operator-(QuadExpr a, const QuadExpr& b) { return a -= b; }
  friend QuadExpr operator*(QuadExpr a, const QuadExpr& b) { return a *= b; }
  friend bool operator==(const QuadExpr& a, const QuadExpr& b) {
    return a.terms_ == b.terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  // true iff no surd term survives (the zero expression counts as rational)
  bool is_rational() const;
  Rational rational_value() const;        // throws BadRange if surds present
  Rational coeff(std::uint64_t m) const;  // coefficient of sqrt(m), m squarefree
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

  Real value() const;  // evaluate at the ambient Real precision
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const QuadExpr& q) {
    return os << q.str();
  }

 private:
  // squarefree radicand -> rational coefficient; zero coefficients pruned,
  // so is_zero/(==) are exact structural tests.
  std::map<std::uint64_t, Rational> terms_;
  void prune();
};

// Multiplicative inverse inside the surd ring, when it exists there (the
// ring is not a field, but 1/q lies in the span of the closure basis of q's
// radicands whenever the associated linear system is solvable, e.g.
// 1/(sqrt(14)-sqrt(15)) = -(sqrt(14)+sqrt(15))).  nullopt if q = 0, if the
// inverse escapes the ring, or if the closure basis would exceed 64 elements.
std::optional<QuadExpr> try_inverse(const QuadExpr& q);

// Sign of the real number q represents: -1, 0, +1.  Zero is structural (the
// representation is exact); otherwise the value is evaluated at increasing
// precision until it clears a scale-relative threshold.  Throws PrecisionLoss
// if 8192 bits do not settle it (no sane entry literal gets near that).
int sign(const QuadExpr& q, unsigned start_bits = 256);

// Entry-literal grammar (one lattice entry):
//   RAT        := ['-'] digits [ '/' digits ]
//   DEC        := ['-'] digits '.' digits [ ('e'|'E') ['-'|'+'] digits ]
//   SURD       := [RAT '*'] 'sqrt(' digits ')' [ '/' digits ]
//   ENTRY      := RAT | DEC | SURD | '-' SURD
// Decimals parse to exact rationals.  Throws ParseError.
QuadExpr parse_entry_literal(const std::string& s);

Rational parse_rational_literal(const std::string& s);

}  // namespace gaborcert
