#pragma once

// Lattices in R^{2n} (time-frequency space, coordinates ordered (xi, x)) and
// their complexifications in C^n.  Generators are stored exactly (surd ring);
// numeric views are produced at a caller-chosen precision.

#include "gaborcert/numeric.hpp"
#include "gaborcert/surd.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace gaborcert {

using MatRat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

struct Entry {
  QuadExpr exact;
  std::string literal;  // source text; regenerated when built programmatically
};

class Lattice {
 public:
  // gens: 2n x 2n, column j = j-th generator, coordinates (xi_1..xi_n, x_1..x_n).
  Lattice(int n, std::vector<Entry> entries_rowmajor);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const Entry& entry(int i, int j) const { return entries_[i * dim() + j]; }
  bool rational() const { return rational_; }

  Eigen::MatrixXd gens_d() const;
  MatReal gens_mp() const;      // at the ambient Real precision
  MatRat gens_q() const;        // throws BadRange unless rational()

 private:
  int n_;
  std::vector<Entry> entries_;  // row-major dim x dim
  bool rational_;
};

// Construction.  Doubles are dyadic rationals and convert exactly.
Lattice make_lattice(int n, const Eigen::MatrixXd& gens);
Lattice make_lattice(int n, const std::vector<std::string>& literals_rowmajor);
Lattice make_lattice_exact(int n, const std::vector<QuadExpr>& exact_rowmajor);

// Spec-file round trip.  Format: first non-comment line "n = <int>", then 2n
// non-comment lines of 2n whitespace-separated entry literals, one generator
// per line.  '#' starts a comment.
Lattice read_lattice(std::istream& in);
Lattice read_lattice_file(const std::string& path);
void write_lattice(const Lattice& L, std::ostream& out);

// |det gens|.  Exact surd-ring value, and numeric value at ambient precision.
QuadExpr covolume_exact(const Lattice& L);
Real covolume(const Lattice& L);

// Complexified lattice: generator j becomes z = x + i*xi in C^n.
struct ComplexLattice {
  int n = 0;
  std::vector<Cx<QuadExpr>> entries;  // row-major n x 2n, columns = generators
  bool rational = false;              // Gaussian-rational entries

  const Cx<QuadExpr>& entry(int i, int j) const { return entries[i * 2 * n + j]; }
  Eigen::MatrixXcd gens_cd() const;
  Cx<Real> entry_mp(int i, int j) const;  // ambient precision
};

ComplexLattice complexify(const Lattice& L);

// Adjoint (symplectic dual) lattice: generator matrix J * gens^-T with
// J = [[0, I], [-I, 0]].  Exact over Q when the lattice is rational; for surd
// lattices the inverse is attempted in the surd ring and falls back to dyadic
// approximations at the ambient precision (flagged by the return's .exact).
struct DualResult {
  Lattice lattice;
  bool exact;
};
DualResult symplectic_dual(const Lattice& L);

// Points of L with Euclidean norm <= R, sorted by (norm, coefficient lex).
// Throws RadiusTooLarge if more than cap points (or a 1e8-cell search box)
// would be visited.
struct LatticePoint {
  Eigen::VectorXd x;            // the point in R^{2n}
  std::vector<long> coeff;      // integer coordinates w.r.t. the generators
  double norm;
};
std::vector<LatticePoint> enumerate_points(const Lattice& L, double R,
                                           std::size_t cap = 1000000);

// Same, for a complex lattice: points z in C^n with |z| <= R.
struct ComplexLatticePoint {
  Eigen::VectorXcd z;
  std::vector<long> coeff;
  double norm;
};
std::vector<ComplexLatticePoint> enumerate_points(const ComplexLattice& Lc,
                                                  double R,
                                                  std::size_t cap = 1000000);

}  // namespace gaborcert
