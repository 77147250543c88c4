#include "doctest.h"

#include "gaborcert/errors.hpp"
#include "gaborcert/indices.hpp"
#include "gaborcert/lattice.hpp"
#include "gaborcert/numeric.hpp"
#include "gaborcert/surd.hpp"

#include <sstream>

using namespace gaborcert;

TEST_CASE("squarefree split") {
  CHECK(squarefree_split(1) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(squarefree_split(12) == std::pair<std::uint64_t, std::uint64_t>{3, 2});
  CHECK(squarefree_split(49) == std::pair<std::uint64_t, std::uint64_t>{1, 7});
  CHECK(squarefree_split(50) == std::pair<std::uint64_t, std::uint64_t>{2, 5});
  CHECK(squarefree_split(360) == std::pair<std::uint64_t, std::uint64_t>{10, 6});
  CHECK_THROWS_AS(squarefree_split(0), BadRange);
}

TEST_CASE("surd ring arithmetic") {
  QuadExpr r2 = QuadExpr::root(2), r3 = QuadExpr::root(3);
  QuadExpr s = r2 + r3;
  QuadExpr sq = s * s;  // 5 + 2 sqrt(6)
  CHECK(sq.coeff(1) == Rational(5));
  CHECK(sq.coeff(6) == Rational(2));
  CHECK(!sq.is_rational());

  QuadExpr d = QuadExpr::root(14) - QuadExpr::root(15);
  QuadExpr e = QuadExpr::root(14) + QuadExpr::root(15);
  CHECK((d * e) == QuadExpr(Rational(-1)));

  CHECK((r2 - r2).is_zero());
  CHECK(QuadExpr::root(8) == QuadExpr::root(2, Rational(2)));  // sqrt(8)=2 sqrt(2)

  ScopedPrecision prec(128);
  Real v = (QuadExpr(1) + QuadExpr::root(2)).value();
  CHECK(abs(v - (1 + sqrt(Real(2)))) < Real(1e-35));
}

TEST_CASE("surd ring inverses") {
  auto check_inv = [](const QuadExpr& q) {
    auto inv = try_inverse(q);
    REQUIRE(inv.has_value());
    CHECK((q * *inv) == QuadExpr(Rational(1)));
  };
  check_inv(QuadExpr(Rational(3, 4)));
  check_inv(QuadExpr::root(2));
  check_inv(QuadExpr::root(14) - QuadExpr::root(15));
  check_inv(QuadExpr(1) + QuadExpr::root(2));
  check_inv(QuadExpr::root(2) + QuadExpr::root(3) + QuadExpr::root(5));
  CHECK(!try_inverse(QuadExpr()).has_value());
}

TEST_CASE("entry literal grammar") {
  CHECK(parse_entry_literal("3").rational_value() == Rational(3));
  CHECK(parse_entry_literal("-3/7").rational_value() == Rational(-3, 7));
  CHECK(parse_entry_literal("0.45").rational_value() == Rational(9, 20));
  CHECK(parse_entry_literal("-1.25e-2").rational_value() == Rational(-1, 80));
  CHECK(parse_entry_literal("2.5e3").rational_value() == Rational(2500));
  CHECK(parse_entry_literal("sqrt(5)") == QuadExpr::root(5));
  CHECK(parse_entry_literal("-sqrt(5)") == -QuadExpr::root(5));
  CHECK(parse_entry_literal("3*sqrt(2)") == QuadExpr::root(2, Rational(3)));
  CHECK(parse_entry_literal("3/2*sqrt(5)") == QuadExpr::root(5, Rational(3, 2)));
  CHECK(parse_entry_literal("sqrt(2)/2") == QuadExpr::root(2, Rational(1, 2)));
  CHECK(parse_entry_literal("sqrt(8)") == QuadExpr::root(2, Rational(2)));
  CHECK(parse_entry_literal("1+sqrt(2)") == QuadExpr(1) + QuadExpr::root(2));
  CHECK(parse_entry_literal("-sqrt(14)-sqrt(15)") ==
        -(QuadExpr::root(14) + QuadExpr::root(15)));

  CHECK_THROWS_AS(parse_entry_literal("sqrt("), ParseError);
  CHECK_THROWS_AS(parse_entry_literal("abc"), ParseError);
  CHECK_THROWS_AS(parse_entry_literal("1..2"), ParseError);
  CHECK_THROWS_AS(parse_entry_literal("sqrt(x)"), ParseError);
  CHECK_THROWS_AS(parse_entry_literal("2/0"), ParseError);
  CHECK_THROWS_AS(parse_entry_literal("3+"), ParseError);

  // str() output reparses to the same element
  QuadExpr q = QuadExpr(Rational(-2, 3)) + QuadExpr::root(6, Rational(5, 7)) -
               QuadExpr::root(35);
  CHECK(parse_entry_literal(q.str()) == q);
}

TEST_CASE("complex template over exact scalars") {
  CxRat a(Rational(1), Rational(2)), b(Rational(3), Rational(-1));
  CHECK((a * b) == CxRat(Rational(5), Rational(5)));
  CHECK(conj(a) == CxRat(Rational(1), Rational(-2)));
  CHECK(norm2(a) == Rational(5));
  CHECK((a * b) / b == a);
  CHECK(pow_cx(CxRat::i(), 2) == CxRat(Rational(-1)));
  CHECK_THROWS_AS(a / CxRat(), std::domain_error);
}

TEST_CASE("rounding and precision scopes") {
  ScopedPrecision prec(256);
  CHECK(round_to_bigint(Real(2.5)) == 3);
  CHECK(round_to_bigint(Real(-2.5)) == -3);
  CHECK(round_to_bigint(Real(2.4)) == 2);
  Real x = sqrt(Real(2));
  {
    ScopedPrecision inner(64);
    Real y = sqrt(Real(2));
    CHECK(y.precision() < x.precision());
  }
  // sqrt(2)^2 - 2 vanishes to ~256 bits
  CHECK(abs(x * x - 2) < ldexp(Real(1), -250));
}

TEST_CASE("multi-index enumeration and counts") {
  auto ms = multiindices_upto(2, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms[0] == MultiIndex{0, 0});
  CHECK(ms[1] == MultiIndex{1, 0});
  CHECK(ms[2] == MultiIndex{0, 1});
  CHECK(ms[3] == MultiIndex{2, 0});
  CHECK(ms[4] == MultiIndex{1, 1});
  CHECK(ms[5] == MultiIndex{0, 2});
  for (int n = 1; n <= 4; ++n)
    for (int s = 0; s <= 4; ++s)
      CHECK(count_multiindices(n, s) ==
            BigInt(multiindices_upto(n, s).size()));

  CHECK(factorial(6) == 720);
  CHECK(multi_factorial({3, 2}) == 12);
  CHECK(multi_binom({3, 2}, {1, 2}) == 3);
  CHECK(falling_factorial({4, 2}, {2, 1}) == 24);
  CHECK(leq({1, 2}, {2, 2}));
  CHECK(!leq({3, 0}, {2, 2}));
}

TEST_CASE("k-subsets in lex order") {
  auto ss = subsets(4, 2);
  REQUIRE(ss.size() == 6);
  CHECK(ss[0] == std::vector<int>{0, 1});
  CHECK(ss[1] == std::vector<int>{0, 2});
  CHECK(ss[5] == std::vector<int>{2, 3});
  CHECK(subsets(5, 0).size() == 1);
  CHECK_THROWS_AS(subsets(3, 4), BadIndex);
}

namespace {

Lattice unit_lattice(int n) {
  return make_lattice(n, Eigen::MatrixXd::Identity(2 * n, 2 * n));
}

Lattice corollary_lattice() {
  // A Z^2 x Z^2 in (xi, x) coordinates with A = [[a,b],[c,d]],
  // a,b,c,d = sqrt(2), sqrt(3), sqrt(5), sqrt(7)
  return make_lattice(2, {"sqrt(2)", "sqrt(3)", "0", "0",   //
                          "sqrt(5)", "sqrt(7)", "0", "0",   //
                          "0", "0", "1", "0",               //
                          "0", "0", "0", "1"});
}

}  // namespace

TEST_CASE("lattice construction and file round trip") {
  auto L = corollary_lattice();
  CHECK(L.n() == 2);
  CHECK(!L.rational());
  CHECK(L.entry(0, 0).exact == QuadExpr::root(2));
  CHECK(L.entry(1, 1).exact == QuadExpr::root(7));
  CHECK(L.entry(2, 2).exact.rational_value() == 1);

  std::ostringstream os;
  write_lattice(L, os);
  std::istringstream is(os.str());
  auto L2 = read_lattice(is);
  CHECK(L2.n() == L.n());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(L2.entry(i, j).exact == L.entry(i, j).exact);

  std::istringstream bad1("n = 1\n1 0\n");
  CHECK_THROWS_AS(read_lattice(bad1), ParseError);
  std::istringstream bad2("m = 1\n1 0\n0 1\n");
  CHECK_THROWS_AS(read_lattice(bad2), ParseError);
  std::istringstream with_comments(
      "# demo\nn = 1\n1 0   # first generator\n0.5 0.5\n");
  auto L3 = read_lattice(with_comments);
  CHECK(L3.rational());
  CHECK(L3.entry(1, 1).exact.rational_value() == Rational(1, 2));
}

TEST_CASE("covolume: exact surd value vs high-precision reference") {
  ScopedPrecision prec(256);
  auto L = corollary_lattice();
  QuadExpr cv = covolume_exact(L);
  // |det| = |sqrt(2)sqrt(7) - sqrt(3)sqrt(5)| = sqrt(15) - sqrt(14)
  CHECK(cv == QuadExpr::root(15) - QuadExpr::root(14));
  Real ref = sqrt(Real(15)) - sqrt(Real(14));
  CHECK(abs(covolume(L) - ref) < Real(1e-50));
  CHECK(abs(covolume(L) - ref) < Real(1e-12));  // the headline tolerance
  CHECK(covolume(unit_lattice(2)) == 1);
}

TEST_CASE("complexification layout") {
  auto Lc = complexify(corollary_lattice());
  CHECK(Lc.n == 2);
  CHECK(!Lc.rational);
  // generator 0 = (xi = (sqrt2, sqrt5), x = 0) -> z = i(sqrt2, sqrt5)
  CHECK(Lc.entry(0, 0).re.is_zero());
  CHECK(Lc.entry(0, 0).im == QuadExpr::root(2));
  CHECK(Lc.entry(1, 0).im == QuadExpr::root(5));
  // generator 2 = (xi = 0, x = (1,0)) -> z = (1, 0)
  CHECK(Lc.entry(0, 2).re.rational_value() == 1);
  CHECK(Lc.entry(0, 2).im.is_zero());
  CHECK(complexify(unit_lattice(1)).rational);
}

TEST_CASE("symplectic dual: exact rational path") {
  // random-ish rational lattice, n = 2
  auto L = make_lattice(2, {"1", "1/2", "0", "-2/3",  //
                            "0", "1/3", "1", "0",     //
                            "2", "0", "1/5", "1",     //
                            "0", "1", "0", "3"});
  auto [Ld, exact] = symplectic_dual(L);
  CHECK(exact);
  CHECK(Ld.rational());

  // pairings: (dual gen)^T J (gen) must be integral; for the generator
  // matrices themselves (J gens^-T)^T J gens = gens^-1 (J^T J) gens = I
  MatRat G = L.gens_q(), Gd = Ld.gens_q();
  MatRat J = MatRat::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    J(i, 2 + i) = 1;
    J(2 + i, i) = -1;
  }
  MatRat P = Gd.transpose() * J * G;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(P(i, j) == (i == j ? Rational(1) : Rational(0)));

  // covolume product is exactly 1
  QuadExpr c1 = covolume_exact(L), c2 = covolume_exact(Ld);
  CHECK((c1 * c2).rational_value() == 1);

  // double dual returns -gens: a determinant-one change of basis
  auto [Ldd, exact2] = symplectic_dual(Ld);
  CHECK(exact2);
  CHECK(Ldd.gens_q() == MatRat(-G));
}

TEST_CASE("symplectic dual: surd ring path for the corollary lattice") {
  ScopedPrecision prec(256);
  auto L = corollary_lattice();
  auto [Ld, exact] = symplectic_dual(L);
  CHECK(exact);
  // covolume product 1, exactly in the ring
  CHECK((covolume_exact(L) * covolume_exact(Ld)).rational_value() == 1);
  // numeric cross-check of J gens^-T
  MatReal G = L.gens_mp(), Gd = Ld.gens_mp();
  MatReal J = MatReal::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    J(i, 2 + i) = Real(1);
    J(2 + i, i) = Real(-1);
  }
  MatReal ref = J * G.transpose().inverse();
  CHECK((Gd - ref).cwiseAbs().maxCoeff() < Real(1e-60));
}

TEST_CASE("symplectic dual: dyadic fallback still satisfies duality") {
  ScopedPrecision prec(256);
  // pivot radicands span 7 primes: the ring inverse gives up, numerics take over
  auto L = make_lattice(
      1, {"1+sqrt(2)+sqrt(3)+sqrt(5)+sqrt(7)+sqrt(11)+sqrt(13)+sqrt(17)", "0",  //
          "0", "1"});
  auto [Ld, exact] = symplectic_dual(L);
  CHECK(!exact);
  Real prod = covolume(L) * covolume(Ld);
  CHECK(abs(prod - 1) < Real(1e-60));
}

TEST_CASE("point enumeration") {
  auto pts = enumerate_points(unit_lattice(1), 1.5);
  REQUIRE(pts.size() == 9);  // (0,0), 4 of norm 1, 4 of norm sqrt(2)
  CHECK(pts[0].norm == 0);
  CHECK(pts[0].coeff == std::vector<long>{0, 0});
  for (std::size_t i = 1; i < 5; ++i) CHECK(pts[i].norm == doctest::Approx(1.0));
  for (std::size_t i = 5; i < 9; ++i)
    CHECK(pts[i].norm == doctest::Approx(std::sqrt(2.0)));
  // deterministic tie-break: lexicographic on coefficients
  CHECK(pts[1].coeff == std::vector<long>{-1, 0});

  CHECK_THROWS_AS(enumerate_points(unit_lattice(1), 1.5, 4), RadiusTooLarge);

  // oracle: dumb box scan on a skewed rational lattice
  auto L = make_lattice(1, {"1", "1/2", "0", "3/4"});
  auto fast = enumerate_points(L, 2.25);
  std::size_t slow = 0;
  Eigen::MatrixXd G = L.gens_d();
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b) {
      Eigen::Vector2d p = G * Eigen::Vector2d(a, b);
      if (p.norm() <= 2.25) ++slow;
    }
  CHECK(fast.size() == slow);
}

TEST_CASE("complex point enumeration matches the realified lattice") {
  auto Lc = complexify(unit_lattice(1));
  auto zpts = enumerate_points(Lc, 1.5);
  REQUIRE(zpts.size() == 9);
  CHECK(std::abs(zpts[8].z[0]) == doctest::Approx(std::sqrt(2.0)));
  // norms agree with the real enumeration
  auto rpts = enumerate_points(unit_lattice(1), 1.5);
  for (std::size_t i = 0; i < 9; ++i)
    CHECK(zpts[i].norm == doctest::Approx(rpts[i].norm));
}
