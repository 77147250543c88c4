#pragma once

// Scalar layer: exact integers/rationals (boost cpp_int) and dynamic-precision
// reals (mpfr backend), plus a small complex template that works over any of
// them.  Eigen is given a full NumTraits for Real so dense solvers run at
// arbitrary precision; the adapter shipped with boost lacks infinity() and
// quiet_NaN() which Eigen 3.4 requires.

#include "gaborcert/boost_mp_compat.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gaborcert {

namespace mp = boost::multiprecision;

using BigInt   = mp::cpp_int;
using Rational = mp::cpp_rational;
using Real     = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

// mpfr precision is tracked in bits everywhere in this codebase; boost's
// default_precision() knob counts decimal digits.
inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(bits * 0.3010299956639812) + 3;
}

// RAII: set the ambient construction precision for Real, restore on exit.
// mpfr results inherit precision from operands, but *constructors* (including
// temporaries inside Eigen kernels) use the ambient default, so every
// precision-sensitive entry point opens one of these.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits)
      : saved_digits_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
  }
  ~ScopedPrecision() { Real::default_precision(saved_digits_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_digits_;
};

inline Real pi_real() { return 4 * atan(Real(1)); }

inline Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

// Nearest integer, halves away from zero (mpfr round semantics).
inline BigInt round_to_bigint(const Real& x) {
  return round(x).convert_to<BigInt>();
}

// ---------------------------------------------------------------------------
// Cx<T>: complex numbers over an arbitrary commutative scalar.  std::complex
// over non-builtin types is unspecified and its division needs sqrt/fabs,
// which cpp_rational lacks, so exact Gaussian-rational work comes through
// here.  Division is field division via the conjugate.

template <class T>
struct Cx {
  T re{}, im{};

  Cx() = default;
  Cx(T r) : re(std::move(r)) {}           // NOLINT: implicit by design
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Cx i() { return Cx(T(0), T(1)); }

  Cx operator-() const { return Cx(-re, -im); }
  Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
  Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
  Cx& operator*=(const Cx& o) {
    T r = re * o.re - im * o.im;
    im  = re * o.im + im * o.re;
    re  = std::move(r);
    return *this;
  }
  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    T n = b.re * b.re + b.im * b.im;
    if (n == T(0)) throw std::domain_error("Cx: division by zero");
    return Cx((a.re * b.re + a.im * b.im) / n,
              (a.im * b.re - a.re * b.im) / n);
  }
  friend bool operator==(const Cx& a, const Cx& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Cx& z) {
    return os << "(" << z.re << ", " << z.im << "i)";
  }
};

template <class T> Cx<T> conj(const Cx<T>& z) { return {z.re, -z.im}; }
template <class T> T norm2(const Cx<T>& z) { return z.re * z.re + z.im * z.im; }
template <class T> bool is_zero(const Cx<T>& z) { return z.re == T(0) && z.im == T(0); }

inline Real abs_cx(const Cx<Real>& z) { return hypot(z.re, z.im); }

template <class T>
Cx<T> pow_cx(Cx<T> z, unsigned k) {
  Cx<T> r(T(1));
  while (k) {
    if (k & 1u) r *= z;
    z *= z;
    k >>= 1u;
  }
  return r;
}

using CxReal = Cx<Real>;
using CxRat  = Cx<Rational>;

inline CxReal to_cx_real(const CxRat& z) { return {to_real(z.re), to_real(z.im)}; }

// Matrix/vector shorthands over the multiprecision scalar.
using MatReal = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VecReal = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

}  // namespace gaborcert

namespace Eigen {
template <>
struct NumTraits<gaborcert::Real> : GenericNumTraits<gaborcert::Real> {
  using Real = gaborcert::Real;
  static inline Real epsilon() { return std::numeric_limits<Real>::epsilon(); }
  static inline Real dummy_precision() {
    return epsilon() * 1000;
  }
  static inline Real highest() { return (std::numeric_limits<Real>::max)(); }
  static inline Real lowest() { return (std::numeric_limits<Real>::min)(); }
  static inline Real infinity() { return std::numeric_limits<Real>::infinity(); }
  static inline Real quiet_NaN() { return std::numeric_limits<Real>::quiet_NaN(); }
  static inline int digits10() { return static_cast<int>(Real::default_precision()); }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 30,
    MulCost = 40
  };
};
}  // namespace Eigen
