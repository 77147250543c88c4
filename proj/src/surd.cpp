#include "gaborcert/surd.hpp"
#include "gaborcert/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <vector>

namespace gaborcert {

std::pair<std::uint64_t, std::uint64_t> squarefree_split(std::uint64_t m) {
  if (m == 0) throw BadRange("squarefree_split: radicand must be positive");
  if (m > 1000000000000ull)
    throw BadRange("squarefree_split: radicand too large");
  std::uint64_t s = 1, f = 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    unsigned mult = 0;
    while (m % d == 0) { m /= d; ++mult; }
    for (unsigned j = 0; j + 1 < mult; j += 2) f *= d;
    if (mult & 1u) s *= d;
  }
  s *= m;  // leftover is prime (or 1)
  return {s, f};
}

QuadExpr::QuadExpr(Rational r) {
  if (r != 0) terms_[1] = std::move(r);
}

QuadExpr QuadExpr::root(std::uint64_t m, const Rational& coef) {
  auto [s, f] = squarefree_split(m);
  QuadExpr e;
  Rational c = coef * f;
  if (c != 0) e.terms_[s] = std::move(c);
  return e;
}

QuadExpr QuadExpr::operator-() const {
  QuadExpr e(*this);
  for (auto& [m, c] : e.terms_) c = -c;
  return e;
}

QuadExpr& QuadExpr::operator+=(const QuadExpr& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] += c;
  prune();
  return *this;
}

QuadExpr& QuadExpr::operator-=(const QuadExpr& o) {
  for (const auto& [m, c] : o.terms_) terms_[m] -= c;
  prune();
  return *this;
}

QuadExpr& QuadExpr::operator*=(const QuadExpr& o) {
  std::map<std::uint64_t, Rational> out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      // sqrt(m1) sqrt(m2) = g sqrt((m1/g)(m2/g)) with g = gcd: both radicands
      // are squarefree so the reduced product is squarefree again.
      std::uint64_t g = std::gcd(m1, m2);
      out[(m1 / g) * (m2 / g)] += c1 * c2 * g;
    }
  terms_ = std::move(out);
  prune();
  return *this;
}

void QuadExpr::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

bool QuadExpr::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational QuadExpr::rational_value() const {
  if (!is_rational()) throw BadRange("QuadExpr: not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational QuadExpr::coeff(std::uint64_t m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Real QuadExpr::value() const {
  Real v(0);
  for (const auto& [m, c] : terms_)
    v += to_real(c) * (m == 1 ? Real(1) : sqrt(Real(m)));
  return v;
}

std::string QuadExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first && c > 0) os << "+";
    first = false;
    if (m == 1) { os << c; continue; }
    if (c == -1) os << "-";
    else if (c != 1) os << c << "*";
    os << "sqrt(" << m << ")";
  }
  return os.str();
}

std::optional<QuadExpr> try_inverse(const QuadExpr& q) {
  if (q.is_zero()) return std::nullopt;
  if (q.is_rational()) return QuadExpr(Rational(1) / q.rational_value());

  // Closure basis: all squarefree products of the primes appearing in q's
  // radicands.  Multiplication by q maps the span of the basis into itself,
  // so 1/q, if it lives in the ring at all, solves M x = e_1 over Q.
  std::vector<std::uint64_t> primes;
  for (const auto& [m, c] : q.terms()) {
    std::uint64_t r = m;
    for (std::uint64_t d = 2; d * d <= r; ++d)
      while (r % d == 0) {
        if (std::find(primes.begin(), primes.end(), d) == primes.end())
          primes.push_back(d);
        r /= d;
      }
    if (r > 1 && std::find(primes.begin(), primes.end(), r) == primes.end())
      primes.push_back(r);
  }
  if (primes.size() > 6) return std::nullopt;

  std::vector<std::uint64_t> basis;
  for (std::size_t mask = 0; mask < (1u << primes.size()); ++mask) {
    std::uint64_t b = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (1u << i)) b *= primes[i];
    basis.push_back(b);
  }
  std::sort(basis.begin(), basis.end());
  const std::size_t d = basis.size();
  auto idx = [&](std::uint64_t m) {
    return std::lower_bound(basis.begin(), basis.end(), m) - basis.begin();
  };

  // column j of M = coordinates of q * sqrt(basis[j])
  std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    QuadExpr prod = q * QuadExpr::root(basis[j]);
    for (const auto& [m, c] : prod.terms()) M[idx(m)][j] = c;
  }

  // solve M x = e_1 by Gauss-Jordan over Q
  std::vector<Rational> rhs(d, Rational(0));
  rhs[0] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && M[piv][col] == 0) ++piv;
    if (piv == d) return std::nullopt;  // singular: inverse escapes the ring
    std::swap(M[piv], M[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational p = M[col][col];
    for (std::size_t j = col; j < d; ++j) M[col][j] /= p;
    rhs[col] /= p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (std::size_t j = col; j < d; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  QuadExpr inv;
  for (std::size_t i = 0; i < d; ++i) inv += QuadExpr::root(basis[i], rhs[i]);
  if (!((q * inv) == QuadExpr(Rational(1)))) return std::nullopt;
  return inv;
}

int sign(const QuadExpr& q, unsigned start_bits) {
  if (q.is_zero()) return 0;
  for (unsigned bits = start_bits; bits <= 8192; bits *= 2) {
    ScopedPrecision prec(bits);
    Real v = q.value();
    Real scale(0);
    for (const auto& [m, c] : q.terms())
      scale += abs(to_real(c)) * sqrt(Real(m));
    if (abs(v) > scale * ldexp(Real(1), -static_cast<int>(bits / 2)))
      return v > 0 ? 1 : -1;
  }
  throw PrecisionLoss("sign: surd expression too close to zero to resolve");
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

BigInt pow10(long e) {
  BigInt p = 1;
  for (long i = 0; i < e; ++i) p *= 10;
  return p;
}

// cpp_int's string constructor treats a leading 0 as an octal prefix
BigInt bigint_dec(const std::string& s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return BigInt(s.substr(i));
}

Rational parse_decimal(const std::string& s) {
  // [-]digits.digits[(e|E)[+-]digits]  -> exact rational
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.erase(0, 1);
  }
  long exp10 = 0;
  if (auto e = t.find_first_of("eE"); e != std::string::npos) {
    std::string es = t.substr(e + 1);
    t.erase(e);
    bool eneg = false;
    if (!es.empty() && (es[0] == '-' || es[0] == '+')) {
      eneg = es[0] == '-';
      es.erase(0, 1);
    }
    if (!all_digits(es) || es.size() > 6)
      throw ParseError("bad exponent in literal: " + s);
    exp10 = std::stol(es) * (eneg ? -1 : 1);
  }
  std::string ip = t, fp;
  if (auto dot = t.find('.'); dot != std::string::npos) {
    ip = t.substr(0, dot);
    fp = t.substr(dot + 1);
  }
  if (ip.empty()) ip = "0";
  if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
    throw ParseError("bad decimal literal: " + s);
  BigInt mant = bigint_dec(ip + fp);
  long shift = static_cast<long>(fp.size()) - exp10;
  Rational r = shift >= 0 ? Rational(mant, pow10(shift))
                          : Rational(mant * pow10(-shift), 1);
  return neg ? -r : r;
}

}  // namespace

Rational parse_rational_literal(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.erase(0, 1);
  }
  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || bigint_dec(den) == 0)
      throw ParseError("bad rational literal: " + s);
    Rational r{bigint_dec(num), bigint_dec(den)};
    return neg ? -r : r;
  }
  if (t.find('.') != std::string::npos || t.find_first_of("eE") != std::string::npos) {
    Rational r = parse_decimal(t);
    return neg ? -r : r;
  }
  if (!all_digits(t)) throw ParseError("bad integer literal: " + s);
  Rational r{bigint_dec(t)};
  return neg ? -r : r;
}

namespace {

// One summand of the entry grammar.
QuadExpr parse_entry_term(const std::string& s, const std::string& raw) {
  auto sq = s.find("sqrt(");
  if (sq == std::string::npos) return QuadExpr(parse_rational_literal(s));

  auto close = s.find(')', sq);
  if (close == std::string::npos)
    throw ParseError("unterminated sqrt in literal: " + raw);
  std::string rad = s.substr(sq + 5, close - sq - 5);
  if (!all_digits(rad)) throw ParseError("bad radicand in literal: " + raw);

  Rational coef(1);
  std::string head = s.substr(0, sq);
  if (!head.empty()) {
    if (head == "-") coef = -1;
    else if (head == "+") coef = 1;
    else if (head.back() == '*')
      coef = parse_rational_literal(head.substr(0, head.size() - 1));
    else
      throw ParseError("bad multiplier in literal: " + raw);
  }
  std::string tail = s.substr(close + 1);
  if (!tail.empty()) {
    if (tail[0] != '/' || !all_digits(tail.substr(1)) || bigint_dec(tail.substr(1)) == 0)
      throw ParseError("bad divisor in literal: " + raw);
    coef /= Rational(bigint_dec(tail.substr(1)));
  }
  return QuadExpr::root(std::stoull(rad), coef);
}

}  // namespace

QuadExpr parse_entry_literal(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty entry literal");

  // split into summands at top-level +/-; a sign right after an exponent
  // marker ('e'/'E' preceded by a digit or '.') belongs to a decimal
  QuadExpr total;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    bool split = i == s.size();
    if (!split) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') --depth;
      else if ((s[i] == '+' || s[i] == '-') && depth == 0 && i > start) {
        char prev = s[i - 1];
        bool exp_sign = (prev == 'e' || prev == 'E') && i >= 2 &&
                        (std::isdigit(static_cast<unsigned char>(s[i - 2])) || s[i - 2] == '.');
        split = !exp_sign;
      }
    }
    if (split) {
      if (i == start) throw ParseError("empty summand in literal: " + raw);
      total += parse_entry_term(s.substr(start, i - start), raw);
      start = i;  // keep the sign with the next term
    }
  }
  if (depth != 0) throw ParseError("unbalanced parens in literal: " + raw);
  return total;
}

}  // namespace gaborcert
