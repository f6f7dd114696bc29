#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "dialg/error.hpp"

namespace dialg {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent pair of a monomial d^delta * e^eps.
struct Exponent {
  unsigned delta = 0;
  unsigned eps = 0;

  auto operator<=>(const Exponent&) const = default;
};

// Element of Z[d, e], stored as a sparse map from exponent pairs to nonzero
// arbitrary-precision integers. Every constructor and operation leaves the map
// normalized, so structural equality is polynomial equality.
class PolyCoeff {
 public:
  using TermMap = std::map<Exponent, Integer>;

  PolyCoeff() = default;
  PolyCoeff(long constant) { add_term({0, 0}, Integer(constant)); }  // NOLINT

  static PolyCoeff monomial(const Integer& c, unsigned delta_pow, unsigned eps_pow) {
    PolyCoeff p;
    p.add_term({delta_pow, eps_pow}, c);
    return p;
  }
  static PolyCoeff delta(unsigned power = 1) { return monomial(1, power, 0); }
  static PolyCoeff eps(unsigned power = 1) { return monomial(1, 0, power); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of d^i e^j (zero if absent).
  Integer coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(Exponent e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PolyCoeff& operator+=(const PolyCoeff& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyCoeff& operator-=(const PolyCoeff& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  PolyCoeff operator-() const {
    PolyCoeff r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend PolyCoeff operator+(PolyCoeff a, const PolyCoeff& b) { return a += b; }
  friend PolyCoeff operator-(PolyCoeff a, const PolyCoeff& b) { return a -= b; }
  friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b) {
    PolyCoeff r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        r.add_term({ea.delta + eb.delta, ea.eps + eb.eps}, Integer(ca * cb));
      }
    }
    return r;
  }
  PolyCoeff& operator*=(const PolyCoeff& o) { return *this = *this * o; }

  friend bool operator==(const PolyCoeff& a, const PolyCoeff& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

inline PolyCoeff poly_add(const PolyCoeff& a, const PolyCoeff& b) { return a + b; }
inline PolyCoeff poly_mul(const PolyCoeff& a, const PolyCoeff& b) { return a * b; }

namespace detail {
inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}
}  // namespace detail

// Evaluates p at (d, e) = (delta0, eps0). 0^0 is 1.
inline Rational specialize(const PolyCoeff& p, const Rational& delta0, const Rational& eps0) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    sum += Rational(c) * detail::rational_pow(delta0, e.delta) *
           detail::rational_pow(eps0, e.eps);
  }
  sum.canonicalize();
  return sum;
}

// Text form: terms in descending (d-degree, e-degree) order, each written as
// the signed integer coefficient followed by `*d^i` and `*e^j` for nonzero
// exponents, e.g. `1*d^2-1` or `2*d^1*e^1+3`. The zero polynomial is `0`.
inline std::string to_string(const PolyCoeff& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first && c > 0) out += '+';
    out += c.get_str();
    if (e.delta > 0) out += "*d^" + std::to_string(e.delta);
    if (e.eps > 0) out += "*e^" + std::to_string(e.eps);
    first = false;
  }
  return out;
}

// Accepts the text form above; zero exponents (`*e^0`), repeated factors and
// either factor order are tolerated and normalized.
inline PolyCoeff parse_poly(std::string_view text) {
  auto fail = [&](const char* why) {
    throw InvalidInput("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  auto digits = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::string(text.substr(start, pos - start));
  };
  if (text.empty()) fail("empty input");
  PolyCoeff result;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-' between terms");
    }
    Integer c(digits());
    if (negative) c = -c;
    Exponent e;
    while (pos < text.size() && text[pos] == '*') {
      ++pos;
      if (pos + 1 >= text.size() || text[pos + 1] != '^') fail("expected d^k or e^k");
      char var = text[pos];
      pos += 2;
      unsigned long k = std::stoul(digits());
      if (var == 'd') {
        e.delta += static_cast<unsigned>(k);
      } else if (var == 'e') {
        e.eps += static_cast<unsigned>(k);
      } else {
        fail("unknown variable");
      }
    }
    result.add_term(e, c);
  }
  return result;
}

// Accepts `p/q` or an integer; the result is reduced.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit_seen = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && digit_seen) {
      slash = true;
      digit_seen = false;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit_seen = true;
    } else {
      throw InvalidInput("cannot parse rational '" + s + "'");
    }
  }
  if (!digit_seen) throw InvalidInput("cannot parse rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace dialg
