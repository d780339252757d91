#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyopt {

/// Arbitrary-precision rational number in canonical form: the denominator is
/// always positive and gcd(|num|, den) == 1. All arithmetic is exact.
///
/// Backed by GMP's mpq_class; the wrapper exists to guarantee canonical form
/// at every boundary (mpq_class itself does not canonicalize constructor
/// arguments, and comparisons on non-canonical values are unreliable).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long n, long d) : v_(n, d) { normalize(); }
  explicit Rational(const mpq_class& q) : v_(q) { normalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { normalize(); }

  /// Parses "p/q", "p", or "-p/q". Throws std::invalid_argument on junk,
  /// std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_), NoCanon{}); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("rational division by zero");
    return Rational(mpq_class(1) / v_, NoCanon{});
  }

  /// Serialized as "p/q", or just "p" when the value is an integer.
  std::string str() const {
    return is_integer() ? num().get_str() : v_.get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  struct NoCanon {};
  Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}

  void normalize() {
    if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
  }

  // Invariant: canonical (positive denominator, reduced). GMP arithmetic on
  // canonical operands yields canonical results.
  mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const std::string s(text);
  const auto slash = s.find('/');
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_int(s)) throw std::invalid_argument("not a rational: '" + s + "'");
    return Rational(mpz_class(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("not a rational: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return Rational(mpz_class(num), d);
}

inline Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }
inline std::strong_ordering rat_cmp(const Rational& a, const Rational& b) {
  return a <=> b;
}

}  // namespace polyopt
