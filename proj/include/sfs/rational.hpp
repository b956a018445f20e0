#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "sfs/errors.hpp"

namespace sfs {

using BigInt = mpz_class;

inline std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

// Reduced fraction with positive denominator. Backed by GMP's mpq_t, which
// keeps values canonical after every arithmetic operation.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(parse_int(s));
      return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    } catch (const DivisionByZero&) {
      throw;
    } catch (const DomainError&) {
      throw DomainError("malformed rational: '" + s + "'");
    }
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  Rational reciprocal() const {
    if (sign() == 0) throw DivisionByZero("reciprocal of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.sign() == 0) throw DivisionByZero("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static BigInt parse_int(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw DomainError("empty integer");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw DomainError("bad digit");
    return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
  }

  mpq_class v_;
};

}  // namespace sfs
