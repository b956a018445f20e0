#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sfs/errors.hpp"
#include "sfs/rational.hpp"

namespace sfs {

enum class Strictness { Strict, Relaxed };

// Coefficient sequence of a Hirzebruch-Jung continued fraction
// [a0, a1, ..., an] = a0 - 1/(a1 - 1/(... - 1/an)).
class CFString {
 public:
  CFString() = default;

  static CFString strict(std::vector<std::int64_t> entries) {
    for (auto a : entries)
      require(a >= 2, "strict continued fraction entries must be >= 2, got " + std::to_string(a));
    return CFString(std::move(entries), Strictness::Strict);
  }
  static CFString relaxed(std::vector<std::int64_t> entries) {
    return CFString(std::move(entries), Strictness::Relaxed);
  }
  // Strict when every entry is >= 2, Relaxed otherwise.
  static CFString from(std::vector<std::int64_t> entries) {
    bool ok = std::all_of(entries.begin(), entries.end(), [](auto a) { return a >= 2; });
    return CFString(std::move(entries), ok ? Strictness::Strict : Strictness::Relaxed);
  }

  // Accepts "[2,2,3]", "[]" and tolerates surrounding whitespace.
  static CFString parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw DomainError("malformed continued fraction string: '" + std::string(text) + "'");
    std::vector<std::int64_t> out;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto comma = body.find(',', pos);
      std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      Rational v = Rational::parse(tok);
      if (!v.is_integer()) throw DomainError("non-integer continued fraction entry: '" + tok + "'");
      out.push_back(to_int64(v.num()));
      if (comma == std::string::npos) break;
      pos = comma + 1;
      if (pos == body.size()) throw DomainError("trailing comma in '" + std::string(text) + "'");
    }
    return from(std::move(out));
  }

  const std::vector<std::int64_t>& entries() const { return entries_; }
  Strictness strictness() const { return strictness_; }
  bool is_strict() const { return strictness_ == Strictness::Strict; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  CFString reversed() const {
    return CFString(std::vector<std::int64_t>(entries_.rbegin(), entries_.rend()), strictness_);
  }
  CFString prefix(std::size_t k) const {
    return from(std::vector<std::int64_t>(entries_.begin(), entries_.begin() + std::min(k, size())));
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(entries_[i]);
    }
    return out + "]";
  }

  friend bool operator==(const CFString& a, const CFString& b) { return a.entries_ == b.entries_; }
  friend auto operator<=>(const CFString& a, const CFString& b) { return a.entries_ <=> b.entries_; }

 private:
  CFString(std::vector<std::int64_t> e, Strictness s) : entries_(std::move(e)), strictness_(s) {}

  std::vector<std::int64_t> entries_;
  Strictness strictness_ = Strictness::Strict;
};

inline CFString cf_expand(const Rational& r) {
  require(r > Rational(1), "cf_expand needs a rational > 1, got " + r.str());
  std::vector<std::int64_t> out;
  Rational x = r;
  for (;;) {
    BigInt a = x.ceil();
    out.push_back(to_int64(a));
    Rational rest = Rational(a) - x;
    if (rest.sign() == 0) break;
    Rational next = rest.reciprocal();
    // a - x lies in (0,1), so the denominator strictly drops at every step.
    if (!(next.den() < x.den())) throw std::logic_error("cf_expand: denominators failed to decrease");
    x = next;
  }
  return CFString::strict(std::move(out));
}

inline Rational cf_evaluate(const CFString& s) {
  if (s.empty()) throw DomainError("the empty continued fraction has no value");
  Rational v(s[s.size() - 1]);
  for (std::size_t i = s.size() - 1; i-- > 0;) {
    if (v.sign() == 0) throw DivisionByZero("continued fraction " + s.str() + " has a zero suffix");
    v = Rational(s[i]) - v.reciprocal();
  }
  return v;
}

// 1/[s] with the convention 1/[] = 0.
inline Rational cf_reciprocal(const CFString& s) {
  if (s.empty()) return Rational(0);
  Rational v = cf_evaluate(s);
  if (v.sign() == 0) throw DivisionByZero("continued fraction " + s.str() + " evaluates to 0");
  return v.reciprocal();
}

// Point rule: row i carries a_i - 1 dots and starts in the column where row
// i-1 ended; the dual entry for a column is its dot count plus one.
inline CFString riemenschneider_dual(const CFString& s) {
  require(s.is_strict() && !s.empty(), "riemenschneider_dual needs a nonempty strict string");
  std::vector<std::int64_t> columns;
  std::size_t col = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::int64_t d = 0; d < s[i] - 1; ++d) {
      if (d > 0) ++col;
      if (col >= columns.size()) columns.push_back(0);
      ++columns[col];
    }
  }
  for (auto& c : columns) c += 1;
  return CFString::strict(std::move(columns));
}

template <class Int>
Int mod_inverse(const Int& q, const Int& p) {
  require(Int(0) < q && q < p, "mod_inverse needs 0 < q < p");
  Int r0 = p, r1 = q, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int k = r0 / r1;
    Int r2 = r0 - k * r1;
    Int t2 = t0 - k * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  require(r0 == 1, "mod_inverse needs gcd(q, p) = 1");
  Int out = t0 % p;
  if (out < 0) out += p;
  return out;
}

// p/q -> p/q*, which is the value of the reversed string.
inline Rational cf_reverse_value(const CFString& s) {
  require(s.is_strict() && !s.empty(), "cf_reverse_value needs a nonempty strict string");
  Rational v = cf_evaluate(s);
  BigInt p = v.num(), q = v.den();
  return Rational(p, mod_inverse<BigInt>(q, p));
}

inline std::int64_t i_value(const CFString& s) {
  std::int64_t total = 0;
  for (auto a : s.entries()) total += a - 3;
  return total;
}

struct FramingSplit {
  std::int64_t n = 0;
  CFString tail;
};

// x = -n + 1/[tail] with [tail] > 1, or tail = [] when x is an integer.
inline FramingSplit split_integer_part(const Rational& x) {
  FramingSplit out;
  BigInt n = -x.floor();
  out.n = to_int64(n);
  Rational frac = x + Rational(n);
  if (frac.sign() != 0) out.tail = cf_expand(frac.reciprocal());
  return out;
}

inline FramingSplit split_framing(const Rational& x) {
  require(x.sign() < 0, "split_framing needs a negative rational, got " + x.str());
  return split_integer_part(x);
}

struct EquivPair {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// For s = [2 x t, a_t, ...] with a_t > 2 and value p/q: (p-q)/(q mod (p-q))
// against [a_t - 1, a_{t+1}, ...].
inline EquivPair lemma_equiv_check(const CFString& s) {
  require(s.is_strict(), "lemma_equiv_check needs a strict string");
  std::size_t t = 0;
  while (t < s.size() && s[t] == 2) ++t;
  require(t >= 1 && t < s.size(), "lemma_equiv_check needs a leading run of 2s followed by an entry > 2");
  Rational v = cf_evaluate(s);
  BigInt p = v.num(), q = v.den();
  BigInt d = p - q;
  BigInt qr = q % d;
  std::vector<std::int64_t> rest(s.entries().begin() + static_cast<std::ptrdiff_t>(t), s.entries().end());
  rest[0] -= 1;
  return {Rational(d, qr), cf_evaluate(CFString::strict(std::move(rest)))};
}

// Every strict string with 1..max_len entries drawn from [2, max_entry],
// ordered by length and then lexicographically.
inline std::vector<CFString> strict_strings(std::size_t max_len, std::int64_t max_entry,
                                            std::size_t min_len = 1) {
  std::vector<CFString> out;
  for (std::size_t len = std::max<std::size_t>(min_len, 1); len <= max_len; ++len) {
    std::vector<std::int64_t> cur(len, 2);
    if (max_entry < 2) break;
    for (;;) {
      out.push_back(CFString::strict(cur));
      std::size_t i = len;
      while (i > 0 && cur[i - 1] == max_entry) cur[--i] = 2;
      if (i == 0) break;
      ++cur[i - 1];
    }
  }
  return out;
}

}  // namespace sfs
