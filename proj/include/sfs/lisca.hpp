#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sfs/continued_fraction.hpp"
#include "sfs/errors.hpp"

namespace sfs {

// PminusQStar is (p - q)^* = p - q^*, the fourth lens space in the same
// homeomorphism/orientation class.
enum class WitnessTarget { Q, PminusQ, QStar, PminusQStar };

// Declaration order is the tie-break order for certificates.
enum class LiscaFamily {
  F1_mh_pm1_coprime,
  F2_mh_pm1_gcd2,
  F3_h_times_m_pm1_divides_2m_mp1,
  F4_h_times_m_pm1_odd_divides_m_pm1,
};

enum class PmSign { Plus, Minus };

inline constexpr std::string_view to_string(WitnessTarget t) {
  switch (t) {
    case WitnessTarget::Q: return "Q";
    case WitnessTarget::PminusQ: return "PminusQ";
    case WitnessTarget::QStar: return "QStar";
    case WitnessTarget::PminusQStar: return "PminusQStar";
  }
  return "?";
}

inline constexpr std::string_view to_string(LiscaFamily f) {
  switch (f) {
    case LiscaFamily::F1_mh_pm1_coprime: return "F1_mh±1_coprime";
    case LiscaFamily::F2_mh_pm1_gcd2: return "F2_mh±1_gcd2";
    case LiscaFamily::F3_h_times_m_pm1_divides_2m_mp1: return "F3_h_times_m±1_divides_2m∓1";
    case LiscaFamily::F4_h_times_m_pm1_odd_divides_m_pm1: return "F4_h_times_m±1_odd_divides_m±1";
  }
  return "?";
}

inline constexpr std::string_view to_string(PmSign s) { return s == PmSign::Plus ? "Plus" : "Minus"; }

struct RCertificate {
  std::int64_t m = 0;
  WitnessTarget witness_target = WitnessTarget::Q;
  LiscaFamily family = LiscaFamily::F1_mh_pm1_coprime;
  std::int64_t h = 0;
  PmSign sign = PmSign::Plus;

  friend bool operator==(const RCertificate&, const RCertificate&) = default;
};

// Value of a family at (m, h, sign), or nothing when a side condition fails.
inline std::optional<std::int64_t> lisca_family_value(LiscaFamily f, std::int64_t m, std::int64_t h,
                                                      PmSign sign) {
  const std::int64_t pm = sign == PmSign::Plus ? 1 : -1;
  switch (f) {
    case LiscaFamily::F1_mh_pm1_coprime:
      if (h <= 0 || h >= m || std::gcd(h, m) != 1) return std::nullopt;
      return m * h + pm;
    case LiscaFamily::F2_mh_pm1_gcd2:
      if (h <= 0 || h >= m || std::gcd(h, m) != 2) return std::nullopt;
      return m * h + pm;
    case LiscaFamily::F3_h_times_m_pm1_divides_2m_mp1:
      if (h <= 1 || (2 * m - pm) % h != 0) return std::nullopt;
      return h * (m + pm);
    case LiscaFamily::F4_h_times_m_pm1_odd_divides_m_pm1:
      if (h <= 1 || h % 2 == 0 || (m + pm) % h != 0) return std::nullopt;
      return h * (m + pm);
  }
  return std::nullopt;
}

inline std::optional<std::int64_t> exact_sqrt(std::int64_t p) {
  if (p < 0) return std::nullopt;
  BigInt r;
  BigInt v(static_cast<long>(p));
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r != v) return std::nullopt;
  return r.get_si();
}

namespace detail {

inline void check_lisca_input(std::int64_t p, std::int64_t q) {
  require(p > q && q >= 1, "r_membership needs p > q >= 1");
  require(std::gcd(p, q) == 1, "r_membership needs gcd(p, q) = 1");
}

inline std::int64_t witness_value(std::int64_t p, std::int64_t q, WitnessTarget t) {
  switch (t) {
    case WitnessTarget::Q: return q;
    case WitnessTarget::PminusQ: return p - q;
    case WitnessTarget::QStar: return mod_inverse<std::int64_t>(q, p);
    case WitnessTarget::PminusQStar: return p - mod_inverse<std::int64_t>(q, p);
  }
  return 0;
}

inline std::int64_t h_upper(LiscaFamily f, std::int64_t m) {
  switch (f) {
    case LiscaFamily::F1_mh_pm1_coprime:
    case LiscaFamily::F2_mh_pm1_gcd2: return m - 1;
    case LiscaFamily::F3_h_times_m_pm1_divides_2m_mp1: return 2 * m + 1;
    case LiscaFamily::F4_h_times_m_pm1_odd_divides_m_pm1: return m + 1;
  }
  return 0;
}

}  // namespace detail

inline std::optional<RCertificate> r_membership(std::int64_t p, std::int64_t q) {
  detail::check_lisca_input(p, q);
  auto m = exact_sqrt(p);
  if (!m) return std::nullopt;
  for (auto target : {WitnessTarget::Q, WitnessTarget::PminusQ, WitnessTarget::QStar, WitnessTarget::PminusQStar}) {
    const std::int64_t want = detail::witness_value(p, q, target);
    for (auto fam : {LiscaFamily::F1_mh_pm1_coprime, LiscaFamily::F2_mh_pm1_gcd2,
                     LiscaFamily::F3_h_times_m_pm1_divides_2m_mp1,
                     LiscaFamily::F4_h_times_m_pm1_odd_divides_m_pm1}) {
      for (std::int64_t h = 1; h <= detail::h_upper(fam, *m); ++h) {
        for (auto sign : {PmSign::Plus, PmSign::Minus}) {
          auto v = lisca_family_value(fam, *m, h, sign);
          if (v && *v == want) return RCertificate{*m, target, fam, h, sign};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool r_member(const Rational& pq) {
  require(pq > Rational(1), "membership in R needs a rational > 1");
  return r_membership(to_int64(pq.num()), to_int64(pq.den())).has_value();
}

inline bool verify_certificate(std::int64_t p, std::int64_t q, const RCertificate& c) {
  if (p <= q || q < 1 || std::gcd(p, q) != 1) return false;
  if (c.m <= 0 || c.m * c.m != p) return false;
  auto v = lisca_family_value(c.family, c.m, c.h, c.sign);
  return v && *v == detail::witness_value(p, q, c.witness_target);
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> r_grid(std::int64_t p_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t m = 2; m * m <= p_max; ++m) {
    const std::int64_t p = m * m;
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1 && r_membership(p, q)) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace sfs
