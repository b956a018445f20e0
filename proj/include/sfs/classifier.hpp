#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sfs/continued_fraction.hpp"
#include "sfs/errors.hpp"
#include "sfs/lisca.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

enum class Rule {
  NoFillingBelowMinusOne,        // e0 <= -2: no symplectic filling at all
  SmoothObstruction,             // no smooth rational ball, so no symplectic one
  SpecialPrism,                  // M_p = Y(-1; 1/2, 1/p, 1/2)
  SpecialTetrahedral,            // -T3 = Y(-1; 2/3, 1/2, 1/3)
  SphericalClassification,       // known counts for spherical manifolds
  MinusOneUniquelyComplementary,
  MinusOneNotUniquelyComplementary,
  NonnegativeDihedral,
  NonnegativeBalanced,
  NonnegativeResidual,
};

inline constexpr std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::NoFillingBelowMinusOne: return "no_filling_e0_le_minus2";
    case Rule::SmoothObstruction: return "smooth_obstruction";
    case Rule::SpecialPrism: return "special_prism_M_p";
    case Rule::SpecialTetrahedral: return "special_minus_T3";
    case Rule::SphericalClassification: return "spherical_classification";
    case Rule::MinusOneUniquelyComplementary: return "e0_minus1_uniquely_complementary";
    case Rule::MinusOneNotUniquelyComplementary: return "e0_minus1_not_uniquely_complementary";
    case Rule::NonnegativeDihedral: return "e0_nonneg_dihedral";
    case Rule::NonnegativeBalanced: return "e0_nonneg_balanced";
    case Rule::NonnegativeResidual: return "e0_nonneg_residual";
  }
  return "?";
}

enum class SymplecticKind { None, Exactly, AtLeast, AtMost, Range, OutOfTheoremScope };

inline constexpr std::string_view to_string(SymplecticKind k) {
  switch (k) {
    case SymplecticKind::None: return "None";
    case SymplecticKind::Exactly: return "Exactly";
    case SymplecticKind::AtLeast: return "AtLeast";
    case SymplecticKind::AtMost: return "AtMost";
    case SymplecticKind::Range: return "Range";
    case SymplecticKind::OutOfTheoremScope: return "OutOfTheoremScope";
  }
  return "?";
}

struct SymplecticCount {
  SymplecticKind kind = SymplecticKind::None;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static SymplecticCount none() { return {}; }
  static SymplecticCount exactly(std::int64_t k) { return {SymplecticKind::Exactly, k, k}; }
  static SymplecticCount at_least(std::int64_t k) { return {SymplecticKind::AtLeast, k, 0}; }
  static SymplecticCount at_most(std::int64_t k) { return {SymplecticKind::AtMost, 0, k}; }
  static SymplecticCount range(std::int64_t a, std::int64_t b) { return {SymplecticKind::Range, a, b}; }
  static SymplecticCount out_of_scope() { return {SymplecticKind::OutOfTheoremScope, 0, 0}; }

  std::int64_t guaranteed_lower() const {
    switch (kind) {
      case SymplecticKind::Exactly:
      case SymplecticKind::AtLeast:
      case SymplecticKind::Range: return lo;
      default: return 0;
    }
  }
  std::optional<std::int64_t> upper() const {
    switch (kind) {
      case SymplecticKind::None: return 0;
      case SymplecticKind::Exactly:
      case SymplecticKind::AtMost:
      case SymplecticKind::Range: return hi;
      default: return std::nullopt;
    }
  }
  std::string str() const {
    switch (kind) {
      case SymplecticKind::Exactly: return "Exactly(" + std::to_string(lo) + ")";
      case SymplecticKind::AtLeast: return "AtLeast(" + std::to_string(lo) + ")";
      case SymplecticKind::AtMost: return "AtMost(" + std::to_string(hi) + ")";
      case SymplecticKind::Range: return "Range(" + std::to_string(lo) + ".." + std::to_string(hi) + ")";
      default: return std::string(to_string(kind));
    }
  }
  friend bool operator==(const SymplecticCount&, const SymplecticCount&) = default;
};

struct SmoothResult {
  bool bounds = false;
  std::optional<RCertificate> certificate;  // absent when the chain is empty (S^3)
  Figure2Form figure2;
};

// Lens space p/q with p/q = [-e0, expand(1/r2)] reduced to ((p-q), q mod (p-q)).
inline std::optional<std::pair<std::int64_t, std::int64_t>> lecuona_lens(const SeifertData& y) {
  if (y.e0 > -2) return std::nullopt;
  std::vector<std::int64_t> a{-y.e0};
  CFString mid = cf_expand(y.r[1].reciprocal());
  a.insert(a.end(), mid.entries().begin(), mid.entries().end());
  Rational pq = cf_evaluate(CFString::strict(a));
  std::int64_t p = to_int64(pq.num()), q = to_int64(pq.den());
  std::int64_t d = p - q;
  return std::make_pair(d, d == 1 ? 0 : q % d);
}

inline SmoothResult smooth_verdict(const SeifertData& y) {
  require_complementary(y);
  require(y.rational_homology_sphere(), y.str() + " is not a rational homology sphere");
  Rational direct = middle_framing_direct(y);
  Rational via = middle_framing_via_s1s2(y);
  if (direct != via) throw std::logic_error("twist paths disagree for " + y.str());

  SmoothResult out;
  out.figure2 = to_figure2(y);
  if (out.figure2.empty_chain()) {
    out.bounds = true;
  } else {
    Rational v = cf_evaluate(out.figure2.a2string);
    out.certificate = r_membership(to_int64(v.num()), to_int64(v.den()));
    out.bounds = out.certificate.has_value();
  }
  if (auto lens = lecuona_lens(y)) {
    bool other = lens->first == 1 || r_membership(lens->first, lens->second).has_value();
    if (other != out.bounds) throw std::logic_error("lens-space reduction disagrees for " + y.str());
  }
  return out;
}

enum class SphericalKind { Lens, DihedralNeg, TMinus3 };

struct SphericalInput {
  SphericalKind kind = SphericalKind::Lens;
  std::int64_t m = 0, h = 0, n = 0;
};

inline std::int64_t spherical_table(const SphericalInput& in) {
  switch (in.kind) {
    case SphericalKind::Lens:
      require(0 < in.h && in.h < in.m && std::gcd(in.h, in.m) == 1, "lens space L(m^2, mh-1) needs coprime 0 < h < m");
      return 2;
    case SphericalKind::DihedralNeg:
      require(mhn_admissible(in.m, in.h, in.n), "Y_{m,h,n} parameters out of range");
      if (in.h == 0) return in.n == 1 ? 3 : 2;
      return in.n == 2 ? 6 : 4;
    case SphericalKind::TMinus3: return 3;
  }
  throw DomainError("unknown spherical kind");
}

struct FillingVerdict {
  SeifertData y;
  SmoothResult smooth;
  SymplecticCount symplectic;
  Rule rule = Rule::NoFillingBelowMinusOne;
  std::optional<MHNForm> form;
  std::optional<std::int64_t> uniqueness_lower;  // at least this many fillings are not unique up to diffeo
  // e0 = -1, m = 1: the lower-bound sentence counts n, the exactness sentence n + 1
  std::optional<std::int64_t> bound_sentence_count;
  std::optional<std::int64_t> exact_sentence_count;
  std::optional<CFString> witness_chain;  // chain whose lens space carries theta = -2
};

inline bool t_type_legs(const SeifertData& y) {
  Rational third(BigInt(1), BigInt(3)), half(BigInt(1), BigInt(2)), two_thirds(BigInt(2), BigInt(3));
  return y.r[1] == half && ((y.r[0] == two_thirds && y.r[2] == third) || (y.r[0] == third && y.r[2] == two_thirds));
}

inline FillingVerdict symplectic_verdict(const SeifertData& y) {
  FillingVerdict v;
  v.y = y;
  v.smooth = smooth_verdict(y);
  auto finish = [&](SymplecticCount c, Rule r) {
    v.symplectic = c;
    v.rule = r;
    if (c.kind != SymplecticKind::None && c.kind != SymplecticKind::OutOfTheoremScope && !v.smooth.bounds)
      throw std::logic_error("symplectic count without a smooth rational ball for " + y.str());
    if (c.guaranteed_lower() >= 1) v.witness_chain = v.smooth.figure2.a2string;
    return v;
  };

  if (y.e0 <= -2) return finish(SymplecticCount::none(), Rule::NoFillingBelowMinusOne);

  const bool dihedral = is_dihedral_shape(y);
  if (y.e0 == -1) {
    if (dihedral) {
      const Rational& s = y.r[1];
      if (s.num() == 1) {
        std::int64_t p = to_int64(s.den());
        return finish(SymplecticCount::exactly(p == 2 ? 3 : 2), Rule::SpecialPrism);
      }
      auto f = recognize_minus_one_form(s);
      if (f && f->h > 0) {
        v.form = f;
        if (f->n > 2) v.uniqueness_lower = 2 * f->n - 2;
        return finish(SymplecticCount::exactly(f->n == 2 ? 6 : 4), Rule::SphericalClassification);
      }
      return finish(SymplecticCount::none(), Rule::SphericalClassification);
    }
    if (t_type_legs(y)) return finish(SymplecticCount::exactly(3), Rule::SpecialTetrahedral);

    LegStructure legs = leg_structure(y);
    if (!legs.uniquely_complementary) {
      if (!v.smooth.bounds) return finish(SymplecticCount::none(), Rule::SmoothObstruction);
      return finish(SymplecticCount::out_of_scope(), Rule::MinusOneNotUniquelyComplementary);
    }
    auto f = recognize_minus_one_form(y.r[1]);
    if (!f) return finish(SymplecticCount::none(), Rule::MinusOneUniquelyComplementary);
    v.form = f;
    const std::int64_t half_b = to_int64(y.r[0].den()) / 2;
    if (f->m > 1) {
      const std::int64_t full = 2 * f->n;
      if (f->n > 2) v.uniqueness_lower = 2 * f->n - 2;
      v.bound_sentence_count = full;
      v.exact_sentence_count = full;
      auto c = full <= half_b ? SymplecticCount::exactly(full) : SymplecticCount::at_least(std::min(half_b, full));
      return finish(c, Rule::MinusOneUniquelyComplementary);
    }
    if (f->n > 2) v.uniqueness_lower = f->n - 2;
    v.bound_sentence_count = f->n;
    v.exact_sentence_count = f->n + 1;
    auto c = f->n + 1 <= half_b ? SymplecticCount::exactly(f->n + 1)
                                : SymplecticCount::at_least(std::min(half_b, f->n));
    return finish(c, Rule::MinusOneUniquelyComplementary);
  }

  if (dihedral) {
    auto f = recognize_nonneg_form(y.e0, y.r[1]);
    if (!f) return finish(SymplecticCount::none(), Rule::NonnegativeDihedral);
    v.form = f;
    return finish(SymplecticCount::exactly(4), Rule::NonnegativeDihedral);
  }
  if (t_type_legs(y)) return finish(SymplecticCount::none(), Rule::SphericalClassification);
  if (auto f = recognize_nonneg_form(y.e0, y.r[1])) {
    v.form = f;
    return finish(SymplecticCount::range(4, 4 + (y.e0 == 0 ? 2 : 4)), Rule::NonnegativeBalanced);
  }
  if (!v.smooth.bounds) return finish(SymplecticCount::none(), Rule::SmoothObstruction);
  return finish(SymplecticCount::at_most(y.e0 == 0 ? 2 : 4), Rule::NonnegativeResidual);
}

inline bool corollary_bound_check(const std::vector<FillingVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const FillingVerdict& v) {
    auto u = v.symplectic.upper();
    if (u && *u > 6) return false;
    return v.symplectic.guaranteed_lower() <= 6;
  });
}

}  // namespace sfs
