#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sfs/classifier.hpp"
#include "sfs/continued_fraction.hpp"
#include "sfs/lisca.hpp"
#include "sfs/matrix.hpp"
#include "sfs/plumbing.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert.hpp"
#include "sfs/theta.hpp"

namespace sfs {

struct GridSpec {
  std::size_t cf_len = 6;          // strict strings for the cf suite
  std::int64_t cf_entry = 6;
  std::int64_t cf_p_max = 400;     // round-trip rationals
  std::size_t max_len = 5;         // plumbing strings a1, a2ext
  std::int64_t max_entry = 6;
  std::size_t max_total_len = 5;   // len(a1) + len(a2ext)
  std::int64_t p_max = 2500;       // Lisca suite
  std::int64_t m_max = 30;
  std::int64_t n_max = 4;
  std::int64_t e0_min = -4;
  std::int64_t e0_max = 4;
  std::int64_t e0_brute_max = 100;
  std::int64_t nonbalanced_e0_max = 4;
  std::int64_t nonbalanced_p_max = 60;
  std::size_t leg_len = 3;         // legs of the Seifert grid
  std::int64_t leg_entry = 5;
  unsigned jobs = 1;
};

struct CheckReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::optional<std::string> first_failure;
  bool ok() const { return failures == 0; }
};

using Failure = std::optional<std::string>;

// Runs check(i) for i in [0, count) across `jobs` threads; the reported
// counterexample is the one with the lowest index, so output is independent
// of the thread count.
inline CheckReport run_indexed(std::string name, std::size_t count, unsigned jobs,
                               const std::function<Failure(std::size_t)>& check) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  struct Partial {
    std::size_t failures = 0;
    std::size_t first = std::numeric_limits<std::size_t>::max();
    std::string message;
  };
  std::vector<Partial> parts(jobs);
  auto work = [&](unsigned w) {
    Partial& p = parts[w];
    for (std::size_t i = w; i < count; i += jobs) {
      Failure f;
      try {
        f = check(i);
      } catch (const std::exception& e) {
        f = std::string("exception: ") + e.what();
      }
      if (!f) continue;
      ++p.failures;
      if (i < p.first) {
        p.first = i;
        p.message = *f;
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  CheckReport r;
  r.name = std::move(name);
  r.instances = count;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& p : parts) {
    r.failures += p.failures;
    if (p.failures && p.first < best) {
      best = p.first;
      r.first_failure = p.message;
    }
  }
  return r;
}

template <class T, class F>
CheckReport run_items(std::string name, const std::vector<T>& items, unsigned jobs, F check) {
  return run_indexed(std::move(name), items.size(), jobs, [&](std::size_t i) { return check(items[i]); });
}

// ---- grids ----

struct PlumbingInstance {
  CFString a1;
  CFString a2ext;
  std::string str() const { return "a1=" + a1.str() + " a2ext=" + a2ext.str(); }
};

inline std::vector<PlumbingInstance> plumbing_grid(const GridSpec& g) {
  auto strings = strict_strings(g.max_len, g.max_entry);
  std::vector<PlumbingInstance> out;
  for (const auto& a1 : strings)
    for (const auto& a2 : strings)
      if (a1.size() + a2.size() <= g.max_total_len) out.push_back({a1, a2});
  return out;
}

struct ComplementaryInstance {
  std::int64_t e0;
  CFString leg1;  // expansion of 1/r1
  CFString leg2;  // expansion of 1/r2
};

inline SeifertData make_seifert(const ComplementaryInstance& c) {
  Rational r1 = cf_evaluate(c.leg1).reciprocal();
  return normalize(c.e0, {r1, cf_evaluate(c.leg2).reciprocal(), Rational(1) - r1});
}

// Y(e0; r, s, 1 - r) for a single e0 over the given legs, sorted by the
// normalized invariants and deduplicated.
inline std::vector<SeifertData> seifert_slice(std::int64_t e0, const std::vector<CFString>& legs) {
  std::vector<SeifertData> out;
  out.reserve(legs.size() * legs.size());
  for (const auto& l1 : legs)
    for (const auto& l2 : legs) out.push_back(make_seifert({e0, l1, l2}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Normalizing keeps e0 (every leg value lies in (0, 1)), so the slices
// concatenate into a sorted grid.
inline std::vector<SeifertData> seifert_grid(const GridSpec& g) {
  auto legs = strict_strings(g.leg_len, g.leg_entry);
  std::vector<SeifertData> out;
  for (std::int64_t e0 = g.e0_min; e0 <= g.e0_max; ++e0) {
    auto slice = seifert_slice(e0, legs);
    out.insert(out.end(), std::make_move_iterator(slice.begin()), std::make_move_iterator(slice.end()));
  }
  return out;
}

// ---- suites ----

inline std::vector<CheckReport> suite_cf(const GridSpec& g) {
  std::vector<CheckReport> out;
  std::vector<Rational> rationals;
  for (std::int64_t p = 2; p <= g.cf_p_max; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) rationals.emplace_back(BigInt(p), BigInt(q));
  out.push_back(run_items("cf.round_trip", rationals, g.jobs, [](const Rational& r) -> Failure {
    CFString s = cf_expand(r);
    if (!s.is_strict() || cf_evaluate(s) != r) return r.str() + " -> " + s.str();
    return std::nullopt;
  }));

  auto strings = strict_strings(g.cf_len, g.cf_entry);
  out.push_back(run_items("cf.dual_involution", strings, g.jobs, [](const CFString& s) -> Failure {
    CFString d = riemenschneider_dual(s);
    Rational v = cf_evaluate(s);
    Rational want(v.num(), v.num() - v.den());
    if (riemenschneider_dual(d) != s || cf_evaluate(d) != want) return s.str() + " dual " + d.str();
    return std::nullopt;
  }));
  out.push_back(run_items("cf.i_value_dual_length", strings, g.jobs, [](const CFString& s) -> Failure {
    auto n1 = static_cast<std::int64_t>(s.size());
    auto n3 = static_cast<std::int64_t>(riemenschneider_dual(s).size());
    if (i_value(s) != n3 - n1 - 1) return s.str();
    return std::nullopt;
  }));
  out.push_back(run_items("cf.reversal_mod_inverse", strings, g.jobs, [](const CFString& s) -> Failure {
    Rational v = cf_evaluate(s);
    Rational want(v.num(), mod_inverse<BigInt>(v.den(), v.num()));
    if (cf_reverse_value(s) != want || cf_evaluate(s.reversed()) != want) return s.str();
    return std::nullopt;
  }));
  out.push_back(run_items("cf.split_framing", strings, g.jobs, [](const CFString& s) -> Failure {
    for (std::int64_t n = -3; n <= 3; ++n) {
      Rational x = Rational(-n) + cf_evaluate(s).reciprocal();
      FramingSplit f = split_integer_part(x);
      if (f.n != n || f.tail != s) return s.str() + " n=" + std::to_string(n);
      if (x.sign() < 0) {
        FramingSplit h = split_framing(x);
        if (h.n != n || h.tail != s) return s.str() + " n=" + std::to_string(n);
      }
    }
    for (std::int64_t k = 1; k <= 3; ++k) {
      FramingSplit f = split_framing(Rational(-k));
      if (f.n != k || !f.tail.empty()) return "integer " + std::to_string(-k);
    }
    return std::nullopt;
  }));
  std::vector<CFString> admissible;
  for (const auto& s : strings) {
    std::size_t t = 0;
    while (t < s.size() && s[t] == 2) ++t;
    if (t >= 1 && t < s.size()) admissible.push_back(s);
  }
  out.push_back(run_items("cf.lemma_equiv", admissible, g.jobs, [](const CFString& s) -> Failure {
    EquivPair e = lemma_equiv_check(s);
    if (!e.holds()) return s.str() + ": " + e.lhs.str() + " vs " + e.rhs.str();
    return std::nullopt;
  }));
  return out;
}

inline bool is_class_v(std::int64_t p, std::int64_t q) {
  auto m = exact_sqrt(p);
  if (!m) return false;
  for (std::int64_t h = 1; h < *m; ++h)
    if (std::gcd(h, *m) == 1 && *m * h - 1 == q) return true;
  return false;
}

inline std::vector<CheckReport> suite_lisca(const GridSpec& g) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t p = 2; p <= g.p_max; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
  std::vector<CheckReport> out;
  auto label = [](std::int64_t p, std::int64_t q) { return std::to_string(p) + "/" + std::to_string(q); };
  out.push_back(run_items("lisca.certificates", pairs, g.jobs, [&](const auto& pq) -> Failure {
    auto [p, q] = pq;
    auto c = r_membership(p, q);
    if (c && !verify_certificate(p, q, *c)) return label(p, q);
    auto cs = r_membership(p, mod_inverse<std::int64_t>(q, p));
    if (c.has_value() != cs.has_value()) return label(p, q) + " q* closure";
    if (c.has_value() != r_membership(p, p - q).has_value()) return label(p, q) + " p-q closure";
    return std::nullopt;
  }));
  auto members = r_grid(g.p_max);
  out.push_back(run_items("lisca.i_bound_and_class_v", members, g.jobs, [&](const auto& pq) -> Failure {
    auto [p, q] = pq;
    std::int64_t i = i_value(cf_expand(Rational(BigInt(p), BigInt(q))));
    if (i > 1) return label(p, q) + " I=" + std::to_string(i);
    if ((i == 1) != is_class_v(p, q)) return label(p, q) + " class V mismatch";
    return std::nullopt;
  }));
  return out;
}

inline std::vector<CFString> tridiagonal_grid(const GridSpec& g) {
  auto strict = strict_strings(g.max_len, g.max_entry);
  std::vector<CFString> out = strict;
  for (const auto& s : strict) {
    std::vector<std::int64_t> e = s.entries();
    e[0] = 1;
    out.push_back(CFString::from(std::move(e)));
  }
  return out;
}

inline std::vector<CheckReport> suite_matrix(const GridSpec& g) {
  std::vector<CheckReport> out;
  auto chains = tridiagonal_grid(g);
  out.push_back(run_items("matrix.tridiagonal", chains, g.jobs, [](const CFString& s) -> Failure {
    TridiagSpec t(s);
    ExactMatrix m = t.matrix();
    Rational det = determinant(m);
    if (det != Rational(signed_det(t))) return s.str() + " det";
    if (det.sign() == 0) return std::nullopt;
    ExactMatrix inv = q_inverse_direct(m);
    if (tridiag_inverse(t) != inv) return s.str() + " closed-form inverse";
    EdgeColumns cols = inverse_edge_columns(t);
    if (cols.first != inv.col(0) || cols.last != inv.col(s.size() - 1)) return s.str() + " edge columns";
    if (s.is_strict()) {
      if (!dot_identity_check(t).holds()) return s.str() + " dot identity";
      if (Rational(uv_vectors(t).v[0]) != Rational(cf_evaluate(s).den())) return s.str() + " v first entry";
    }
    return std::nullopt;
  }));
  auto grid = plumbing_grid(g);
  out.push_back(run_items("matrix.block_inverse", grid, g.jobs, [](const PlumbingInstance& x) -> Failure {
    PlumbingQ q = assemble_q(x.a1, x.a2ext);
    if (q_inverse_blocks(q) != q_inverse_direct(q.matrix)) return x.str();
    return std::nullopt;
  }));
  out.push_back(run_items("matrix.row_relation", grid, g.jobs, [](const PlumbingInstance& x) -> Failure {
    RowRelationReport r = appendix_row_relation(assemble_q(x.a1, x.a2ext));
    if (!r.rows_relation || !r.product_shape) return x.str();
    return std::nullopt;
  }));
  return out;
}

// (p - q)/q' for p/q = [a2ext]; the lens space is S^3 when p - q = 1.
inline bool reduced_lens_bounds(const CFString& a2ext) {
  Rational v = cf_evaluate(a2ext);
  std::int64_t p = to_int64(v.num()), q = to_int64(v.den());
  std::int64_t d = p - q;
  if (d == 1) return true;
  return r_membership(d, q % d).has_value();
}

inline std::vector<CheckReport> suite_theta(const GridSpec& g) {
  std::vector<CheckReport> out;
  auto grid = plumbing_grid(g);
  out.push_back(run_items("theta.formula_vs_matrix", grid, g.jobs, [](const PlumbingInstance& x) -> Failure {
    ThetaResult a = theta_canonical_formula(x.a1, x.a2ext);
    ThetaResult b = theta_canonical_matrix(x.a1, x.a2ext);
    if (a != b) return x.str() + ": " + a.theta.str() + " vs " + b.theta.str();
    return std::nullopt;
  }));
  out.push_back(run_items("theta.proof_identities", grid, g.jobs, [](const PlumbingInstance& x) -> Failure {
    for (const auto& id : proof_lemma_checks(x.a1, x.a2ext))
      if (!id.holds()) return x.str() + " " + id.name;
    return std::nullopt;
  }));
  std::vector<PlumbingInstance> bounding;
  for (const auto& x : grid)
    if (reduced_lens_bounds(x.a2ext)) bounding.push_back(x);
  out.push_back(run_items("theta.above_minus_two", bounding, g.jobs, [](const PlumbingInstance& x) -> Failure {
    Rational t = theta_canonical_formula(x.a1, x.a2ext).theta;
    if (!(t > Rational(-2))) return x.str() + " theta=" + t.str();
    return std::nullopt;
  }));
  auto lens = strict_strings(g.max_len, g.max_entry);
  out.push_back(run_items("theta.lens_closed_form", lens, g.jobs, [](const CFString& s) -> Failure {
    if (theta_lens_canonical(s) != theta_lens_closed_form(s)) return s.str();
    return std::nullopt;
  }));
  return out;
}

struct MH {
  std::int64_t m, h;
};

inline std::vector<MH> coprime_mh(std::int64_t m_max) {
  std::vector<MH> out;
  for (std::int64_t m = 2; m <= m_max; ++m)
    for (std::int64_t h = 1; h < m; ++h)
      if (std::gcd(h, m) == 1) out.push_back({m, h});
  return out;
}

struct MHN {
  std::int64_t m, h, n;
  std::string str() const {
    return "(" + std::to_string(m) + "," + std::to_string(h) + "," + std::to_string(n) + ")";
  }
};

inline std::vector<MHN> mhn_grid(std::int64_t m_max, std::int64_t n_max) {
  std::vector<MHN> out;
  for (std::int64_t n = 1; n <= n_max; ++n) out.push_back({1, 0, n});
  for (auto [m, h] : coprime_mh(m_max))
    for (std::int64_t n = 1; n <= n_max; ++n) out.push_back({m, h, n});
  return out;
}

struct E0PQ {
  std::int64_t e0, p, q;
  std::string str() const {
    return "e0=" + std::to_string(e0) + " p/q=" + std::to_string(p) + "/" + std::to_string(q);
  }
};

inline std::vector<E0PQ> nonbalanced_grid(const GridSpec& g) {
  std::vector<E0PQ> out;
  for (std::int64_t e0 = 0; e0 <= g.nonbalanced_e0_max; ++e0)
    for (std::int64_t p = 2; p <= g.nonbalanced_p_max; ++p)
      for (std::int64_t q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) out.push_back({e0, p, q});
  return out;
}

inline std::vector<CheckReport> suite_dihedral(const GridSpec& g) {
  std::vector<CheckReport> out;
  auto mh = coprime_mh(g.m_max);
  out.push_back(run_items("dihedral.identities", mh, g.jobs, [](const MH& x) -> Failure {
    for (std::int64_t e0 = 0;; ++e0) {
      const std::int64_t q = (e0 + 1) * (x.m * x.h - 1) - e0 * x.m * x.m;
      if (q <= 0) break;
      Section6Report r = section6_identities(x.m, x.h, e0);
      if (r.p_prime != (x.m - x.h) * (x.m - x.h) || !r.inverse_ok || !r.eq5_ok ||
          (r.convergent_ok && !*r.convergent_ok))
        return "m=" + std::to_string(x.m) + " h=" + std::to_string(x.h) + " e0=" + std::to_string(e0);
    }
    return std::nullopt;
  }));
  const std::int64_t e0_max = g.e0_brute_max;
  out.push_back(run_items("dihedral.unique_e0", mh, g.jobs, [e0_max](const MH& x) -> Failure {
    const std::int64_t b = x.m * x.m - x.m * x.h + 1, m2 = x.m * x.m;
    std::vector<std::int64_t> hits;
    for (std::int64_t e0 = 0; e0 <= e0_max; ++e0)
      if ((e0 + 1) * b < m2 && m2 < (e0 + 2) * b) hits.push_back(e0);
    if (hits.size() != 1 || hits[0] != unique_e0(x.m, x.h))
      return "m=" + std::to_string(x.m) + " h=" + std::to_string(x.h);
    return std::nullopt;
  }));
  auto mhn = mhn_grid(g.m_max, g.n_max);
  out.push_back(run_items("dihedral.dihedral_round_trip", mhn, g.jobs, [](const MHN& x) -> Failure {
    SeifertData y = y_mhn(x.m, x.h, x.n);
    DihedralParams d = dihedral_from_seifert(y);
    if (d != y_mhn_dihedral(x.m, x.h, x.n) || seifert_from_dihedral(d) != y) return x.str();
    return std::nullopt;
  }));
  auto nb = nonbalanced_grid(g);
  out.push_back(run_items("dihedral.nonbalanced_theta", nb, g.jobs, [](const E0PQ& x) -> Failure {
    NonbalancedReport r = nonbalanced_report(x.e0, Rational(BigInt(x.p), BigInt(x.q)));
    if (!r.consistent()) return x.str() + " inconsistent";
    if (r.theta_minus.is_integer()) return x.str() + " theta- integral " + r.theta_minus.str();
    return std::nullopt;
  }));
  out.push_back(run_items("dihedral.nonbalanced_theta_plus", nb, g.jobs, [](const E0PQ& x) -> Failure {
    NonbalancedReport r = nonbalanced_report(x.e0, Rational(BigInt(x.p), BigInt(x.q)));
    if (r.theta_plus != Rational(-2)) return std::nullopt;
    if (r_member(cf_evaluate(r.rs))) return x.str() + " theta+ = -2 with r/s in R";
    Rational half(BigInt(1), BigInt(2));
    SeifertData y = normalize(x.e0, {half, Rational(BigInt(x.q), BigInt(x.p)), half});
    if (smooth_verdict(y).bounds) return x.str() + " theta+ = -2 on a smoothly bounding space";
    return std::nullopt;
  }));
  return out;
}

// e0 read off the surgery-form data (n, x = -n + 1/[a2]) without normalizing.
inline std::optional<std::int64_t> e0_from_figure2(const Figure2Form& f) {
  Rational x = Rational(-f.n) + cf_reciprocal(f.a2string);
  if (f.n >= 2) return -1;
  if (f.n <= -1) return -2;
  if (f.n == 1) {
    for (std::int64_t k = 1;; ++k) {
      if (x > Rational(BigInt(-1), BigInt(k)) && x < Rational(BigInt(-1), BigInt(k + 1))) return k - 1;
      if (x >= Rational(BigInt(-1), BigInt(k + 1))) continue;
      return std::nullopt;
    }
  }
  for (std::int64_t k = 1;; ++k) {
    if (x > Rational(BigInt(1), BigInt(k + 1)) && x < Rational(BigInt(1), BigInt(k))) return -k - 2;
    if (x <= Rational(BigInt(1), BigInt(k + 1))) continue;
    return std::nullopt;
  }
}

inline bool remark_table_holds(std::int64_t n, std::int64_t e0) {
  if (n == 1) return e0 >= 0;
  if (n >= 2) return e0 == -1;
  if (n <= -1) return e0 == -2;
  return e0 <= -3;
}

inline std::vector<CheckReport> suite_classify(const GridSpec& g) {
  std::vector<CheckReport> out;
  auto grid = seifert_grid(g);
  auto run = [&](std::string name, std::function<Failure(const SeifertData&)> f) {
    out.push_back(run_items(std::move(name), grid, g.jobs, [&](const SeifertData& y) -> Failure {
      Failure r = f(y);
      if (r) return y.str() + ": " + *r;
      return std::nullopt;
    }));
  };
  run("classify.surgery_form_round_trip", [](const SeifertData& y) -> Failure {
    if (from_figure2(to_figure2(y)) != y) return std::string("round trip");
    return std::nullopt;
  });
  run("classify.n_e0_table", [](const SeifertData& y) -> Failure {
    Figure2Form f = to_figure2(y);
    if (!remark_table_holds(f.n, y.e0)) return "n=" + std::to_string(f.n);
    auto e = e0_from_figure2(f);
    if (!e || *e != y.e0) return "refined e0 from n=" + std::to_string(f.n);
    return std::nullopt;
  });
  run("classify.plumbing_round_trip", [](const SeifertData& y) -> Failure {
    if (y.e0 > -2) return std::nullopt;
    PlumbingStrings s = seifert_to_plumbing(y);
    if (plumbing_to_seifert(s.a1, s.a2ext) != y) return std::string("plumbing round trip");
    return std::nullopt;
  });
  run("classify.orientation_involution", [](const SeifertData& y) -> Failure {
    SeifertData r = reverse_orientation(y);
    if (reverse_orientation(r) != y || y.e0 + r.e0 != -3) return std::string("reverse");
    return std::nullopt;
  });
  run("classify.smooth_path_agreement", [](const SeifertData& y) -> Failure {
    smooth_verdict(y);  // throws when the twist paths or the lens reduction disagree
    return std::nullopt;
  });
  run("classify.containment", [](const SeifertData& y) -> Failure {
    FillingVerdict v = symplectic_verdict(y);
    if (v.symplectic.kind != SymplecticKind::None && v.symplectic.kind != SymplecticKind::OutOfTheoremScope &&
        !v.smooth.bounds)
      return std::string("symplectic without smooth");
    return std::nullopt;
  });
  run("classify.orientation_dichotomy", [](const SeifertData& y) -> Failure {
    FillingVerdict a = symplectic_verdict(y);
    FillingVerdict b = symplectic_verdict(reverse_orientation(y));
    if (a.symplectic.kind != SymplecticKind::None && b.symplectic.kind != SymplecticKind::None)
      return a.symplectic.str() + " / " + b.symplectic.str();
    return std::nullopt;
  });
  run("classify.theta_gate", [](const SeifertData& y) -> Failure {
    FillingVerdict v = symplectic_verdict(y);
    if (v.symplectic.guaranteed_lower() >= 1) {
      if (!v.witness_chain || theta_lens_canonical(*v.witness_chain) != Rational(-2))
        return std::string("no theta = -2 witness");
    }
    if (v.rule == Rule::NoFillingBelowMinusOne && v.smooth.bounds) {
      PlumbingStrings s = seifert_to_plumbing(y);
      Rational t = theta_canonical_formula(s.a1, s.a2ext).theta;
      if (!(t > Rational(-2))) return "theta_can=" + t.str();
    }
    return std::nullopt;
  });
  run("classify.unique_prefix_monotone", [&](const SeifertData& y) -> Failure {
    LegStructure ls = leg_structure(y);
    if (ls.uniquely_complementary) return std::nullopt;
    for (std::int64_t extra : {std::int64_t{2}, g.leg_entry}) {
      std::vector<std::int64_t> mid = ls.legs[1].entries();
      mid.push_back(extra);
      SeifertData z = normalize(y.e0, {y.r[0], cf_evaluate(CFString::strict(mid)).reciprocal(), y.r[2]});
      if (leg_structure(z).uniquely_complementary) return std::string("extension became unique");
    }
    return std::nullopt;
  });
  auto mhn = mhn_grid(std::min<std::int64_t>(g.m_max, 12), g.n_max);
  out.push_back(run_items("classify.spherical_table_agreement", mhn, g.jobs, [](const MHN& x) -> Failure {
    FillingVerdict v = symplectic_verdict(y_mhn(x.m, x.h, x.n));
    std::int64_t want = spherical_table({SphericalKind::DihedralNeg, x.m, x.h, x.n});
    if (v.symplectic != SymplecticCount::exactly(want) || !corollary_bound_check({v})) return x.str();
    return std::nullopt;
  }));
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cf", "lisca", "matrix", "theta", "dihedral", "classify"};
  return names;
}

inline std::vector<CheckReport> run_suite(const std::string& name, const GridSpec& g) {
  if (name == "cf") return suite_cf(g);
  if (name == "lisca") return suite_lisca(g);
  if (name == "matrix") return suite_matrix(g);
  if (name == "theta") return suite_theta(g);
  if (name == "dihedral" || name == "sections67") return suite_dihedral(g);
  if (name == "classify") return suite_classify(g);
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, g);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace sfs
