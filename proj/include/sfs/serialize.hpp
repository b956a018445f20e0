#pragma once

#include <string>

#include <json.hpp>

#include "sfs/classifier.hpp"
#include "sfs/continued_fraction.hpp"
#include "sfs/lisca.hpp"
#include "sfs/matrix.hpp"
#include "sfs/rational.hpp"
#include "sfs/seifert.hpp"
#include "sfs/theta.hpp"

namespace sfs {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }
inline json to_json(const CFString& s) { return s.str(); }

inline json to_json(const RCertificate& c) {
  return {{"m", c.m},
          {"target", std::string(to_string(c.witness_target))},
          {"family", std::string(to_string(c.family))},
          {"h", c.h},
          {"sign", std::string(to_string(c.sign))}};
}

inline json to_json(const ThetaResult& t) {
  return {{"theta", t.theta.str()},
          {"c1_squared", t.c1_squared.str()},
          {"sigma", t.sigma},
          {"chi", t.chi},
          {"d3", t.d3.str()}};
}

inline json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const SeifertData& y) {
  return {{"e0", y.e0}, {"r", {y.r[0].str(), y.r[1].str(), y.r[2].str()}}};
}

inline json to_json(const Figure2Form& f) {
  return {{"ab", f.ab.str()}, {"n", f.n}, {"a2", f.a2string.str()}};
}

inline json to_json(const SymplecticCount& c) {
  json out{{"kind", std::string(to_string(c.kind))}};
  switch (c.kind) {
    case SymplecticKind::Exactly:
    case SymplecticKind::AtLeast: out["count"] = c.lo; break;
    case SymplecticKind::AtMost: out["count"] = c.hi; break;
    case SymplecticKind::Range:
      out["lo"] = c.lo;
      out["hi"] = c.hi;
      break;
    default: break;
  }
  return out;
}

inline json to_json(const FillingVerdict& v) {
  json out{{"seifert", to_json(v.y)},
           {"smooth", v.smooth.bounds ? "Bounds" : "DoesNotBound"},
           {"symplectic", to_json(v.symplectic)},
           {"rule", std::string(to_string(v.rule))},
           {"certificate", v.smooth.certificate ? to_json(*v.smooth.certificate) : json(nullptr)},
           {"figure2", to_json(v.smooth.figure2)}};
  if (v.form) out["form"] = {{"m", v.form->m}, {"h", v.form->h}, {"n", v.form->n}};
  if (v.uniqueness_lower) out["uniqueness_note"] = *v.uniqueness_lower;
  if (v.bound_sentence_count) out["lower_bound_sentence_count"] = *v.bound_sentence_count;
  if (v.exact_sentence_count) out["exact_sentence_count"] = *v.exact_sentence_count;
  if (v.witness_chain) out["witness_chain"] = v.witness_chain->str();
  return out;
}

}  // namespace sfs
