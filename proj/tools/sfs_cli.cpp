#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfs/sfs.hpp"

using namespace sfs;

namespace {

using Row = std::vector<std::pair<std::string, std::string>>;

std::string scalar(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, Row& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (v.is_array() && !v.empty() && v.front().is_structured()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out.emplace_back(prefix, v.is_array() ? v.dump() : scalar(v));
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Prints records as JSON (array or single object), CSV, or an aligned table.
void emit(const std::vector<json>& records, const std::string& format, bool single) {
  if (format == "json") {
    if (single && records.size() == 1)
      std::cout << records.front().dump(2) << "\n";
    else
      std::cout << json(records).dump(2) << "\n";
    return;
  }
  std::vector<Row> rows;
  std::vector<std::string> columns;
  for (const auto& r : records) {
    Row row;
    flatten(r, "", row);
    for (const auto& [k, v] : row)
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    rows.push_back(std::move(row));
  }
  auto lookup = [](const Row& row, const std::string& key) {
    for (const auto& [k, v] : row)
      if (k == key) return v;
    return std::string();
  };
  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << csv_cell(columns[i]);
    if (!columns.empty()) std::cout << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) std::cout << (i ? "," : "") << csv_cell(lookup(row, columns[i]));
      std::cout << "\n";
    }
    return;
  }
  if (single && rows.size() == 1) {
    std::size_t w = 0;
    for (const auto& [k, v] : rows[0]) w = std::max(w, k.size());
    for (const auto& [k, v] : rows[0]) std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], lookup(row, columns[i]).size());
  }
  auto line = [&](auto cell) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::string c = cell(i);
      std::cout << c;
      if (i + 1 < columns.size()) std::cout << std::string(width[i] - c.size() + 2, ' ');
    }
    std::cout << "\n";
  };
  if (columns.empty()) return;
  line([&](std::size_t i) { return columns[i]; });
  for (const auto& row : rows) line([&](std::size_t i) { return lookup(row, columns[i]); });
}

// Writes records as they are produced. The table format needs every row to
// size its columns, so it buffers.
class RowStream {
 public:
  explicit RowStream(std::string format) : format_(std::move(format)) {}

  void add(const json& rec) {
    if (format_ == "json") {
      std::cout << (count_ ? ",\n  " : "[\n  ") << rec.dump();
    } else if (format_ == "csv") {
      Row row;
      flatten(rec, "", row);
      if (!count_)
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_cell(row[i].first);
      if (!count_) std::cout << "\n";
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_cell(row[i].second);
      std::cout << "\n";
    } else {
      buffered_.push_back(rec);
    }
    ++count_;
  }

  void finish() {
    if (format_ == "json") std::cout << (count_ ? "\n]\n" : "[]\n");
    if (format_ == "table") emit(buffered_, format_, false);
    std::cout.flush();
  }

 private:
  std::string format_;
  std::size_t count_ = 0;
  std::vector<json> buffered_;
};

json cf_record(const std::string& value, const std::string& string) {
  CFString s;
  if (!string.empty()) {
    s = CFString::parse(string);
  } else {
    Rational r = Rational::parse(value);
    s = cf_expand(r);
  }
  require(s.is_strict() && !s.empty(), "cf needs a rational > 1 or a nonempty strict string");
  Rational v = cf_evaluate(s);
  CFString dual = riemenschneider_dual(s);
  return {{"value", v.str()},
          {"string", s.str()},
          {"dual", dual.str()},
          {"dual_value", cf_evaluate(dual).str()},
          {"reversed_value", cf_reverse_value(s).str()},
          {"i_value", i_value(s)}};
}

json theta_record(const std::string& a1s, const std::string& a2s) {
  CFString a1 = CFString::parse(a1s), a2 = CFString::parse(a2s);
  ThetaResult f = theta_canonical_formula(a1, a2);
  ThetaResult m = theta_canonical_matrix(a1, a2);
  if (f != m) throw std::logic_error("closed form and matrix theta disagree");
  json out = to_json(f);
  out["a1"] = a1.str();
  out["a2ext"] = a2.str();
  out["reduced_lens_bounds"] = reduced_lens_bounds(a2);
  return out;
}

json nonbalanced_record(std::int64_t e0, const std::string& pqs) {
  Rational pq = Rational::parse(pqs);
  NonbalancedReport r = nonbalanced_report(e0, pq);
  if (!r.consistent()) throw std::logic_error("non-balanced theta cross-checks disagree");
  return {{"e0", e0},
          {"pq", pq.str()},
          {"theta_minus", r.theta_minus.str()},
          {"theta_plus", r.theta_plus.str()},
          {"rs", r.rs.str()},
          {"rs_in_R", r_member(cf_evaluate(r.rs))}};
}

json rmember_record(const std::string& pqs) {
  auto slash = pqs.find('/');
  std::int64_t p = to_int64(Rational::parse(pqs.substr(0, slash)).num());
  std::int64_t q = slash == std::string::npos ? 1 : to_int64(Rational::parse(pqs.substr(slash + 1)).num());
  auto c = r_membership(p, q);
  json out{{"p", p}, {"q", q}, {"member", c.has_value()}};
  if (c) out["certificate"] = to_json(*c);
  return out;
}

// Filters look like "symplectic!=None,e0<=-2,smooth==Bounds".
struct Filter {
  std::string field, op, value;
};

std::vector<Filter> parse_filters(const std::string& text) {
  std::vector<Filter> out;
  std::stringstream ss(text);
  std::string clause;
  while (std::getline(ss, clause, ',')) {
    if (clause.empty()) continue;
    static const std::vector<std::string> ops{"==", "!=", "<=", ">=", "<", ">"};
    bool found = false;
    for (const auto& op : ops) {
      auto pos = clause.find(op);
      if (pos == std::string::npos) continue;
      out.push_back({clause.substr(0, pos), op, clause.substr(pos + op.size())});
      found = true;
      break;
    }
    if (!found) throw DomainError("bad filter clause '" + clause + "'");
  }
  return out;
}

bool passes(const Row& row, const std::vector<Filter>& filters) {
  for (const auto& f : filters) {
    auto it = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return kv.first == f.field; });
    if (it == row.end()) throw DomainError("unknown filter field '" + f.field + "'");
    const std::string& v = it->second;
    int cmp;
    try {
      Rational a = Rational::parse(v), b = Rational::parse(f.value);
      cmp = a < b ? -1 : (a == b ? 0 : 1);
    } catch (const DomainError&) {
      cmp = v.compare(f.value);
      cmp = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
    }
    bool ok = (f.op == "==" && cmp == 0) || (f.op == "!=" && cmp != 0) || (f.op == "<=" && cmp <= 0) ||
              (f.op == ">=" && cmp >= 0) || (f.op == "<" && cmp < 0) || (f.op == ">" && cmp > 0);
    if (!ok) return false;
  }
  return true;
}

json enumerate_record(const SeifertData& y) {
  FillingVerdict v = symplectic_verdict(y);
  json theta = nullptr;
  if (y.e0 <= -2) {
    PlumbingStrings s = seifert_to_plumbing(y);
    theta = theta_canonical_formula(s.a1, s.a2ext).theta.str();
  } else if (v.witness_chain) {
    theta = theta_lens_canonical(*v.witness_chain).str();
  }
  json sym = to_json(v.symplectic);
  return {{"e0", y.e0},
          {"r1", y.r[0].str()},
          {"r2", y.r[1].str()},
          {"r3", y.r[2].str()},
          {"smooth", v.smooth.bounds ? "Bounds" : "DoesNotBound"},
          {"symplectic", v.symplectic.str()},
          {"kind", std::string(to_string(v.symplectic.kind))},
          {"rule", std::string(to_string(v.rule))},
          {"theta", theta}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small Seifert fibered spaces with complementary legs: rational balls and fillings"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();

  GridSpec grid;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--len", grid.max_len, "max length of a1 and a2ext")->capture_default_str();
    sub->add_option("--entry", grid.max_entry, "max entry of plumbing strings")->capture_default_str();
    sub->add_option("--total-len", grid.max_total_len, "max len(a1) + len(a2ext)")->capture_default_str();
    sub->add_option("--cf-len", grid.cf_len, "max length for continued fraction checks")->capture_default_str();
    sub->add_option("--cf-entry", grid.cf_entry, "max entry for continued fraction checks")->capture_default_str();
    sub->add_option("--cf-pmax", grid.cf_p_max, "max numerator for round trips")->capture_default_str();
    sub->add_option("--pmax", grid.p_max, "max p for the Lisca suite")->capture_default_str();
    sub->add_option("--m", grid.m_max, "max m")->capture_default_str();
    sub->add_option("--n", grid.n_max, "max n")->capture_default_str();
    sub->add_option("--e0-min", grid.e0_min, "min e0 of the Seifert grid")->capture_default_str();
    sub->add_option("--e0-max", grid.e0_max, "max e0 of the Seifert grid")->capture_default_str();
    sub->add_option("--leg-len", grid.leg_len, "max leg string length")->capture_default_str();
    sub->add_option("--leg-entry", grid.leg_entry, "max leg string entry")->capture_default_str();
    sub->add_option("--nb-pmax", grid.nonbalanced_p_max, "max p for non-balanced theta")->capture_default_str();
    sub->add_option("--jobs", grid.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  };

  auto* cf = app.add_subcommand("cf", "continued fraction data of a rational > 1 or a string");
  std::string cf_value, cf_string;
  cf->add_option("value", cf_value, "rational p/q > 1");
  cf->add_option("--string", cf_string, "bracketed string such as [2,2,3]");

  auto* theta = app.add_subcommand("theta", "theta invariants");
  std::string a1s, a2s, pqs;
  std::optional<std::int64_t> e0_opt;
  theta->add_option("--a1", a1s, "leg string a1 (canonical structure)");
  theta->add_option("--a2", a2s, "central string a2ext (canonical structure)");
  theta->add_option("--e0", e0_opt, "e0 >= 0 for the non-balanced structures");
  theta->add_option("--pq", pqs, "p/q for the non-balanced structures");

  auto* rmember = app.add_subcommand("rmember", "membership in Lisca's set R");
  std::string rm_value;
  rmember->add_option("value", rm_value, "p/q")->required();

  auto* classify = app.add_subcommand("classify", "smooth and symplectic rational ball verdicts");
  std::string seifert;
  classify->add_option("--seifert", seifert, "\"e0;r1,r2,r3\"")->required();

  auto* verify = app.add_subcommand("verify", "run invariant suites over a grid");
  std::string suite;
  verify->add_option("suite", suite, "cf|lisca|matrix|theta|dihedral|classify|all (sections67 = dihedral)")
      ->required()
      ->check(CLI::IsMember({"cf", "lisca", "matrix", "theta", "dihedral", "sections67", "classify", "all"}));
  add_grid(verify);

  auto* enumerate = app.add_subcommand("enumerate", "stream verdicts over the Seifert grid");
  std::string filter;
  bool with_mhn = false;
  enumerate->add_option("--filter", filter, "comma-separated clauses such as symplectic!=None");
  enumerate->add_flag("--mhn", with_mhn, "also include Y_{m,h,n} for m <= --m, n <= --n");
  add_grid(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cf) {
      if (cf_value.empty() == cf_string.empty()) throw DomainError("give exactly one of a value or --string");
      emit({cf_record(cf_value, cf_string)}, format, true);
    } else if (*theta) {
      if (!a1s.empty() || !a2s.empty()) {
        if (a1s.empty() || a2s.empty()) throw DomainError("--a1 and --a2 go together");
        emit({theta_record(a1s, a2s)}, format, true);
      } else {
        if (!e0_opt || pqs.empty()) throw DomainError("give --a1/--a2 or --e0/--pq");
        emit({nonbalanced_record(*e0_opt, pqs)}, format, true);
      }
    } else if (*rmember) {
      emit({rmember_record(rm_value)}, format, true);
    } else if (*classify) {
      emit({to_json(symplectic_verdict(parse_seifert(seifert)))}, format, true);
    } else if (*verify) {
      auto reports = run_suite(suite, grid);
      std::vector<json> records;
      bool ok = true;
      for (const auto& r : reports) {
        json rec{{"check", r.name}, {"instances", r.instances}, {"failures", r.failures}};
        rec["counterexample"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
        records.push_back(rec);
        ok = ok && r.ok();
      }
      emit(records, format, false);
      return ok ? 0 : 1;
    } else if (*enumerate) {
      auto filters = parse_filters(filter);
      auto legs = strict_strings(grid.leg_len, grid.leg_entry);
      std::map<std::int64_t, std::vector<SeifertData>> extra;
      if (with_mhn)
        for (const auto& x : mhn_grid(grid.m_max, grid.n_max)) {
          SeifertData y = y_mhn(x.m, x.h, x.n);
          extra[y.e0].push_back(y);
        }
      std::set<std::int64_t> e0s;
      for (std::int64_t e0 = grid.e0_min; e0 <= grid.e0_max; ++e0) e0s.insert(e0);
      for (const auto& [e0, ys] : extra) e0s.insert(e0);

      RowStream out(format);
      for (std::int64_t e0 : e0s) {
        std::vector<SeifertData> ys;
        if (grid.e0_min <= e0 && e0 <= grid.e0_max) ys = seifert_slice(e0, legs);
        if (auto it = extra.find(e0); it != extra.end()) {
          ys.insert(ys.end(), it->second.begin(), it->second.end());
          std::sort(ys.begin(), ys.end());
          ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        }
        std::vector<json> rows(ys.size());
        auto report = run_indexed("enumerate", ys.size(), grid.jobs, [&](std::size_t i) -> Failure {
          rows[i] = enumerate_record(ys[i]);
          return std::nullopt;
        });
        if (!report.ok()) throw std::runtime_error(*report.first_failure);
        for (const auto& r : rows) {
          Row flat;
          flatten(r, "", flat);
          if (passes(flat, filters)) out.add(r);
        }
      }
      out.finish();
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
