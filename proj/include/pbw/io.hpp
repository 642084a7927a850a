#pragma once

// JSON wire formats. Every document carries "schema_version": 1; on input the field is
// optional but must be 1 when present. Indices are 1-based, rationals are strings
// "p/q" (or integers).

#include "pbw/algebra.hpp"
#include "pbw/constraints.hpp"
#include "pbw/existence.hpp"
#include "pbw/oracle.hpp"
#include "pbw/parameters.hpp"
#include "pbw/shortcuts.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pbw::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

struct Issue {
  std::string path;
  std::string message;
};

/// All problems found in one input document.
class InputError : public ValidationError {
 public:
  explicit InputError(std::vector<Issue> issues) : ValidationError(join(issues)), issues_(std::move(issues)) {}
  [[nodiscard]] const std::vector<Issue>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<Issue>& issues) {
    std::string s;
    for (const Issue& i : issues) s += (s.empty() ? "" : "\n") + i.path + ": " + i.message;
    return s;
  }
  std::vector<Issue> issues_;
};

namespace detail {

inline std::optional<int> get_int(const json& obj, const std::string& key, const std::string& path,
                                  std::vector<Issue>& issues) {
  if (!obj.contains(key)) {
    issues.push_back({path, "missing field \"" + key + "\""});
    return std::nullopt;
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    issues.push_back({path + "." + key, "expected an integer"});
    return std::nullopt;
  }
  return v.get<int>();
}

inline std::optional<Rational> get_rational(const json& v, const std::string& path, std::vector<Issue>& issues) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    issues.push_back({path, "expected a rational string \"p/q\" or an integer"});
  } catch (const ValidationError& e) {
    issues.push_back({path, e.what()});
  }
  return std::nullopt;
}

inline void check_schema(const json& doc, std::vector<Issue>& issues) {
  if (doc.contains("schema_version") && doc.at("schema_version") != schema_version)
    issues.push_back({"$.schema_version", "unsupported schema version, expected 1"});
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError({{"$", std::string("malformed JSON: ") + e.what()}});
  }
}

}  // namespace detail

/// {"n": <int>, "relations": [[i,j], ...]}
inline Algebra algebra_from_json(const json& doc, std::vector<Issue>& issues) {
  if (!doc.is_object()) {
    issues.push_back({"$", "expected an object"});
    throw InputError(issues);
  }
  detail::check_schema(doc, issues);
  std::optional<int> n = detail::get_int(doc, "n", "$", issues);
  if (n && *n < 1) issues.push_back({"$.n", "generator count must be positive"});

  std::vector<Arrow> rel;
  if (!doc.contains("relations")) {
    issues.push_back({"$", "missing field \"relations\""});
  } else if (!doc.at("relations").is_array()) {
    issues.push_back({"$.relations", "expected an array of [i,j] pairs"});
  } else {
    const json& arr = doc.at("relations");
    for (std::size_t p = 0; p < arr.size(); ++p) {
      const std::string path = "$.relations[" + std::to_string(p) + "]";
      const json& pair = arr[p];
      if (!pair.is_array() || pair.size() != 2) {
        issues.push_back({path, "expected a pair [i,j]"});
        continue;
      }
      bool ok = true;
      int idx[2] = {0, 0};
      for (int c = 0; c < 2; ++c) {
        const std::string cpath = path + "[" + std::to_string(c) + "]";
        if (!pair[c].is_number_integer()) {
          issues.push_back({cpath, "expected an integer"});
          ok = false;
          continue;
        }
        idx[c] = pair[c].get<int>();
        if (n && *n >= 1 && (idx[c] < 1 || idx[c] > *n)) {
          issues.push_back({cpath, "index " + std::to_string(idx[c]) + " out of range 1.." + std::to_string(*n)});
          ok = false;
        }
      }
      if (ok) rel.push_back({idx[0], idx[1]});
    }
  }
  if (!issues.empty()) throw InputError(issues);
  return Algebra(*n, std::move(rel));
}

/// {"a": [{"i","j","m","value"}...], "b": [{"i","j","value"}...]}; unlisted parameters are 0.
inline NumericTable params_from_json(const json& doc, const Algebra& alg, std::vector<Issue>& issues,
                                     const std::string& root = "$") {
  if (!doc.is_object()) {
    issues.push_back({root, "expected an object"});
    throw InputError(issues);
  }
  if (root == "$") detail::check_schema(doc, issues);
  std::vector<std::pair<ParamName, Rational>> entries;
  std::set<ParamName> seen;

  for (const char* kind : {"a", "b"}) {
    if (!doc.contains(kind)) continue;
    const std::string base = root + "." + kind;
    const json& arr = doc.at(kind);
    if (!arr.is_array()) {
      issues.push_back({base, "expected an array"});
      continue;
    }
    const bool is_a = std::string_view(kind) == "a";
    for (std::size_t p = 0; p < arr.size(); ++p) {
      const std::string path = base + "[" + std::to_string(p) + "]";
      const json& e = arr[p];
      if (!e.is_object()) {
        issues.push_back({path, "expected an object"});
        continue;
      }
      std::size_t before = issues.size();
      auto i = detail::get_int(e, "i", path, issues);
      auto j = detail::get_int(e, "j", path, issues);
      std::optional<int> m = is_a ? detail::get_int(e, "m", path, issues) : std::optional<int>(0);
      std::optional<Rational> value;
      if (!e.contains("value"))
        issues.push_back({path, "missing field \"value\""});
      else
        value = detail::get_rational(e.at("value"), path + ".value", issues);
      if (issues.size() != before) continue;

      ParamName name = is_a ? ParamName::a(*i, *j, *m) : ParamName::b(*i, *j);
      if (is_a && (*m < 1 || *m > alg.n())) {
        issues.push_back({path + ".m", "index " + std::to_string(*m) + " out of range 1.." + std::to_string(alg.n())});
      } else if (!in_scope(alg, name)) {
        issues.push_back({path, OutOfScopeParameter(name).what()});
      } else if (!seen.insert(name).second) {
        issues.push_back({path, "duplicate entry for " + to_string(name)});
      } else {
        entries.emplace_back(name, *value);
      }
    }
  }
  if (!issues.empty()) throw InputError(issues);
  return numeric_table(alg, entries);
}

struct ParsedInput {
  Algebra algebra;
  std::optional<NumericTable> params;
};

/// An algebra document, optionally with its parameters embedded under "params".
inline ParsedInput parse_input(std::string_view text) {
  json doc = detail::parse_text(text);
  std::vector<Issue> issues;
  Algebra alg = algebra_from_json(doc, issues);
  std::optional<NumericTable> params;
  if (doc.contains("params")) params = params_from_json(doc.at("params"), alg, issues, "$.params");
  return {std::move(alg), std::move(params)};
}

inline NumericTable parse_params(std::string_view text, const Algebra& alg) {
  json doc = detail::parse_text(text);
  std::vector<Issue> issues;
  return params_from_json(doc, alg, issues);
}

// ---------------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------------

inline json to_json(const Triple& t) { return json::array({t.i, t.j, t.k}); }

inline json to_json(const Algebra& a) {
  json rel = json::array();
  for (const Arrow& r : a.relations()) rel.push_back({r.i, r.j});
  return {{"schema_version", schema_version}, {"n", a.n()}, {"relations", rel}};
}

/// Nonzero entries only; reading it back restores the same table.
inline json to_json(const NumericTable& t) {
  json a = json::array(), b = json::array();
  for (const auto& [p, v] : t.entries()) {
    if (v == 0) continue;
    if (p.is_a())
      a.push_back({{"i", p.i}, {"j", p.j}, {"m", p.m}, {"value", to_string(v)}});
    else
      b.push_back({{"i", p.i}, {"j", p.j}, {"value", to_string(v)}});
  }
  return {{"schema_version", schema_version}, {"a", a}, {"b", b}};
}

inline json to_json(const Label& l) {
  json out = {{"origin", to_string(l.origin)}, {"triple", to_json(l.triple)}};
  if (l.r) out["r"] = *l.r;
  if (l.aux) out["aux"] = *l.aux;
  return out;
}

inline json to_json(const Constraint& c) {
  json out = to_json(c.label);
  out["polynomial"] = to_string(c.polynomial);
  return out;
}

inline json to_json(const ConstraintSystem& sys) {
  json list = json::array();
  for (const Constraint& c : sys.constraints()) list.push_back(to_json(c));
  return {{"schema_version", schema_version}, {"constraints", list}};
}

inline json to_json(const Reduction& red) {
  json rules = json::array();
  for (const auto& [v, rhs] : red.rules) rules.push_back({{"variable", to_string(v)}, {"value", to_string(rhs)}});
  json free = json::array();
  for (const ParamName& p : red.free_parameters) free.push_back(to_string(p));
  json classes = json::array();
  for (const auto& cls : red.classes) {
    json members = json::array();
    for (const ParamName& p : cls) members.push_back(to_string(p));
    classes.push_back(members);
  }
  json determined = json::array();
  for (const auto& [v, rhs] : red.determined) determined.push_back({{"variable", to_string(v)}, {"value", to_string(rhs)}});
  json residual = to_json(red.residual)["constraints"];
  return {{"schema_version", schema_version},
          {"rules", rules},
          {"classes", classes},
          {"free", free},
          {"determined", determined},
          {"residual", residual}};
}

inline json to_json(const Verdict& v) {
  json failures = json::array();
  for (const Failure& f : v.failures) {
    json e = to_json(f.constraint);
    e["value"] = to_string(f.value);
    failures.push_back(e);
  }
  return {{"schema_version", schema_version}, {"pbw", v.pbw}, {"failures", failures}};
}

inline json to_json(const oracle::OracleVerdict& v) {
  json failures = json::array();
  for (const auto& f : v.failures)
    failures.push_back({{"triple", to_json(f.triple)}, {"left", oracle::to_string(f.left)}, {"right", oracle::to_string(f.right)}});
  return {{"schema_version", schema_version}, {"pbw", v.pbw}, {"failures", failures}};
}

inline json to_json(const ShortcutReport& rep) {
  json list = json::array();
  for (const TripleShortcut& s : rep.triples) {
    json fired = json::array();
    if (s.clause1) fired.push_back({{"clause", 1}, {"pattern", s.pattern1}});
    if (s.clause2) fired.push_back({{"clause", 2}, {"pattern", s.pattern2}});
    list.push_back({{"triple", to_json(s.triple)},
                    {"shape", to_string(s.shape)},
                    {"fired", fired},
                    {"skip_II", s.skip_II},
                    {"skip_III", s.skip_III},
                    {"skip_III_requires_II", s.skip_III && s.skip_III_needs_II}});
  }
  return {{"schema_version", schema_version}, {"triples", list}};
}

/// x_i*x_j - sum_m a[i,j;m] x_m - b[i,j], e.g. "x1*x2 - x1 - x2 + 1".
inline std::string render_relation(const NumericTable& t, const Arrow& r) {
  oracle::NCPoly p = oracle::NCPoly::word({r.i, r.j});
  for (int m = 1; m <= t.algebra().n(); ++m) p.add({m}, -t.a(r.i, r.j, m));
  p.add({}, -t.b(r.i, r.j));
  return oracle::to_string(p);
}

inline json to_json(const Deformation& d) {
  json out = to_json(d.table);
  json witness;
  switch (d.branch) {
    case 1: witness = {{"loop", d.witness.first}}; break;
    case 2: witness = {{"two_cycle", {d.witness.first, d.witness.second}}}; break;
    default: witness = {{"vertex", d.witness.first}}; break;
  }
  out["case"] = d.branch;
  out["witness"] = witness;
  json rel = json::array();
  for (const Arrow& r : d.table.algebra().relations()) rel.push_back(render_relation(d.table, r));
  out["relations"] = rel;
  return out;
}

}  // namespace pbw::io
