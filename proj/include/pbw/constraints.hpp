#pragma once

#include "pbw/algebra.hpp"
#include "pbw/parameters.hpp"
#include "pbw/polynomial.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbw {

/// Which clause of the deformation criterion an equation comes from.
enum class Origin { Ia, Ib, Ic, II, III };

inline std::string to_string(Origin o) {
  switch (o) {
    case Origin::Ia: return "I.a";
    case Origin::Ib: return "I.b";
    case Origin::Ic: return "I.c";
    case Origin::II: return "II";
    case Origin::III: return "III";
  }
  return "?";
}

/// Where an equation came from: the overlap triple, the clause, the coefficient index r
/// (clause II only) and the vanishing parameter's index m or m' (I.a / I.b only).
struct Label {
  Triple triple;
  Origin origin = Origin::Ia;
  std::optional<int> r;
  std::optional<int> aux;

  friend auto operator<=>(const Label&, const Label&) = default;
};

/// One equation `polynomial = 0`.
struct Constraint {
  Label label;
  Polynomial polynomial;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

template <class Value>
using Equations = std::vector<std::pair<Label, Value>>;

// ---------------------------------------------------------------------------------
// Generic generation. `Value` is Rational for a concrete table or Polynomial for a
// symbolic one; both go through exactly the same code.
// ---------------------------------------------------------------------------------

/// d_r for the triple (i,j,k):
///   sum_{m : x_m x_k in R} a[i,j;m] a[m,k;r]  -  sum_{m' : x_i x_m' in R} a[i,m';r] a[j,k;m']
template <class Value>
Value d_value(const ParameterTable<Value>& t, const Triple& q, int r) {
  const Algebra& alg = t.algebra();
  if (!in_overlap_basis(alg, q)) throw std::invalid_argument("triple " + to_string(q) + " is not an overlap");
  if (r < 1 || r > alg.n()) throw std::invalid_argument("index r=" + std::to_string(r) + " out of range");
  Value sum{};
  for (int m = 1; m <= alg.n(); ++m)
    if (alg.has(m, q.k)) sum += t.a(q.i, q.j, m) * t.a(m, q.k, r);
  for (int m = 1; m <= alg.n(); ++m)
    if (alg.has(q.i, m)) sum -= t.a(q.i, m, r) * t.a(q.j, q.k, m);
  return sum;
}

inline Polynomial d_poly(const SymbolicTable& t, const Triple& q, int r) { return d_value(t, q, r); }

template <class Value>
Equations<Value> condition_I_equations(const ParameterTable<Value>& t) {
  const Algebra& alg = t.algebra();
  const int n = alg.n();
  Equations<Value> out;
  for (const Triple& q : overlap_basis(alg)) {
    for (int m = 1; m <= n; ++m)
      if (m != q.i && !alg.has(m, q.k)) out.push_back({{q, Origin::Ia, std::nullopt, m}, t.a(q.i, q.j, m)});
    for (int m = 1; m <= n; ++m)
      if (m != q.k && !alg.has(q.i, m)) out.push_back({{q, Origin::Ib, std::nullopt, m}, t.a(q.j, q.k, m)});
    if (!alg.has(q.i, q.k))
      out.push_back({{q, Origin::Ic, std::nullopt, std::nullopt}, t.a(q.i, q.j, q.i) - t.a(q.j, q.k, q.k)});
  }
  return out;
}

/// Right-hand side prescribed for d_r of the triple.
template <class Value>
Value condition_II_rhs(const ParameterTable<Value>& t, const Triple& q, int r) {
  if (q.i != q.k) {
    if (r == q.k) return Value{} - t.b(q.i, q.j);
    if (r == q.i) return t.b(q.j, q.k);
    return Value{};
  }
  if (r == q.i) return t.b(q.j, q.i) - t.b(q.i, q.j);
  return Value{};
}

template <class Value>
Equations<Value> condition_II_equations(const ParameterTable<Value>& t) {
  const Algebra& alg = t.algebra();
  Equations<Value> out;
  for (const Triple& q : overlap_basis(alg))
    for (int r = 1; r <= alg.n(); ++r)
      out.push_back({{q, Origin::II, r, std::nullopt}, d_value(t, q, r) - condition_II_rhs(t, q, r)});
  return out;
}

template <class Value>
Value condition_III_value(const ParameterTable<Value>& t, const Triple& q) {
  const Algebra& alg = t.algebra();
  Value sum{};
  for (int m = 1; m <= alg.n(); ++m)
    if (alg.has(m, q.k)) sum += t.a(q.i, q.j, m) * t.b(m, q.k);
  for (int m = 1; m <= alg.n(); ++m)
    if (alg.has(q.i, m)) sum -= t.b(q.i, m) * t.a(q.j, q.k, m);
  return sum;
}

template <class Value>
Equations<Value> condition_III_equations(const ParameterTable<Value>& t) {
  Equations<Value> out;
  for (const Triple& q : overlap_basis(t.algebra()))
    out.push_back({{q, Origin::III, std::nullopt, std::nullopt}, condition_III_value(t, q)});
  return out;
}

/// Conditions I, II and III in that order; the enumeration order is shared by every
/// Value type, so index p of a numeric list corresponds to index p of a symbolic list.
template <class Value>
Equations<Value> all_equations(const ParameterTable<Value>& t) {
  Equations<Value> out = condition_I_equations(t);
  for (auto& e : condition_II_equations(t)) out.push_back(std::move(e));
  for (auto& e : condition_III_equations(t)) out.push_back(std::move(e));
  return out;
}

// ---------------------------------------------------------------------------------
// Symbolic systems
// ---------------------------------------------------------------------------------

/// Constraints sorted by label, each polynomial normalized and nonzero, with no two
/// constraints sharing a normalized polynomial (the first label in order is kept).
class ConstraintSystem {
 public:
  ConstraintSystem(Algebra alg, const Equations<Polynomial>& raw) : alg_(std::move(alg)) {
    std::vector<Constraint> all;
    for (const auto& [label, poly] : raw)
      if (!poly.is_zero()) all.push_back({label, poly.normalized()});
    std::stable_sort(all.begin(), all.end(),
                     [](const Constraint& x, const Constraint& y) { return x.label < y.label; });
    std::set<Polynomial::Terms, TermsLess> seen;
    for (Constraint& c : all)
      if (seen.insert(c.polynomial.terms()).second) constraints_.push_back(std::move(c));
  }

  [[nodiscard]] const Algebra& algebra() const { return alg_; }
  [[nodiscard]] const std::vector<Constraint>& constraints() const& { return constraints_; }
  [[nodiscard]] std::vector<Constraint> constraints() && { return std::move(constraints_); }
  [[nodiscard]] std::size_t size() const { return constraints_.size(); }
  [[nodiscard]] bool empty() const { return constraints_.empty(); }

  [[nodiscard]] std::vector<Constraint> of(Origin o) const {
    std::vector<Constraint> out;
    for (const Constraint& c : constraints_)
      if (c.label.origin == o) out.push_back(c);
    return out;
  }
  [[nodiscard]] std::size_t count(Origin o) const { return of(o).size(); }

  /// The normalized polynomials, for order-insensitive comparison.
  [[nodiscard]] std::set<std::string> polynomial_set() const {
    std::set<std::string> out;
    for (const Constraint& c : constraints_) out.insert(to_string(c.polynomial));
    return out;
  }

 private:
  struct TermsLess {
    bool operator()(const Polynomial::Terms& x, const Polynomial::Terms& y) const {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const auto& p, const auto& q) {
        if (LeadingFirst{}(p.first, q.first)) return true;
        if (LeadingFirst{}(q.first, p.first)) return false;
        return p.second < q.second;
      });
    }
  };

  Algebra alg_;
  std::vector<Constraint> constraints_;
};

inline ConstraintSystem generate_condition_I(const SymbolicTable& t) {
  return {t.algebra(), condition_I_equations(t)};
}
inline ConstraintSystem generate_condition_II(const SymbolicTable& t) {
  return {t.algebra(), condition_II_equations(t)};
}
inline ConstraintSystem generate_condition_III(const SymbolicTable& t) {
  return {t.algebra(), condition_III_equations(t)};
}
inline ConstraintSystem generate_system(const SymbolicTable& t) { return {t.algebra(), all_equations(t)}; }

inline ConstraintSystem generate_condition_I(const Algebra& a) { return generate_condition_I(symbolic_table(a)); }
inline ConstraintSystem generate_condition_II(const Algebra& a) { return generate_condition_II(symbolic_table(a)); }
inline ConstraintSystem generate_condition_III(const Algebra& a) { return generate_condition_III(symbolic_table(a)); }
inline ConstraintSystem generate_system(const Algebra& a) { return generate_system(symbolic_table(a)); }

// ---------------------------------------------------------------------------------
// Checking a concrete table
// ---------------------------------------------------------------------------------

/// A violated equation: the raw (unnormalized) symbolic constraint and its value on the
/// table, so `failure.value == failure.constraint.polynomial.eval(table)`.
struct Failure {
  Constraint constraint;
  Rational value;
};

struct Verdict {
  bool pbw = true;
  std::vector<Failure> failures;
};

namespace detail {

/// Verdict from evaluated equations; failures get the symbolic form with the same label.
inline Verdict verdict_from(const Algebra& alg, const Equations<Rational>& evaluated) {
  Verdict v;
  for (const auto& e : evaluated)
    if (e.second != 0) v.pbw = false;
  if (v.pbw) return v;

  std::map<Label, Polynomial> symbolic;
  for (auto& [label, poly] : all_equations(symbolic_table(alg))) symbolic.emplace(label, std::move(poly));
  for (const auto& [label, value] : evaluated)
    if (value != 0) v.failures.push_back({{label, symbolic.at(label)}, value});
  return v;
}

}  // namespace detail

/// Exhaustive check of conditions I, II and III on a concrete table.
inline Verdict check(const NumericTable& t) { return detail::verdict_from(t.algebra(), all_equations(t)); }

// ---------------------------------------------------------------------------------
// Condition-I elimination
// ---------------------------------------------------------------------------------

struct Reduction {
  /// Variables eliminated by condition I: forced zeros, and each I.c class member
  /// other than its representative mapped to the representative.
  std::map<ParamName, Polynomial> rules;
  /// Conditions II and III after substitution, normalized, zeros dropped. Condition-III
  /// constraints additionally have `determined` substituted in.
  ConstraintSystem residual;
  /// In-scope a-parameters left untouched by the rules.
  std::vector<ParamName> free_parameters;
  /// I.c equality classes that survived (not forced to zero), representative first.
  std::vector<std::vector<ParamName>> classes;
  /// b-parameters that some residual condition-II equation pins to a polynomial in the
  /// a-parameters alone (the first such equation wins).
  std::map<ParamName, Polynomial> determined;
};

namespace detail {

/// b = f(a) when `p` has exactly one b-variable and it occurs only linearly.
inline std::optional<std::pair<ParamName, Polynomial>> solve_for_b(const Polynomial& p) {
  std::optional<ParamName> b;
  for (const ParamName& v : p.variables())
    if (!v.is_a()) {
      if (b) return std::nullopt;
      b = v;
    }
  if (!b) return std::nullopt;
  Rational coeff = 0;
  Polynomial rest;
  for (const auto& [mono, c] : p.terms()) {
    bool has_b = false;
    for (const auto& f : mono.factors()) has_b = has_b || f.first == *b;
    if (!has_b) {
      Polynomial term(c);
      for (const auto& [v, e] : mono.factors())
        for (int k = 0; k < e; ++k) term *= var(v);
      rest += term;
    } else if (mono == Monomial(*b)) {
      coeff = c;
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(*b, rest * Polynomial(Rational(-1) / coeff));
}

}  // namespace detail

/// Eliminates condition I from a full symbolic system. An assignment satisfies `sys`
/// iff it satisfies every rule and the residual. Condition-III constraints are rewritten
/// modulo the condition-II equations that determine a b-parameter, so those implied by
/// condition II drop out.
inline Reduction reduce_by_I(const ConstraintSystem& sys) {
  std::set<ParamName> zeros;
  std::map<ParamName, ParamName> parent;
  auto find = [&](ParamName x) {
    while (parent.at(x) != x) x = parent.at(x);
    return x;
  };

  for (const Constraint& c : sys.constraints()) {
    const Origin o = c.label.origin;
    if (o == Origin::Ia || o == Origin::Ib) {
      for (const ParamName& v : c.polynomial.variables()) zeros.insert(v);
    } else if (o == Origin::Ic) {
      auto vars = c.polynomial.variables();
      for (const ParamName& v : vars) parent.try_emplace(v, v);
      ParamName root = find(*vars.begin());
      for (const ParamName& v : vars) {
        ParamName rv = find(v);
        if (rv == root) continue;
        // smallest name becomes the representative
        if (rv < root) std::swap(rv, root);
        parent[rv] = root;
      }
    }
  }

  std::map<ParamName, std::vector<ParamName>> members;
  for (const auto& [v, p] : parent) members[find(v)].push_back(v);

  std::map<ParamName, Polynomial> rules;
  std::vector<std::vector<ParamName>> classes;
  for (auto& [root, vs] : members) {
    bool vanishes = false;
    for (const ParamName& v : vs) vanishes = vanishes || zeros.count(v) > 0;
    if (vanishes) {
      for (const ParamName& v : vs) rules[v] = Polynomial{};
      continue;
    }
    for (const ParamName& v : vs)
      if (v != root) rules[v] = var(root);
    classes.push_back(vs);  // members are ascending, so the root leads
  }
  for (const ParamName& z : zeros) rules[z] = Polynomial{};

  Equations<Polynomial> rest;
  for (const Constraint& c : sys.constraints())
    if (c.label.origin == Origin::II || c.label.origin == Origin::III)
      rest.push_back({c.label, c.polynomial.substitute(rules)});

  std::map<ParamName, Polynomial> determined;
  for (const auto& [label, p] : rest)
    if (label.origin == Origin::II)
      if (auto solved = detail::solve_for_b(p)) determined.insert(std::move(*solved));
  for (auto& [label, p] : rest)
    if (label.origin == Origin::III) p = p.substitute(determined);

  std::vector<ParamName> free;
  for (const ParamName& p : in_scope_parameters(sys.algebra()))
    if (p.is_a() && !rules.count(p)) free.push_back(p);

  return {std::move(rules), ConstraintSystem(sys.algebra(), rest), std::move(free), std::move(classes),
          std::move(determined)};
}

inline Reduction reduce_by_I(const Algebra& a) { return reduce_by_I(generate_system(a)); }

}  // namespace pbw
