#pragma once

#include "pbw/algebra.hpp"
#include "pbw/polynomial.hpp"
#include "pbw/rational.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace pbw {

/// Parameters that exist for `alg`: a[i,j;m] for every relation (i,j) and every m,
/// then b[i,j]; ordered by ParamName.
inline std::vector<ParamName> in_scope_parameters(const Algebra& alg) {
  std::vector<ParamName> out;
  out.reserve(alg.size() * (static_cast<std::size_t>(alg.n()) + 1));
  for (const Arrow& r : alg.relations())
    for (int m = 1; m <= alg.n(); ++m) out.push_back(ParamName::a(r.i, r.j, m));
  for (const Arrow& r : alg.relations()) out.push_back(ParamName::b(r.i, r.j));
  return out;
}

inline bool in_scope(const Algebra& alg, const ParamName& p) {
  if (!alg.has(p.i, p.j)) return false;
  return p.is_a() ? (p.m >= 1 && p.m <= alg.n()) : p.m == 0;
}

/// Raised when a caller tries to set a parameter whose relation is not in R. Such
/// parameters are identically zero by convention and cannot carry a value.
class OutOfScopeParameter : public ValidationError {
 public:
  explicit OutOfScopeParameter(const ParamName& p)
      : ValidationError(to_string(p) + " is out of scope: x" + std::to_string(p.i) + "x" +
                        std::to_string(p.j) +
                        " is not a relation, so the parameter is identically zero and may not be set") {}
};

/// Filtration parameters a[i,j;m], b[i,j] of an algebra, valued in `Value`
/// (Rational for concrete tables, Polynomial for symbolic ones). Lookups of parameters
/// whose relation is not in R return zero rather than failing.
template <class Value>
class ParameterTable {
 public:
  using value_type = Value;

  /// Every in-scope parameter initialised from `init`.
  ParameterTable(Algebra alg, const std::function<Value(const ParamName&)>& init)
      : alg_(std::move(alg)),
        a_(alg_.size() * static_cast<std::size_t>(alg_.n())),
        b_(alg_.size()) {
    for (const ParamName& p : in_scope_parameters(alg_)) slot(p) = init(p);
  }

  explicit ParameterTable(Algebra alg) : ParameterTable(std::move(alg), [](const ParamName&) { return Value{}; }) {}

  [[nodiscard]] const Algebra& algebra() const { return alg_; }

  [[nodiscard]] Value a(int i, int j, int m) const {
    int r = alg_.index_of(i, j);
    if (r < 0 || m < 1 || m > alg_.n()) return Value{};
    return a_[static_cast<std::size_t>(r) * alg_.n() + (m - 1)];
  }

  [[nodiscard]] Value b(int i, int j) const {
    int r = alg_.index_of(i, j);
    return r < 0 ? Value{} : b_[static_cast<std::size_t>(r)];
  }

  [[nodiscard]] Value operator[](const ParamName& p) const { return p.is_a() ? a(p.i, p.j, p.m) : b(p.i, p.j); }

  /// Copy with one in-scope parameter replaced.
  [[nodiscard]] ParameterTable with(const ParamName& p, Value v) const {
    if (!in_scope(alg_, p)) throw OutOfScopeParameter(p);
    ParameterTable out = *this;
    out.slot(p) = std::move(v);
    return out;
  }

  /// (name, value) for every in-scope parameter, in ParamName order.
  [[nodiscard]] std::vector<std::pair<ParamName, Value>> entries() const {
    std::vector<std::pair<ParamName, Value>> out;
    for (const ParamName& p : in_scope_parameters(alg_)) out.emplace_back(p, (*this)[p]);
    return out;
  }

  [[nodiscard]] std::size_t size() const { return a_.size() + b_.size(); }

  /// All in-scope values are zero, i.e. the filtered algebra is A itself.
  [[nodiscard]] bool is_trivial() const {
    for (const Value& v : a_)
      if (!is_zero(v)) return false;
    for (const Value& v : b_)
      if (!is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const ParameterTable&, const ParameterTable&) = default;

 private:
  Value& slot(const ParamName& p) {
    auto r = static_cast<std::size_t>(alg_.index_of(p.i, p.j));
    return p.is_a() ? a_[r * alg_.n() + (p.m - 1)] : b_[r];
  }

  Algebra alg_;
  std::vector<Value> a_;
  std::vector<Value> b_;
};

using NumericTable = ParameterTable<Rational>;
using SymbolicTable = ParameterTable<Polynomial>;

/// Every in-scope parameter mapped to its own variable.
inline SymbolicTable symbolic_table(const Algebra& alg) {
  return SymbolicTable(alg, [](const ParamName& p) { return var(p); });
}

/// Concrete table; parameters not listed default to zero.
inline NumericTable numeric_table(const Algebra& alg, const std::vector<std::pair<ParamName, Rational>>& entries) {
  NumericTable t(alg);
  for (const auto& [p, v] : entries) t = t.with(p, v);
  return t;
}

/// The concrete table as a variable assignment (for Polynomial::eval).
inline std::map<ParamName, Rational> assignment_of(const NumericTable& t) {
  std::map<ParamName, Rational> out;
  for (auto& [p, v] : t.entries()) out.emplace(p, std::move(v));
  return out;
}

}  // namespace pbw
