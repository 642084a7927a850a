#pragma once

#include "pbw/rational.hpp"

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbw {

/// Name of a filtration parameter: a[i,j;m] (coefficient of x_m in the image of x_i x_j)
/// or b[i,j] (its constant term). Ordered by kind, then (i,j), then m.
struct ParamName {
  enum class Kind : std::uint8_t { A, B };

  Kind kind = Kind::A;
  int i = 0;
  int j = 0;
  int m = 0;  // 0 for kind B

  static constexpr ParamName a(int i, int j, int m) { return {Kind::A, i, j, m}; }
  static constexpr ParamName b(int i, int j) { return {Kind::B, i, j, 0}; }

  [[nodiscard]] bool is_a() const { return kind == Kind::A; }

  friend auto operator<=>(const ParamName&, const ParamName&) = default;
};

inline std::string to_string(const ParamName& p) {
  if (p.is_a())
    return "a[" + std::to_string(p.i) + "," + std::to_string(p.j) + ";" + std::to_string(p.m) + "]";
  return "b[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]";
}

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A power product of parameters, variables strictly increasing, exponents positive.
class Monomial {
 public:
  using Factor = std::pair<ParamName, int>;

  Monomial() = default;
  explicit Monomial(ParamName v) : factors_{{v, 1}} {}

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] bool is_one() const { return factors_.empty(); }
  [[nodiscard]] int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.factors_.reserve(x.factors_.size() + y.factors_.size());
    auto p = x.factors_.begin();
    auto q = y.factors_.begin();
    while (p != x.factors_.end() || q != y.factors_.end()) {
      if (q == y.factors_.end() || (p != x.factors_.end() && p->first < q->first)) {
        out.factors_.push_back(*p++);
      } else if (p == x.factors_.end() || q->first < p->first) {
        out.factors_.push_back(*q++);
      } else {
        out.factors_.emplace_back(p->first, p->second + q->second);
        ++p;
        ++q;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, arranged so that the *greater* monomial sorts first:
/// higher total degree wins; ties go to the larger exponent on the earliest differing
/// variable in ParamName order. Maps keyed with this comparator iterate leading-term first.
struct LeadingFirst {
  bool operator()(const Monomial& x, const Monomial& y) const {
    int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx > dy;
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    std::size_t p = 0;
    for (; p < fx.size() && p < fy.size(); ++p) {
      if (fx[p].first != fy[p].first) return fx[p].first < fy[p].first;
      if (fx[p].second != fy[p].second) return fx[p].second > fy[p].second;
    }
    return false;  // equal degree and equal prefix means equal monomials
  }
};

/// Sparse multivariate polynomial over Q in parameter variables. The term map never
/// stores zero coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, LeadingFirst>;

  Polynomial() = default;
  Polynomial(Rational c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(ParamName v) {
    Polynomial p;
    p.terms_.emplace(Monomial(v), Rational(1));
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  [[nodiscard]] Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  [[nodiscard]] int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  [[nodiscard]] std::set<ParamName> variables() const {
    std::set<ParamName> vs;
    for (const auto& [mono, c] : terms_)
      for (const auto& f : mono.factors()) vs.insert(f.first);
    return vs;
  }

  Polynomial& operator+=(const Polynomial& q) {
    for (const auto& [mono, c] : q.terms_) add_term(mono, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& q) {
    for (const auto& [mono, c] : q.terms_) add_term(mono, -c);
    return *this;
  }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& [mono, c] : p.terms_) c = -c;
    return p;
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial out;
    for (const auto& [mx, cx] : p.terms_)
      for (const auto& [my, cy] : q.terms_) out.add_term(mx * my, cx * cy);
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact value under `lookup`, a callable ParamName -> std::optional<Rational>.
  template <class Lookup>
    requires std::invocable<Lookup&, const ParamName&>
  [[nodiscard]] Rational eval(Lookup&& lookup) const {
    Rational sum = 0;
    for (const auto& [mono, c] : terms_) {
      Rational term = c;
      for (const auto& [v, e] : mono.factors()) {
        std::optional<Rational> x = lookup(v);
        if (!x) throw EvaluationError("no value for " + to_string(v));
        for (int k = 0; k < e; ++k) term *= *x;
      }
      sum += term;
    }
    return sum;
  }

  [[nodiscard]] Rational eval(const std::map<ParamName, Rational>& assignment) const {
    return eval([&](const ParamName& v) -> std::optional<Rational> {
      auto it = assignment.find(v);
      if (it == assignment.end()) return std::nullopt;
      return it->second;
    });
  }

  /// Simultaneous substitution. Rules must not mention any substituted variable on a
  /// right-hand side.
  [[nodiscard]] Polynomial substitute(const std::map<ParamName, Polynomial>& rules) const {
    for (const auto& [v, rhs] : rules)
      for (const ParamName& w : rhs.variables())
        if (rules.count(w))
          throw std::invalid_argument("cyclic substitution: " + to_string(w) +
                                      " occurs in the rule for " + to_string(v));
    Polynomial out;
    for (const auto& [mono, c] : terms_) {
      Polynomial term(c);
      Monomial kept;
      for (const auto& [v, e] : mono.factors()) {
        auto it = rules.find(v);
        for (int k = 0; k < e; ++k) {
          if (it == rules.end())
            kept = kept * Monomial(v);
          else
            term = term * it->second;
        }
        if (term.is_zero()) break;
      }
      if (term.is_zero()) continue;
      Polynomial unit;
      unit.terms_.emplace(std::move(kept), Rational(1));
      out += term * unit;
    }
    return out;
  }

  /// Scaled to integer coefficients with unit content and positive leading coefficient,
  /// so that p = 0 and c*p = 0 compare equal.
  [[nodiscard]] Polynomial normalized() const {
    if (terms_.empty()) return {};
    Integer den = 1;
    for (const auto& [mono, c] : terms_) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    Integer content = 0;
    for (const auto& [mono, c] : terms_) {
      Integer num = boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c));
      content = boost::multiprecision::gcd(content, num);
    }
    if (content < 0) content = -content;
    Rational scale(den, content);
    if (terms_.begin()->second < 0) scale = -scale;
    Polynomial out = *this;
    for (auto& [mono, c] : out.terms_) c *= scale;
    return out;
  }

 private:
  void add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

inline Polynomial var(ParamName v) { return Polynomial::variable(v); }

/// Canonical text: terms leading-first, `a[i,j;m]`/`b[i,j]` names, `^e` powers and
/// explicit rational coefficients, e.g. `a[1,2;1]*a[1,2;2] - 1/2*b[1,2] + 3`.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string body;
    for (const auto& [v, e] : mono.factors()) {
      if (!body.empty()) body += "*";
      body += to_string(v);
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += to_string(mag) + "*" + body;
  }
  return out;
}

}  // namespace pbw
