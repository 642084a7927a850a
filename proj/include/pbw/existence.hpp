#pragma once

#include "pbw/algebra.hpp"
#include "pbw/parameters.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pbw {

/// A nonzero PBW deformation built by hand, with the construction branch that produced it.
///
/// Branch 1: some loop x_l^2 in R. Only a[l,l;l] = 1.
/// Branch 2: no loops, but a two-cycle x_s x_t, x_t x_s in R. For u in {s,t}:
///   a[p,u;p] = 1 for every arrow p -> u, a[u,q;q] = 1 for every arrow u -> q,
///   and b[s,t] = b[t,s] = -1.
/// Branch 3: neither. For the smallest vertex u touching an arrow, the same a-entries
///   as branch 2 around u alone, all b zero.
/// In every branch a[i,j;m] = 0 for m outside {i,j}.
struct Deformation {
  NumericTable table;
  int branch = 0;
  /// l for branch 1, (s,t) for branch 2, u for branch 3 (second entry unused).
  std::pair<int, int> witness;
};

namespace detail {

inline void set_around(const Algebra& alg, int u, std::vector<std::pair<ParamName, Rational>>& out) {
  for (int p : alg.in_neighbors(u)) out.emplace_back(ParamName::a(p, u, p), Rational(1));
  for (int q : alg.out_neighbors(u)) out.emplace_back(ParamName::a(u, q, q), Rational(1));
}

}  // namespace detail

inline Deformation nontrivial_deformation(const Algebra& alg) {
  if (alg.empty()) throw ValidationError("no filtration parameters exist: the relation set is empty");
  const int n = alg.n();

  for (int l = 1; l <= n; ++l)
    if (alg.has(l, l)) return {numeric_table(alg, {{ParamName::a(l, l, l), Rational(1)}}), 1, {l, l}};

  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      if (alg.has(s, t) && alg.has(t, s)) {
        std::vector<std::pair<ParamName, Rational>> entries;
        detail::set_around(alg, s, entries);
        detail::set_around(alg, t, entries);
        entries.emplace_back(ParamName::b(s, t), Rational(-1));
        entries.emplace_back(ParamName::b(t, s), Rational(-1));
        return {numeric_table(alg, entries), 2, {s, t}};
      }

  for (int u = 1; u <= n; ++u) {
    if (alg.in_neighbors(u).empty() && alg.out_neighbors(u).empty()) continue;
    std::vector<std::pair<ParamName, Rational>> entries;
    detail::set_around(alg, u, entries);
    return {numeric_table(alg, entries), 3, {u, 0}};
  }
  throw std::logic_error("nonempty relation set without an incident vertex");
}

}  // namespace pbw
