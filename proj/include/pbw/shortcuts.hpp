#pragma once

#include "pbw/algebra.hpp"
#include "pbw/constraints.hpp"
#include "pbw/parameters.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace pbw {

/// Index pattern of an overlap word x_i x_j x_k.
enum class Shape { Distinct, IIK, IKK, IJI, III };

inline std::string to_string(Shape s) {
  switch (s) {
    case Shape::Distinct: return "ijk";
    case Shape::IIK: return "iik";
    case Shape::IKK: return "ikk";
    case Shape::IJI: return "iji";
    case Shape::III: return "iii";
  }
  return "?";
}

inline Shape shape_of(const Triple& t) {
  if (t.i == t.j && t.j == t.k) return Shape::III;
  if (t.i == t.k) return Shape::IJI;
  if (t.i == t.j) return Shape::IIK;
  if (t.j == t.k) return Shape::IKK;
  return Shape::Distinct;
}

/// What the graph around one overlap lets us skip.
///
/// Clause 1 fires when the neighbourhood is sparse enough that, once condition I holds
/// everywhere, the clause-II equations for r in `skip_II` vanish identically. Clause 2
/// adds a loop pattern under which, once I and II hold everywhere, the clause-III
/// equation vanishes too. For x_i^3 a single clause covers both II and III and needs
/// only condition I.
struct TripleShortcut {
  Triple triple;
  Shape shape = Shape::Distinct;
  bool clause1 = false;
  bool clause2 = false;
  std::string pattern1;
  std::string pattern2;
  std::set<int> skip_II;
  bool skip_III = false;
  bool skip_III_needs_II = true;
};

struct ShortcutReport {
  std::vector<TripleShortcut> triples;
};

namespace detail {

inline std::set<int> all_indices_except(int n, std::initializer_list<int> keep) {
  std::set<int> out;
  for (int r = 1; r <= n; ++r)
    if (std::find(keep.begin(), keep.end(), r) == keep.end()) out.insert(r);
  return out;
}

/// No arrow i -> m' for m' outside `out_ok` and no arrow m -> k for m outside `in_ok`.
inline bool sparse_around(const Algebra& a, int i, int k, std::initializer_list<int> out_ok,
                          std::initializer_list<int> in_ok) {
  for (int m = 1; m <= a.n(); ++m) {
    bool out_allowed = std::find(out_ok.begin(), out_ok.end(), m) != out_ok.end();
    bool in_allowed = std::find(in_ok.begin(), in_ok.end(), m) != in_ok.end();
    if (!out_allowed && a.has(i, m)) return false;
    if (!in_allowed && a.has(m, k)) return false;
  }
  return true;
}

}  // namespace detail

inline TripleShortcut shortcut_for(const Algebra& a, const Triple& t) {
  const int n = a.n();
  const int i = t.i, j = t.j, k = t.k;
  TripleShortcut s;
  s.triple = t;
  s.shape = shape_of(t);

  switch (s.shape) {
    case Shape::Distinct:
      s.clause1 = detail::sparse_around(a, i, k, {i, j}, {j, k});
      if (s.clause1) {
        s.pattern1 = "only arrows i->i, i->j leave i; only j->k, k->k enter k";
        s.skip_II = detail::all_indices_except(n, {i, j, k});
        if (a.has(i, i) == a.has(k, k)) {
          s.clause2 = true;
          s.pattern2 = a.has(i, i) ? "loops at both i and k" : "no loop at i or k";
        }
      }
      break;

    case Shape::IIK:
      s.clause1 = detail::sparse_around(a, i, k, {i, k}, {i, k});
      if (s.clause1) {
        s.pattern1 = "i->m and m->k absent for every m outside {i,k}";
        s.skip_II = detail::all_indices_except(n, {i, k});
        if (!a.has(k, k)) {
          s.clause2 = true;
          s.pattern2 = "no loop at k";
        } else if (!a.has(k, i)) {
          s.clause2 = true;
          s.pattern2 = "no arrow k->i";
        }
      }
      break;

    case Shape::IKK:
      s.clause1 = detail::sparse_around(a, i, k, {i, k}, {i, k});
      if (s.clause1) {
        s.pattern1 = "i->m and m->k absent for every m outside {i,k}";
        s.skip_II = detail::all_indices_except(n, {i, k});
        if (!a.has(i, i)) {
          s.clause2 = true;
          s.pattern2 = "no loop at i";
        } else if (!a.has(k, i)) {
          s.clause2 = true;
          s.pattern2 = "no arrow k->i";
        }
      }
      break;

    case Shape::IJI: {
      bool ok = true;
      for (int m = 1; m <= n && ok; ++m) {
        if (m == i || m == j) continue;
        bool cut_from_i = !a.has(i, m) && !a.has(m, i);
        bool cut_from_j = !a.has(j, m) && !a.has(m, j);
        ok = cut_from_i || cut_from_j || !a.has(m, m);
      }
      s.clause1 = ok;
      if (s.clause1) {
        s.pattern1 = "every other vertex is cut off from i, cut off from j, or loop-free";
        s.skip_II = detail::all_indices_except(n, {i, j});
        if (!a.has(i, i) && !a.has(j, j)) {
          s.clause2 = true;
          s.pattern2 = "no loop at i or j";
        }
      }
      break;
    }

    case Shape::III: {
      bool ok = true;
      for (int m = 1; m <= n && ok; ++m)
        if (m != i) ok = !a.has(i, m) || !a.has(m, i) || !a.has(m, m);
      s.clause1 = ok;
      if (s.clause1) {
        s.pattern1 = "no other vertex has arrows both ways to i and a loop";
        s.skip_II = detail::all_indices_except(n, {});
        s.skip_III = true;
        s.skip_III_needs_II = false;
      }
      break;
    }
  }
  if (s.clause2) s.skip_III = true;
  return s;
}

inline ShortcutReport shortcut_report(const Algebra& a) {
  ShortcutReport rep;
  for (const Triple& t : overlap_basis(a)) rep.triples.push_back(shortcut_for(a, t));
  return rep;
}

enum class Pruning { off, shortcuts };

/// check() that skips the equations the shortcut report marks as implied. Skips are
/// taken only once their hypotheses hold on this table: clause-1 and x_i^3 skips after
/// all of condition I has passed, clause-2 skips after all evaluated II equations passed.
inline Verdict check(const NumericTable& t, Pruning pruning) {
  if (pruning == Pruning::off) return check(t);
  const Algebra& alg = t.algebra();
  const ShortcutReport rep = shortcut_report(alg);

  Equations<Rational> evaluated = condition_I_equations(t);
  bool I_holds = true;
  for (const auto& e : evaluated) I_holds = I_holds && e.second == 0;

  bool II_holds = true;
  for (const TripleShortcut& s : rep.triples)
    for (int r = 1; r <= alg.n(); ++r) {
      if (I_holds && s.skip_II.count(r)) continue;
      Rational v = d_value(t, s.triple, r) - condition_II_rhs(t, s.triple, r);
      II_holds = II_holds && v == 0;
      evaluated.push_back({{s.triple, Origin::II, r, std::nullopt}, std::move(v)});
    }

  for (const TripleShortcut& s : rep.triples) {
    bool skip = I_holds && s.skip_III && (!s.skip_III_needs_II || II_holds);
    if (skip) continue;
    evaluated.push_back({{s.triple, Origin::III, std::nullopt, std::nullopt}, condition_III_value(t, s.triple)});
  }
  return detail::verdict_from(alg, evaluated);
}

}  // namespace pbw
