#pragma once

// Independent PBW test by overlap resolution in the free algebra. Each relation x_i x_j is
// oriented as the length-lowering rule x_i x_j -> sum_m a[i,j;m] x_m + b[i,j]; the
// filtered algebra is a PBW deformation exactly when every overlap x_i x_j x_k reduces to
// the same normal form whichever end is rewritten first. Nothing here consults the
// coefficient conditions in constraints.hpp.

#include "pbw/algebra.hpp"
#include "pbw/parameters.hpp"
#include "pbw/rational.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pbw::oracle {

/// A word in the generators, 1-based letters; the empty word is 1.
using Word = std::vector<int>;

/// Shortlex: shorter words first, then lexicographic.
struct ShortLex {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

/// Element of k<x_1..x_n>, no zero coefficients stored.
class NCPoly {
 public:
  using Terms = std::map<Word, Rational, ShortLex>;

  NCPoly() = default;
  static NCPoly word(Word w, Rational c = 1) {
    NCPoly p;
    p.add(std::move(w), std::move(c));
    return p;
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  NCPoly& operator+=(const NCPoly& q) {
    for (const auto& [w, c] : q.terms_) add(w, c);
    return *this;
  }
  friend NCPoly operator+(NCPoly p, const NCPoly& q) { return p += q; }
  friend NCPoly operator-(NCPoly p, const NCPoly& q) { return p += q * Rational(-1); }
  friend NCPoly operator*(NCPoly p, const Rational& c) {
    if (c == 0) return {};
    for (auto& [w, v] : p.terms_) v *= c;
    return p;
  }
  /// Concatenation product.
  friend NCPoly operator*(const NCPoly& p, const NCPoly& q) {
    NCPoly out;
    for (const auto& [u, cu] : p.terms_)
      for (const auto& [v, cv] : q.terms_) {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        out.add(uv, cu * cv);
      }
    return out;
  }

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  Terms terms_;
};

inline NCPoly letter(int x) { return NCPoly::word({x}); }

/// Longest words first, ascending within a length, e.g. `x1*x2 - 1/2*x3 + 1`.
inline std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Word, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return x.first.size() > y.first.size(); });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string body;
    for (int x : w) body += (body.empty() ? "x" : "*x") + std::to_string(x);
    if (body.empty())
      out += pbw::to_string(mag);
    else
      out += mag == 1 ? body : pbw::to_string(mag) + "*" + body;
  }
  return out;
}

enum class Strategy { leftmost, rightmost };

/// Length-two left-hand sides with right-hand sides of length at most one, so every
/// rewrite shortens a word and reduction terminates.
class RewriteSystem {
 public:
  RewriteSystem(const Algebra& alg, const NumericTable& t) {
    for (const Arrow& r : alg.relations()) {
      NCPoly rhs = NCPoly::word({}, t.b(r.i, r.j));
      for (int m = 1; m <= alg.n(); ++m) rhs.add({m}, t.a(r.i, r.j, m));
      rules_.emplace(std::make_pair(r.i, r.j), std::move(rhs));
    }
  }

  [[nodiscard]] const std::map<std::pair<int, int>, NCPoly>& rules() const { return rules_; }

  [[nodiscard]] const NCPoly* rule(int x, int y) const {
    auto it = rules_.find({x, y});
    return it == rules_.end() ? nullptr : &it->second;
  }

  /// Position p such that w[p] w[p+1] is a left-hand side, or -1.
  [[nodiscard]] long redex(const Word& w, Strategy s) const {
    const long len = static_cast<long>(w.size());
    if (s == Strategy::leftmost) {
      for (long p = 0; p + 1 < len; ++p)
        if (rule(w[p], w[p + 1])) return p;
    } else {
      for (long p = len - 2; p >= 0; --p)
        if (rule(w[p], w[p + 1])) return p;
    }
    return -1;
  }

  /// One rewrite of the word at position p.
  [[nodiscard]] NCPoly rewrite_at(const Word& w, long p) const {
    NCPoly prefix = NCPoly::word(Word(w.begin(), w.begin() + p));
    NCPoly suffix = NCPoly::word(Word(w.begin() + p + 2, w.end()));
    return prefix * *rule(w[p], w[p + 1]) * suffix;
  }

 private:
  std::map<std::pair<int, int>, NCPoly> rules_;
};

/// Rewrites every word, one redex at a time chosen by `s`, until no left-hand side occurs.
inline NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs, Strategy s = Strategy::leftmost) {
  NCPoly done;
  NCPoly pending = p;
  while (!pending.is_zero()) {
    // longest words first: rewriting only produces shorter words
    auto it = std::prev(pending.terms().end());
    Word w = it->first;
    Rational c = it->second;
    pending.add(w, -c);
    long pos = rs.redex(w, s);
    if (pos < 0)
      done.add(w, c);
    else
      pending += rs.rewrite_at(w, pos) * c;
  }
  return done;
}

struct OverlapFailure {
  Triple triple;
  NCPoly left;   // x_i x_j rewritten first
  NCPoly right;  // x_j x_k rewritten first
};

struct OracleVerdict {
  bool pbw = true;
  std::vector<OverlapFailure> failures;
};

/// Resolves every overlap x_i x_j x_k of two rule left-hand sides.
inline OracleVerdict oracle_verdict(const Algebra& alg, const NumericTable& t, Strategy s = Strategy::leftmost) {
  RewriteSystem rs(alg, t);
  OracleVerdict v;
  for (const auto& [lhs1, rhs1] : rs.rules())
    for (const auto& [lhs2, rhs2] : rs.rules()) {
      if (lhs1.second != lhs2.first) continue;
      NCPoly left = normal_form(rhs1 * letter(lhs2.second), rs, s);
      NCPoly right = normal_form(letter(lhs1.first) * rhs2, rs, s);
      if (left != right) {
        v.pbw = false;
        v.failures.push_back({{lhs1.first, lhs1.second, lhs2.second}, std::move(left), std::move(right)});
      }
    }
  return v;
}

inline OracleVerdict oracle_verdict(const NumericTable& t, Strategy s = Strategy::leftmost) {
  return oracle_verdict(t.algebra(), t, s);
}

}  // namespace pbw::oracle
