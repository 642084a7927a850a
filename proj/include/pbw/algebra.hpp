#pragma once

#include "pbw/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace pbw {

/// A quadratic monomial relation x_i x_j, i.e. an arrow i -> j of the relation graph.
/// Indices are 1-based throughout the public interface.
struct Arrow {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// The word x_i x_j x_k with both x_i x_j and x_j x_k relations (a length-two path).
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline std::string to_string(const Arrow& a) {
  return "(" + std::to_string(a.i) + "," + std::to_string(a.j) + ")";
}

inline std::string to_string(const Triple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
}

/// k<x_1..x_n>/(R) with R spanned by quadratic monomials. Immutable; relations are kept
/// sorted and duplicate-free so every serialization is deterministic.
class Algebra {
 public:
  Algebra(int n, std::vector<Arrow> relations) : n_(n), relations_(std::move(relations)) {
    if (n_ < 1) throw ValidationError("generator count must be positive, got " + std::to_string(n_));
    for (const Arrow& r : relations_) {
      if (r.i < 1 || r.i > n_ || r.j < 1 || r.j > n_)
        throw ValidationError("relation " + to_string(r) + " has an index outside 1.." +
                              std::to_string(n_));
    }
    std::sort(relations_.begin(), relations_.end());
    relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());

    index_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (std::size_t p = 0; p < relations_.size(); ++p)
      index_[slot(relations_[p].i, relations_[p].j)] = static_cast<int>(p);
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<Arrow>& relations() const& { return relations_; }
  [[nodiscard]] std::vector<Arrow> relations() && { return std::move(relations_); }
  [[nodiscard]] std::size_t size() const { return relations_.size(); }
  [[nodiscard]] bool empty() const { return relations_.empty(); }

  /// True iff x_i x_j is a relation. Out-of-range indices are simply not relations.
  [[nodiscard]] bool has(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) return false;
    return index_[slot(i, j)] >= 0;
  }

  /// Position of (i,j) in relations(), or -1.
  [[nodiscard]] int index_of(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) return -1;
    return index_[slot(i, j)];
  }

  /// {p : x_p x_u in R}
  [[nodiscard]] std::vector<int> in_neighbors(int u) const {
    std::vector<int> out;
    for (int p = 1; p <= n_; ++p)
      if (has(p, u)) out.push_back(p);
    return out;
  }

  /// {q : x_u x_q in R}
  [[nodiscard]] std::vector<int> out_neighbors(int u) const {
    std::vector<int> out;
    for (int q = 1; q <= n_; ++q)
      if (has(u, q)) out.push_back(q);
    return out;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.relations_ == b.relations_;
  }

 private:
  [[nodiscard]] std::size_t slot(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<Arrow> relations_;
  std::vector<int> index_;
};

inline Algebra build_algebra(int n, std::vector<Arrow> relations) {
  return Algebra(n, std::move(relations));
}

/// Algebra on n generators whose relation set is encoded by the bits of `mask`;
/// bit (i-1)*n + (j-1) stands for x_i x_j. Used for exhaustive enumeration.
inline Algebra algebra_from_mask(int n, std::uint64_t mask) {
  std::vector<Arrow> rel;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (mask >> ((i - 1) * n + (j - 1)) & 1U) rel.push_back({i, j});
  return Algebra(n, std::move(rel));
}

inline std::uint64_t mask_of(const Algebra& a) {
  std::uint64_t mask = 0;
  for (const Arrow& r : a.relations()) mask |= std::uint64_t{1} << ((r.i - 1) * a.n() + (r.j - 1));
  return mask;
}

/// Basis of RV ∩ VR: all length-two paths i -> j -> k, lexicographically sorted.
inline std::vector<Triple> overlap_basis(const Algebra& a) {
  std::vector<Triple> q;
  for (const Arrow& first : a.relations())
    for (int k = 1; k <= a.n(); ++k)
      if (a.has(first.j, k)) q.push_back({first.i, first.j, k});
  return q;
}

inline bool in_overlap_basis(const Algebra& a, const Triple& t) {
  return a.has(t.i, t.j) && a.has(t.j, t.k);
}

/// Weakly connected components of the relation graph, as arrow sets.
/// Vertices without arrows are ignored; components are ordered by their smallest arrow.
class Components {
 public:
  explicit Components(const Algebra& a) : parent_(static_cast<std::size_t>(a.n()) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const Arrow& r : a.relations()) unite(r.i, r.j);

    std::vector<int> slot_of_root(parent_.size(), -1);
    for (const Arrow& r : a.relations()) {
      int root = find(r.i);
      if (slot_of_root[root] < 0) {
        slot_of_root[root] = static_cast<int>(groups_.size());
        groups_.emplace_back();
      }
      groups_[slot_of_root[root]].push_back(r);
    }
    vertex_component_.assign(parent_.size(), -1);
    for (std::size_t c = 0; c < groups_.size(); ++c)
      for (const Arrow& r : groups_[c]) {
        vertex_component_[r.i] = static_cast<int>(c);
        vertex_component_[r.j] = static_cast<int>(c);
      }
  }

  [[nodiscard]] const std::vector<std::vector<Arrow>>& groups() const { return groups_; }

  /// Component index of a vertex, -1 for isolated generators.
  [[nodiscard]] int of_vertex(int v) const { return vertex_component_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] int of_arrow(const Arrow& r) const { return of_vertex(r.i); }

 private:
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

  std::vector<int> parent_;
  std::vector<std::vector<Arrow>> groups_;
  std::vector<int> vertex_component_;
};

inline std::vector<std::vector<Arrow>> components(const Algebra& a) { return Components(a).groups(); }

/// Graphviz rendering: one node per generator, one edge per relation.
inline std::string export_dot(const Algebra& a) {
  std::ostringstream os;
  os << "digraph Gamma {\n";
  for (int v = 1; v <= a.n(); ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (const Arrow& r : a.relations()) os << "  " << r.i << " -> " << r.j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pbw
