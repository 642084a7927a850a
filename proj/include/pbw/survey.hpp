#pragma once

#include "pbw/algebra.hpp"
#include "pbw/constraints.hpp"
#include "pbw/existence.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace pbw {

struct SurveyRow {
  std::uint64_t mask = 0;
  std::vector<Arrow> relations;
  std::size_t overlaps = 0;
  std::array<std::size_t, 5> counts{};  // by Origin: I.a, I.b, I.c, II, III
  std::size_t free_parameters = 0;
  std::optional<int> branch;            // existence construction branch, absent when R is empty
};

inline SurveyRow survey_row(int n, std::uint64_t mask) {
  Algebra alg = algebra_from_mask(n, mask);
  ConstraintSystem sys = generate_system(alg);
  SurveyRow row;
  row.mask = mask;
  row.relations = alg.relations();
  row.overlaps = overlap_basis(alg).size();
  for (const Constraint& c : sys.constraints()) ++row.counts[static_cast<std::size_t>(c.label.origin)];
  row.free_parameters = reduce_by_I(sys).free_parameters.size();
  if (!alg.empty()) row.branch = nontrivial_deformation(alg).branch;
  return row;
}

/// One row per relation set on n generators (all 2^(n^2) of them), ordered by mask.
inline std::vector<SurveyRow> survey(int n, unsigned threads = std::thread::hardware_concurrency()) {
  if (n < 1 || n > 4) throw ValidationError("survey supports 1 <= n <= 4, got " + std::to_string(n));
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  std::vector<SurveyRow> rows(total);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t m = next++; m < total; m = next++) rows[m] = survey_row(n, m);
  };
  threads = std::max(1U, std::min<unsigned>(threads, 64));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::string relations_field(const std::vector<Arrow>& rel) {
  std::string s;
  for (const Arrow& r : rel) s += (s.empty() ? "" : " ") + std::to_string(r.i) + ">" + std::to_string(r.j);
  return s;
}

inline void write_csv(std::ostream& os, const std::vector<SurveyRow>& rows) {
  os << "mask,relations,R,Q,I.a,I.b,I.c,II,III,free,case\n";
  for (const SurveyRow& r : rows) {
    os << r.mask << "," << relations_field(r.relations) << "," << r.relations.size() << "," << r.overlaps;
    for (std::size_t c : r.counts) os << "," << c;
    os << "," << r.free_parameters << "," << (r.branch ? std::to_string(*r.branch) : "") << "\n";
  }
}

}  // namespace pbw
