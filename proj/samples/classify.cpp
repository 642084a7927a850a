// Walks one algebra through the library: constraints, elimination, a deformation,
// and the two independent verdicts on it.
#include "pbw/pbw.hpp"

#include <iostream>

int main() {
  using namespace pbw;
  Algebra alg = build_algebra(4, {{1, 2}, {2, 3}, {1, 4}});

  std::cout << "overlaps:";
  for (const Triple& t : overlap_basis(alg)) std::cout << " " << to_string(t);
  std::cout << "\n";

  Reduction red = reduce_by_I(generate_system(alg));
  std::cout << "after eliminating condition I (" << red.rules.size() << " rules):\n";
  for (const Constraint& c : red.residual.constraints())
    std::cout << "  " << to_string(c.label.origin) << "  " << to_string(c.polynomial) << " = 0\n";

  Deformation d = nontrivial_deformation(alg);
  std::cout << "construction branch " << d.branch << ": checker says " << (check(d.table).pbw ? "PBW" : "not PBW")
            << ", rewriting oracle says " << (oracle::oracle_verdict(d.table).pbw ? "PBW" : "not PBW") << "\n";
}
