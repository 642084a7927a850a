#include "pbw/constraints.hpp"
#include "pbw/existence.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace pbw;
using fixtures::A;
using fixtures::B;
using fixtures::normalized_set;

namespace {

std::map<ParamName, Polynomial> zeros_of(const ConstraintSystem& sys) {
  std::map<ParamName, Polynomial> out;
  for (Origin o : {Origin::Ia, Origin::Ib})
    for (const Constraint& c : sys.of(o))
      for (const ParamName& v : c.polynomial.variables()) out[v] = Polynomial{};
  return out;
}

}  // namespace

TEST(ConditionI, ThreeGenerator) {
  ConstraintSystem sys = generate_condition_I(fixtures::three_generator());
  EXPECT_EQ(sys.polynomial_set(), normalized_set(std::vector<Polynomial>{
                                      A(1, 1, 2), A(1, 1, 3), A(1, 2, 3), A(2, 3, 1), A(3, 3, 1), A(3, 3, 2),
                                      A(1, 2, 1) - A(2, 3, 3)}));
  ASSERT_EQ(sys.count(Origin::Ic), 1U);
  EXPECT_EQ(sys.of(Origin::Ic)[0].label.triple, (Triple{1, 2, 3}));
}

TEST(ConditionI, FourGenerator) {
  ConstraintSystem sys = generate_condition_I(fixtures::four_generator());
  EXPECT_EQ(sys.polynomial_set(), normalized_set(std::vector<Polynomial>{A(1, 2, 3), A(1, 2, 4), A(2, 3, 1),
                                                                         A(1, 2, 1) - A(2, 3, 3)}));
}

TEST(ConditionI, EmptyOverlapsGiveNoConstraints) {
  for (auto rel : std::vector<std::vector<Arrow>>{{}, {{1, 2}}, {{1, 2}, {3, 2}}, {{2, 1}, {2, 3}}}) {
    Algebra a = build_algebra(3, rel);
    ASSERT_TRUE(overlap_basis(a).empty());
    EXPECT_TRUE(generate_system(a).empty());
    Reduction red = reduce_by_I(a);
    EXPECT_TRUE(red.rules.empty());
    EXPECT_TRUE(red.residual.empty());
  }
}

TEST(DPoly, ThreeGeneratorMiddleIndexIsVacuousAfterConditionI) {
  Algebra a = fixtures::three_generator();
  Polynomial d = d_poly(symbolic_table(a), {1, 2, 3}, 2);
  EXPECT_EQ(d, A(1, 2, 2) * A(2, 3, 2) + A(1, 2, 3) * A(3, 3, 2) - A(1, 1, 2) * A(2, 3, 1) -
                   A(1, 2, 2) * A(2, 3, 2));
  EXPECT_TRUE(d.substitute(zeros_of(generate_system(a))).is_zero());
  EXPECT_THROW(d_poly(symbolic_table(a), {1, 3, 3}, 1), std::invalid_argument);
  EXPECT_THROW(d_poly(symbolic_table(a), {1, 2, 3}, 4), std::invalid_argument);
}

TEST(DPoly, FourGeneratorRowR2) {
  Algebra a = fixtures::four_generator();
  ConstraintSystem sys = generate_system(a);
  Polynomial c = (d_poly(symbolic_table(a), {1, 2, 3}, 2) - 0).substitute(zeros_of(sys));
  EXPECT_EQ(c, -A(1, 4, 2) * A(2, 3, 4));
}

TEST(ConditionII, AllAZeroLeavesOnlyBTerms) {
  Algebra a = fixtures::three_generator();
  SymbolicTable t(a, [](const ParamName& p) { return p.is_a() ? Polynomial{} : var(p); });
  for (const auto& [label, p] : condition_II_equations(t)) {
    for (const ParamName& v : p.variables()) EXPECT_FALSE(v.is_a());
    const Triple& q = label.triple;
    if (q.i != q.k && label.r == q.k) {
      EXPECT_EQ(p, B(q.i, q.j));
    }
    if (q.i != q.k && label.r == q.i) {
      EXPECT_EQ(p, -B(q.j, q.k));
    }
  }
}

TEST(ConditionII, FourGeneratorRows) {
  Algebra a = fixtures::four_generator();
  ConstraintSystem sys = generate_system(a);
  auto z = zeros_of(sys);
  std::vector<Polynomial> rows;
  for (const Constraint& c : sys.of(Origin::II)) rows.push_back(c.polynomial.substitute(z));
  EXPECT_EQ(normalized_set(rows),
            normalized_set(std::vector<Polynomial>{
                B(2, 3) + A(1, 2, 1) * A(2, 3, 2) + A(1, 4, 1) * A(2, 3, 4),
                A(1, 4, 2) * A(2, 3, 4),
                B(1, 2) + A(1, 2, 2) * A(2, 3, 3) - A(1, 4, 3) * A(2, 3, 4),
                A(1, 2, 2) * A(2, 3, 4) - A(1, 4, 4) * A(2, 3, 4),
            }));
}

TEST(ConditionIII, Examples) {
  EXPECT_EQ(generate_condition_III(fixtures::four_generator()).polynomial_set(),
            normalized_set(std::vector<Polynomial>{A(1, 2, 2) * B(2, 3) - A(2, 3, 2) * B(1, 2) -
                                                   A(2, 3, 4) * B(1, 4)}));

  // the three-generator III constraints vanish once condition I and the b-values fixed
  // by condition II are substituted; condition I alone does not kill them
  Algebra three = fixtures::three_generator();
  ConstraintSystem sys = generate_system(three);
  Reduction red = reduce_by_I(sys);
  EXPECT_EQ(sys.count(Origin::III), 5U);
  int survive_I = 0;
  for (const Constraint& c : sys.of(Origin::III)) {
    Polynomial p = c.polynomial.substitute(red.rules);
    survive_I += !p.is_zero();
    EXPECT_TRUE(p.substitute(red.determined).is_zero());
  }
  EXPECT_EQ(survive_I, 3);

  SymbolicTable no_b(three, [](const ParamName& p) { return p.is_a() ? var(p) : Polynomial{}; });
  for (const auto& [label, p] : condition_III_equations(no_b)) EXPECT_TRUE(p.is_zero());
}

TEST(ConstraintSystem, NormalizedSortedAndDeduplicated) {
  for (std::uint64_t mask = 0; mask < (1U << 9); ++mask) {
    ConstraintSystem sys = generate_system(algebra_from_mask(3, mask));
    std::set<std::string> seen;
    for (std::size_t p = 0; p < sys.size(); ++p) {
      const Constraint& c = sys.constraints()[p];
      ASSERT_FALSE(c.polynomial.is_zero());
      ASSERT_EQ(c.polynomial, c.polynomial.normalized());
      ASSERT_TRUE(seen.insert(to_string(c.polynomial)).second);
      if (p > 0) {
        ASSERT_LE(sys.constraints()[p - 1].label, c.label);
      }
    }
  }
}

TEST(Check, Examples) {
  Algebra a = fixtures::three_generator();
  EXPECT_TRUE(check(NumericTable(a)).pbw);
  EXPECT_TRUE(check(nontrivial_deformation(a).table).pbw);

  Verdict v = check(numeric_table(a, {{ParamName::a(1, 2, 1), Rational(1)}}));
  EXPECT_FALSE(v.pbw);
  bool ic = false;
  for (const Failure& f : v.failures)
    ic = ic || (f.constraint.label.origin == Origin::Ic && f.constraint.label.triple == Triple{1, 2, 3});
  EXPECT_TRUE(ic);
}

TEST(Check, FailureValuesAreTheSymbolicFormEvaluated) {
  fixtures::Rng rng(11);
  for (std::uint64_t mask = 0; mask < (1U << 9); mask += 7) {
    Algebra a = algebra_from_mask(3, mask);
    NumericTable t = fixtures::random_table(a, rng, 0.6);
    Verdict v = check(t);
    auto at = assignment_of(t);
    for (const Failure& f : v.failures) {
      ASSERT_NE(f.value, 0);
      ASSERT_EQ(f.constraint.polynomial.eval(at), f.value);
    }
    ASSERT_EQ(v.pbw, v.failures.empty());
  }
}

TEST(ReduceByI, ThreeGenerator) {
  Reduction red = reduce_by_I(fixtures::three_generator());
  EXPECT_EQ(red.free_parameters, (std::vector<ParamName>{ParamName::a(1, 1, 1), ParamName::a(1, 2, 1),
                                                         ParamName::a(1, 2, 2), ParamName::a(2, 3, 2),
                                                         ParamName::a(3, 3, 3)}));
  ASSERT_EQ(red.classes.size(), 1U);
  EXPECT_EQ(red.classes[0], (std::vector<ParamName>{ParamName::a(1, 2, 1), ParamName::a(2, 3, 3)}));
  EXPECT_EQ(red.rules.at(ParamName::a(2, 3, 3)), A(1, 2, 1));
  EXPECT_EQ(red.determined.size(), 4U);
  EXPECT_EQ(red.determined.at(ParamName::b(1, 2)), -A(1, 2, 1) * A(1, 2, 2));
  EXPECT_TRUE(red.residual.of(Origin::III).empty());
  EXPECT_EQ(red.residual.polynomial_set(),
            normalized_set(std::vector<Polynomial>{
                B(1, 1) - A(1, 2, 2) * A(1, 2, 2) + A(1, 1, 1) * A(1, 2, 2),
                B(1, 2) + A(1, 2, 1) * A(1, 2, 2),
                B(2, 3) + A(2, 3, 2) * A(1, 2, 1),
                B(3, 3) - A(2, 3, 2) * A(2, 3, 2) + A(2, 3, 2) * A(3, 3, 3),
            }));
}

TEST(ReduceByI, FourGeneratorDerivedForms) {
  Reduction red = reduce_by_I(fixtures::four_generator());
  EXPECT_EQ(red.residual.of(Origin::II).size(), 4U);
  std::set<std::string> residual = red.residual.polynomial_set();
  for (const Polynomial& expected :
       {B(2, 3) + A(1, 2, 1) * A(2, 3, 2) + A(1, 4, 1) * A(2, 3, 4),
        B(1, 2) + A(1, 2, 2) * A(1, 2, 1) - A(1, 4, 3) * A(2, 3, 4)})
    EXPECT_TRUE(residual.count(to_string(expected.normalized()))) << to_string(expected);
}

TEST(ReduceByI, PathAndCycleFamilies) {
  for (int t = 3; t <= 8; ++t)
    for (bool cycle : {false, true}) {
      Algebra a = cycle ? fixtures::cycle_algebra(t) : fixtures::path_algebra(t);
      Reduction red = reduce_by_I(a);

      std::set<std::vector<ParamName>> expected_classes;
      for (const Triple& q : overlap_basis(a)) {
        std::vector<ParamName> cls{ParamName::a(q.i, q.j, q.i), ParamName::a(q.j, q.k, q.k)};
        std::sort(cls.begin(), cls.end());
        expected_classes.insert(cls);
      }
      EXPECT_EQ(expected_classes.size(), cycle ? static_cast<std::size_t>(t) : static_cast<std::size_t>(t - 2));
      EXPECT_EQ(std::set<std::vector<ParamName>>(red.classes.begin(), red.classes.end()), expected_classes);

      for (const Arrow& r : a.relations())
        for (int m = 1; m <= t; ++m)
          if (m != r.i && m != r.j) {
            EXPECT_TRUE(red.rules.at(ParamName::a(r.i, r.j, m)).is_zero());
          }

      std::vector<Polynomial> expected_b;
      for (const Arrow& r : a.relations())
        expected_b.push_back((B(r.i, r.j) + A(r.i, r.j, r.i) * A(r.i, r.j, r.j)).substitute(red.rules));
      EXPECT_EQ(normalized_set(red.residual.of(Origin::II)), normalized_set(expected_b)) << "t=" << t;
    }
}

TEST(ReduceByI, PreservesTheSolutionSet) {
  fixtures::Rng rng(5);
  for (std::uint64_t mask = 0; mask < (1U << 9); ++mask) {
    Algebra a = algebra_from_mask(3, mask);
    Reduction red = reduce_by_I(a);
    for (const NumericTable& t : fixtures::table_family(a, red, rng, 8)) {
      auto at = assignment_of(t);
      bool rules_hold = true;
      for (const auto& [v, rhs] : red.rules) rules_hold = rules_hold && at.at(v) == rhs.eval(at);
      bool residual_holds = true;
      for (const Constraint& c : red.residual.constraints()) residual_holds = residual_holds && c.polynomial.eval(at) == 0;
      ASSERT_EQ(check(t).pbw, rules_hold && residual_holds) << "mask=" << mask;
    }
  }
}
