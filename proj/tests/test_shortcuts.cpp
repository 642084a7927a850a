#include "pbw/shortcuts.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace pbw;

TEST(Shape, Classification) {
  EXPECT_EQ(shape_of({1, 1, 1}), Shape::III);
  EXPECT_EQ(shape_of({1, 2, 1}), Shape::IJI);
  EXPECT_EQ(shape_of({1, 1, 2}), Shape::IIK);
  EXPECT_EQ(shape_of({1, 2, 2}), Shape::IKK);
  EXPECT_EQ(shape_of({1, 2, 3}), Shape::Distinct);
  EXPECT_EQ(to_string(Shape::IKK), "ikk");
}

TEST(Shortcuts, SingleLoopSkipsEverything) {
  ShortcutReport rep = shortcut_report(build_algebra(1, {{1, 1}}));
  ASSERT_EQ(rep.triples.size(), 1U);
  const TripleShortcut& s = rep.triples[0];
  EXPECT_EQ(s.shape, Shape::III);
  EXPECT_TRUE(s.clause1);
  EXPECT_EQ(s.skip_II, (std::set<int>{1}));
  EXPECT_TRUE(s.skip_III);
  EXPECT_FALSE(s.skip_III_needs_II);
}

TEST(Shortcuts, PathTriplesKeepOnlyTheirOwnIndices) {
  Algebra a = fixtures::path_algebra(5);
  for (const TripleShortcut& s : shortcut_report(a).triples) {
    EXPECT_EQ(s.shape, Shape::Distinct);
    EXPECT_TRUE(s.clause1);
    EXPECT_TRUE(s.clause2);
    EXPECT_TRUE(s.skip_III);
    std::set<int> keep{s.triple.i, s.triple.j, s.triple.k};
    for (int r = 1; r <= 5; ++r) EXPECT_EQ(s.skip_II.count(r) == 1, keep.count(r) == 0);
  }
}

TEST(Shortcuts, FourGeneratorNothingSkippable) {
  ShortcutReport rep = shortcut_report(fixtures::four_generator());
  ASSERT_EQ(rep.triples.size(), 1U);
  EXPECT_FALSE(rep.triples[0].clause1);
  EXPECT_FALSE(rep.triples[0].clause2);
  EXPECT_TRUE(rep.triples[0].skip_II.empty());
  EXPECT_FALSE(rep.triples[0].skip_III);
}

TEST(Shortcuts, IikAndIkkClauseTwo) {
  // (1,1,2) with a loop at 2 and 2 -> 1: clause 2 must not fire
  Algebra blocked = build_algebra(2, {{1, 1}, {1, 2}, {2, 2}, {2, 1}});
  EXPECT_FALSE(shortcut_for(blocked, {1, 1, 2}).clause2);
  EXPECT_TRUE(shortcut_for(blocked, {1, 1, 2}).clause1);
  Algebra open = build_algebra(2, {{1, 1}, {1, 2}, {2, 2}});
  EXPECT_TRUE(shortcut_for(open, {1, 1, 2}).clause2);
  EXPECT_TRUE(shortcut_for(open, {1, 2, 2}).clause2);
  // an extra arrow 1 -> 3 breaks clause 1
  EXPECT_FALSE(shortcut_for(build_algebra(3, {{1, 1}, {1, 2}, {1, 3}}), {1, 1, 2}).clause1);
}

TEST(Shortcuts, IjiAndIiiPreconditions) {
  // 3 touches both 1 and 2 and carries a loop
  Algebra bad = build_algebra(3, {{1, 2}, {2, 1}, {1, 3}, {3, 2}, {3, 3}});
  EXPECT_FALSE(shortcut_for(bad, {1, 2, 1}).clause1);
  Algebra good = build_algebra(3, {{1, 2}, {2, 1}, {1, 3}, {3, 2}});
  EXPECT_TRUE(shortcut_for(good, {1, 2, 1}).clause1);
  EXPECT_TRUE(shortcut_for(good, {1, 2, 1}).clause2);
  EXPECT_EQ(shortcut_for(good, {1, 2, 1}).skip_II, (std::set<int>{3}));

  EXPECT_FALSE(shortcut_for(build_algebra(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}), {1, 1, 1}).clause1);
  EXPECT_TRUE(shortcut_for(build_algebra(2, {{1, 1}, {1, 2}, {2, 2}}), {1, 1, 1}).clause1);
}

TEST(Shortcuts, SoundOnConditionIRespectingTables) {
  fixtures::Rng rng(3);
  for (std::uint64_t mask = 0; mask < (1U << 9); mask += 3) {
    Algebra a = algebra_from_mask(3, mask);
    Reduction red = reduce_by_I(a);
    ShortcutReport rep = shortcut_report(a);
    for (int trial = 0; trial < 6; ++trial) {
      NumericTable t = fixtures::sample_respecting_I(a, red, rng, 0.7, trial % 2 == 1);
      bool II_holds = true;
      for (const auto& e : condition_II_equations(t)) II_holds = II_holds && e.second == 0;
      for (const TripleShortcut& s : rep.triples) {
        for (int r : s.skip_II)
          ASSERT_EQ(d_value(t, s.triple, r) - condition_II_rhs(t, s.triple, r), 0) << "mask=" << mask;
        if (s.skip_III && (!s.skip_III_needs_II || II_holds)) {
          ASSERT_EQ(condition_III_value(t, s.triple), 0) << "mask=" << mask;
        }
      }
      ASSERT_EQ(check(t, Pruning::shortcuts).pbw, check(t).pbw);
    }
  }
}
