#include <gtest/gtest.h>

#include <set>

#include "skewhook/errors.hpp"
#include "skewhook/sweep.hpp"
#include "skewhook/tableaux.hpp"
#include "support.hpp"

using namespace skewhook;

namespace {

const SkewShape kExample({5, 5, 3, 3, 2}, {2, 2});

std::set<std::vector<int>> entry_sets(const std::vector<SkewTableau>& ts) {
  std::set<std::vector<int>> out;
  for (const auto& t : ts) out.insert(t.entries());
  return out;
}

}  // namespace

TEST(Tableau, MinimumTableau) {
  auto t = minimum_tableau(SkewShape({2, 2}, {1}));
  EXPECT_EQ(t.entries(), (std::vector<int>{0, 0, 1}));
  EXPECT_TRUE(t.is_semistandard());
  EXPECT_EQ(t.weight(), 1);
  auto e = minimum_tableau(kExample);
  EXPECT_EQ(e.at({5, 1}), 2);
  EXPECT_EQ(e.at({1, 3}), 0);
  EXPECT_EQ(e.at({4, 3}), 3);
  EXPECT_EQ(minimum_weight(kExample), e.weight());
  EXPECT_TRUE(excess(e).grid().all_zero());
}

TEST(Tableau, SetChecksCells) {
  SkewTableau t(SkewShape({2, 2}, {1}));
  EXPECT_THROW(t.set({1, 1}, 0), DomainError);
  EXPECT_THROW(t.set({3, 1}, 0), DomainError);
  t.set({1, 2}, 2);
  t.set({2, 2}, 1);
  EXPECT_FALSE(t.is_semistandard());
}

TEST(Tableau, DeltaMovesOnSmallShape) {
  SkewShape s({2, 2}, {1});
  auto t0 = minimum_tableau(s);
  auto moves = active_columns(t0);
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0], (DeltaMove{1, 1}));
  auto t1 = apply_delta(t0, moves[0]);
  EXPECT_EQ(t1.entries(), (std::vector<int>{0, 1, 1}));
  EXPECT_TRUE(active_columns(t1).empty());
  EXPECT_THROW(apply_delta(t1, {1, 1}), PreconditionError);
}

TEST(Tableau, WorkedExampleMinimalTableaux) {
  auto closure = enumerate_min_via_moves(kExample);
  ASSERT_EQ(closure.size(), 6u);
  EXPECT_EQ(entry_sets(closure), entry_sets(enumerate_min_via_characterization(kExample)));
  // T̄(4,2), T̄(5,1), T̄(5,2); every other excess is zero.
  std::set<std::vector<int>> patterns;
  for (const auto& t : closure) {
    auto bar = excess(t);
    for (Cell c : kExample.cells()) {
      if (c != Cell{4, 2} && c != Cell{5, 1} && c != Cell{5, 2}) {
        EXPECT_EQ(bar.at(c), 0) << c;
      }
    }
    patterns.insert({bar.at({4, 2}), bar.at({5, 1}), bar.at({5, 2})});
    EXPECT_TRUE(is_minimal(t));
  }
  std::set<std::vector<int>> expected{{0, 0, 0}, {1, 0, 1}, {1, 1, 1}, {2, 0, 2}, {2, 1, 2}, {2, 2, 2}};
  EXPECT_EQ(patterns, expected);
}

TEST(Tableau, DisconnectedShapesAreUnsupported) {
  SkewShape s({2, 1}, {1});
  EXPECT_THROW(enumerate_min_via_moves(s), UnsupportedShape);
  EXPECT_THROW(active_columns(minimum_tableau(s)), UnsupportedShape);
}

TEST(Tableau, CharacterizationMatchesClosureOnSweep) {
  SweepOptions opts;
  opts.max_size = 7;
  opts.connected_only = true;
  for (const auto& s : sweep_shapes(opts)) {
    auto closure = enumerate_min_via_moves(s);
    EXPECT_EQ(entry_sets(closure), entry_sets(enumerate_min_via_characterization(s))) << s;
    for (const auto& t : closure) EXPECT_TRUE(t.is_semistandard()) << s;
  }
}

TEST(Tableau, FlaggedAndOkounkovOlshanski) {
  EXPECT_EQ(enumerate_oot(SkewShape({2, 1}, {1})).size(), 2u);
  EXPECT_EQ(enumerate_oot(SkewShape({3, 3}, {1})).size(), 2u);
  EXPECT_EQ(enumerate_oot(SkewShape({3, 3}, {2})).size(), 3u);
  EXPECT_EQ(enumerate_oot(SkewShape({3, 3})).size(), 1u);
  auto sf = enumerate_flagged_skew(SkewShape({2, 2}, {1}));
  EXPECT_EQ(sf.size(), 2u);
  for (const auto& t : sf)
    for (Cell c : t.shape().cells()) EXPECT_LE(t.at(c), c.row - 1);
}

TEST(Tableau, CountSytFrozenValues) {
  EXPECT_EQ(count_syt(kExample), 445445);
  EXPECT_EQ(count_syt(SkewShape({2, 2}, {1})), 2);
  EXPECT_EQ(count_syt(SkewShape({3, 3}, {2})), 3);
  EXPECT_EQ(count_syt(SkewShape({3, 3}, {1})), 5);
  EXPECT_EQ(count_syt(SkewShape({2, 1}, {1})), 2);
  EXPECT_EQ(count_syt(SkewShape({3, 3, 3}, {1, 1})), 21);
  EXPECT_EQ(count_syt(SkewShape({3, 3})), 5);
  EXPECT_EQ(count_syt(SkewShape({5, 5, 5, 5, 2}, {2, 1})), BigInt(37135956));
  EXPECT_EQ(count_syt(SkewShape({1})), 1);
}

TEST(Tableau, CountSytMatchesLinearExtensions) {
  SweepOptions opts;
  opts.max_size = 8;
  for (const auto& s : sweep_shapes(opts))
    EXPECT_EQ(count_syt(s), BigInt(oracle::brute_syt(s))) << s;
}

TEST(Tableau, BoundedEnumeration) {
  SkewShape s({2, 2}, {1});
  auto w1 = enumerate_bounded_ssyt(s, 1);
  ASSERT_EQ(w1.size(), 1u);
  EXPECT_EQ(w1[0], minimum_tableau(s));
  EXPECT_TRUE(enumerate_bounded_ssyt(s, 0).empty());
  // (1): one tableau per weight.
  EXPECT_EQ(enumerate_bounded_ssyt(SkewShape({1}), 5).size(), 6u);
  int n = 0;
  for_each_bounded_ssyt(SkewShape({2, 2}), 4, [&](const SkewTableau& t) {
    EXPECT_TRUE(t.is_semistandard());
    EXPECT_LE(t.weight(), 4);
    ++n;
  });
  // weights 2, 3, 4 with counts 1, 1, 3
  EXPECT_EQ(n, 5);
}
