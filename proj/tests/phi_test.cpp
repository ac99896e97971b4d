#include <gtest/gtest.h>

#include <set>

#include "skewhook/errors.hpp"
#include "skewhook/phi.hpp"
#include "skewhook/sweep.hpp"

using namespace skewhook;

namespace {

const SkewShape kExample({5, 5, 3, 3, 2}, {2, 2});

}  // namespace

TEST(Phi, InitialDiagramMapsToMinimumTableau) {
  SweepOptions opts;
  opts.max_size = 6;
  opts.connected_only = true;
  for (const auto& s : sweep_shapes(opts)) EXPECT_EQ(phi(initial_diagram(s)), minimum_tableau(s)) << s;
}

TEST(Phi, WorkedExample) {
  auto all = enumerate_excited(kExample);
  ASSERT_EQ(all.size(), 6u);
  // Fully excited diagram {(2,2),(2,3),(3,2),(3,3)}.
  auto t = phi(all.back());
  EXPECT_EQ(t.at({4, 2}), 3);
  EXPECT_EQ(t.at({5, 1}), 4);
  EXPECT_EQ(t.at({5, 2}), 4);
  EXPECT_EQ(t.at({3, 1}), 0);
  EXPECT_TRUE(is_minimal(t));
  EXPECT_EQ(phi_inverse(t).cells, all.back().cells);
}

TEST(Phi, AlphaCountsDisplacements) {
  auto all = enumerate_excited(kExample);
  const auto& d = all.back();
  auto t = phi(d);
  for (Cell u : kExample.inner().cells()) {
    Cell moved = u.shifted(alpha(t, u));
    EXPECT_TRUE(d.contains(moved)) << u;
  }
  EXPECT_THROW(alpha(t, {3, 3}), DomainError);
  SkewTableau bad = t;
  bad.set({5, 2}, 9);
  EXPECT_THROW(alpha(bad, {1, 1}), PreconditionError);
  EXPECT_THROW(phi_inverse(bad), PreconditionError);
}

TEST(Phi, SmallShape) {
  SkewShape s({2, 2}, {1});
  auto all = enumerate_excited(s);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(phi(all[0]).entries(), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(phi(all[1]).entries(), (std::vector<int>{0, 1, 1}));
}

TEST(Phi, DisconnectedShapesAreUnsupported) {
  SkewShape s({2, 1}, {1});
  EXPECT_THROW(phi(initial_diagram(s)), UnsupportedShape);
}

TEST(Phi, CommutesWithMovesOnExample) {
  auto r = verify_commutation(kExample);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.checked, 0);
}

TEST(Phi, BijectionOnSweep) {
  SweepOptions opts;
  opts.max_size = 7;
  opts.connected_only = true;
  for (const auto& s : sweep_shapes(opts)) {
    auto diagrams = enumerate_excited(s);
    auto minimal = enumerate_min_via_moves(s);
    ASSERT_EQ(diagrams.size(), minimal.size()) << s;
    std::set<std::vector<int>> images;
    for (const auto& d : diagrams) {
      auto t = phi(d);
      EXPECT_TRUE(is_minimal(t)) << s;
      images.insert(t.entries());
      EXPECT_EQ(phi_inverse(t).cells, d.cells) << s;
    }
    EXPECT_EQ(images.size(), diagrams.size()) << s;
    EXPECT_TRUE(verify_commutation(s).ok()) << s;
  }
}
