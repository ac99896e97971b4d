#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "skewhook/errors.hpp"
#include "skewhook/excited.hpp"
#include "skewhook/sweep.hpp"

using namespace skewhook;

namespace {

const SkewShape kExample({5, 5, 3, 3, 2}, {2, 2});

}  // namespace

TEST(Excited, InitialDiagram) {
  auto d = initial_diagram(kExample);
  EXPECT_EQ(d.cells, (std::vector<Cell>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  EXPECT_EQ(d.broken, (std::vector<Cell>{{2, 3}, {3, 3}, {4, 1}, {5, 1}, {5, 2}}));
  EXPECT_EQ(d.gammas.size(), 3u);
  EXPECT_NO_THROW(check_consistency(d));
  EXPECT_EQ(active_cells(d), std::vector<Cell>{Cell({2, 2})});
}

TEST(Excited, WorkedExampleHasSixDiagrams) {
  auto all = enumerate_excited(kExample);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.back().cells, (std::vector<Cell>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}));
  EXPECT_EQ(all.back().broken, (std::vector<Cell>{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {5, 2}}));
}

TEST(Excited, BetaMove) {
  SkewShape s({2, 2}, {1});
  auto d = initial_diagram(s);
  EXPECT_EQ(d.broken, std::vector<Cell>{Cell({2, 2})});
  auto r = apply_beta_tracked(d, {1, 1});
  EXPECT_EQ(r.path_index, 1);
  EXPECT_EQ(r.diagram.cells, std::vector<Cell>{Cell({2, 2})});
  EXPECT_EQ(r.diagram.broken, std::vector<Cell>{Cell({2, 1})});
  EXPECT_EQ(r.diagram.excitation({2, 2}), 1);
  EXPECT_NO_THROW(check_consistency(r.diagram));
  EXPECT_THROW(apply_beta(r.diagram, {2, 2}), PreconditionError);
  EXPECT_THROW(apply_beta(d, {1, 2}), PreconditionError);
}

TEST(Excited, SmallCounts) {
  EXPECT_EQ(enumerate_excited(SkewShape({2, 2}, {1})).size(), 2u);
  EXPECT_EQ(enumerate_excited(SkewShape({3, 3}, {1})).size(), 2u);
  EXPECT_EQ(enumerate_excited(SkewShape({2, 1}, {1})).size(), 1u);
  EXPECT_EQ(enumerate_excited(SkewShape({3, 3, 3}, {1, 1})).size(), 3u);
  EXPECT_EQ(enumerate_excited(SkewShape({3, 3})).size(), 1u);
  EXPECT_EQ(enumerate_excited(SkewShape({4, 4, 4}, {2, 1})).size(), 8u);
}

TEST(Excited, ArrayIsSupportedOnBrokenDiagonals) {
  auto all = enumerate_excited(kExample);
  for (const auto& d : all) {
    auto a = excited_array(d);
    EXPECT_EQ(a.support(), d.broken);
    EXPECT_EQ(a.total(), static_cast<long long>(d.broken.size()));
  }
}

// Every reachable diagram keeps its carried state consistent, stays inside
// [λ], moves cells along their diagonals, and keeps |Br(D)| fixed.
TEST(Excited, ClosurePropertiesOnSweep) {
  SweepOptions opts;
  opts.max_size = 7;
  for (const auto& s : sweep_shapes(opts)) {
    auto all = enumerate_excited(s);
    ASSERT_FALSE(all.empty()) << s;
    std::set<std::vector<Cell>> distinct;
    const auto initial = initial_diagram(s);
    for (const auto& d : all) {
      distinct.insert(d.cells);
      EXPECT_EQ(d.cells.size(), static_cast<std::size_t>(s.inner().size())) << s;
      EXPECT_EQ(d.broken.size(), initial.broken.size()) << s;
      for (Cell c : d.cells) {
        EXPECT_TRUE(s.outer().contains(c)) << s;
        EXPECT_EQ(c.content(), d.origin.at(c).content()) << s;
        EXPECT_GE(d.excitation(c), 0) << s;
      }
      if (s.is_connected()) {
        EXPECT_NO_THROW(check_consistency(d)) << s;
      }
      for (Cell u : active_cells(d)) {
        auto next = apply_beta(d, u);
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), next, [](const auto& a, const auto& b) {
          return a.cells < b.cells;
        })) << s;
      }
    }
    EXPECT_EQ(distinct.size(), all.size()) << s;
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.cells < b.cells;
    }));
  }
}
