#include <gtest/gtest.h>

#include <random>

#include "skewhook/errors.hpp"
#include "skewhook/hillman_grassl.hpp"
#include "skewhook/phi.hpp"
#include "skewhook/sweep.hpp"
#include "support.hpp"

using namespace skewhook;

namespace {

const SkewShape kExample({5, 5, 3, 3, 2}, {2, 2});

Grid grid_of(const Partition& p, std::vector<std::vector<int>> rows) {
  Grid g(p);
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.part(r); ++c)
      g.at({r, c}) = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
  return g;
}

// Random entries made weakly increasing by taking running maxima.
RppLambda random_rpp(const Partition& p, int max_entry, std::mt19937& rng) {
  Grid g(p);
  std::uniform_int_distribution<int> dist(0, max_entry);
  for (Cell c : p.cells()) {
    int v = dist(rng);
    if (c.col > 1) v = std::max(v, g.at({c.row, c.col - 1}));
    if (c.row > 1) v = std::max(v, g.at({c.row - 1, c.col}));
    g.at(c) = v;
  }
  return RppLambda{g};
}

}  // namespace

TEST(HillmanGrassl, AllOnesSquare) {
  Partition p{2, 2};
  RppLambda pi{Grid(p, 1)};
  std::vector<Cell> trace;
  auto a = hg_forward(pi, &trace);
  EXPECT_EQ(trace, (std::vector<Cell>{{1, 1}, {2, 2}}));
  EXPECT_EQ(a.values, grid_of(p, {{1, 0}, {0, 1}}));
  EXPECT_EQ(a.hook_weight(), 4);
  EXPECT_EQ(hg_inverse(a), pi);
}

TEST(HillmanGrassl, SingleUnitsGiveHooks) {
  Partition p{3, 2, 1};
  for (Cell u : p.cells()) {
    WeightArray a{Grid(p)};
    a.values.at(u) = 1;
    auto pi = hg_inverse(a);
    EXPECT_TRUE(pi.is_valid());
    EXPECT_EQ(pi.size(), p.hook(u)) << u;
    EXPECT_EQ(hg_forward(pi), a) << u;
  }
}

TEST(HillmanGrassl, RejectsBadInput) {
  Partition p{2};
  EXPECT_THROW(hg_forward(RppLambda{grid_of(p, {{1, 0}})}), PreconditionError);
  EXPECT_THROW(hg_inverse(WeightArray{grid_of(p, {{-1, 0}})}), PreconditionError);
}

TEST(HillmanGrassl, RandomRoundTrips) {
  std::mt19937 rng(7);
  for (int k = 0; k < 2000; ++k) {
    int n = std::uniform_int_distribution<int>(1, 9)(rng);
    Partition p = oracle::random_partition(n, rng);
    auto pi = random_rpp(p, 4, rng);
    auto a = hg_forward(pi);
    EXPECT_EQ(a.hook_weight(), pi.size());
    EXPECT_EQ(hg_inverse(a), pi);

    WeightArray b{Grid(p)};
    for (Cell c : p.cells()) b.values.at(c) = std::uniform_int_distribution<int>(0, 2)(rng);
    auto rho = hg_inverse(b);
    EXPECT_TRUE(rho.is_valid());
    EXPECT_EQ(hg_forward(rho), b);
  }
}

TEST(HillmanGrassl, PeeledPartitions) {
  EXPECT_EQ(peeled_partition(kExample, 1), kExample.outer());
  EXPECT_EQ(peeled_partition(kExample, 3), Partition({2, 2, 2, 1}));
  EXPECT_THROW(peeled_partition(kExample, 5), DomainError);
}

TEST(HillmanGrassl, PhiMatchesInverseOnExample) {
  auto r = verify_phi_vs_hg(kExample);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 6);
  auto add = verify_additivity(kExample);
  EXPECT_TRUE(add.ok());
}

TEST(HillmanGrassl, ExampleStripRestriction) {
  // Third strip of the fully excited diagram: the broken cell (5,2) of γ_3
  // lands on (4,1) in λ^(3) = (2,2,2,1).
  auto all = enumerate_excited(kExample);
  auto t = phi(all.back());
  auto part = hg_forward(strip_restriction(t, 3));
  Grid expected(Partition{2, 2, 2, 1});
  expected.at({4, 1}) = 1;
  EXPECT_EQ(part.values, expected);
}

TEST(HillmanGrassl, ClassifiesRestrictedImages) {
  SkewShape s({2, 2}, {1});
  for (const auto& d : enumerate_excited(s)) {
    auto a = WeightArray{excited_array(d)};
    EXPECT_EQ(classify_restricted(a, s).cells, d.cells);
  }
  WeightArray outside{Grid(Partition{2, 2}, 1)};
  EXPECT_THROW(classify_restricted(outside, s), StructuralError);
}

TEST(HillmanGrassl, SkewTableauxEmbed) {
  SkewShape s({2, 2}, {1});
  auto t = minimum_tableau(s);
  auto p = embed(t);
  EXPECT_TRUE(p.is_valid());
  EXPECT_TRUE(is_embedded_ssyt(p, s));
  RppLambda flat{Grid(Partition{2, 2}, 0)};
  EXPECT_FALSE(is_embedded_ssyt(flat, s));
}

TEST(HillmanGrassl, PhiAgainstInverseOnSweep) {
  SweepOptions opts;
  opts.max_size = 7;
  opts.connected_only = true;
  for (const auto& s : sweep_shapes(opts)) {
    EXPECT_TRUE(verify_phi_vs_hg(s).ok()) << s;
    EXPECT_TRUE(verify_additivity(s).ok()) << s;
  }
}
