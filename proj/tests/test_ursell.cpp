#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <random>
#include <set>

#include "frozen_values.hpp"
#include "mayer/errors.hpp"
#include "mayer/merge_sequences.hpp"
#include "mayer/simplex.hpp"
#include "mayer/ursell.hpp"
#include "oracles.hpp"

using namespace mayer;

namespace {

double rel(double x, double y) {
  const double s = std::max(std::abs(x), std::abs(y));
  return s == 0.0 ? 0.0 : std::abs(x - y) / s;
}

InteractionMatrix fixed_matrix() {
  InteractionMatrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m.set(i, j, frozen::kFixedMatrix[i][j]);
  return m;
}

}  // namespace

TEST(InteractionMatrix, RandomIsReproducibleAndInRange) {
  const auto a = InteractionMatrix::random(6, 7);
  const auto b = InteractionMatrix::random(6, 7);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      EXPECT_EQ(a(i, j), b(i, j));
      EXPECT_EQ(a(i, j), a(j, i));
      EXPECT_GE(a(i, j), -1.0);
      EXPECT_LT(a(i, j), 2.0);
    }
}

TEST(InteractionMatrix, HardCoreNeedsCutoff) {
  InteractionMatrix m(3);
  m.set_hard_core(0, 1);
  EXPECT_THROW(m(0, 1), UnconfiguredCutoffError);
  EXPECT_THROW(subset_energy(m, 0b011), UnconfiguredCutoffError);
  m.set_cutoff(25.0);
  EXPECT_EQ(m(1, 0), 25.0);
}

TEST(InteractionMatrix, SubsetAndBlockEnergies) {
  const auto m = InteractionMatrix::random(4, 3);
  EXPECT_EQ(subset_energy(m, 0), 0.0);
  EXPECT_EQ(subset_energy(m, 0b0011), m(0, 1));
  double all = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) all += m(i, j);
  EXPECT_NEAR(subset_energy(m, 0b1111), all, 1e-15);
  EXPECT_EQ(block_pair_energy(m, 0b0001, 0b0010), m(0, 1));
  EXPECT_NEAR(block_pair_energy(m, 0b0001, 0b0110), m(0, 1) + m(0, 2), 1e-15);
  EXPECT_THROW(block_pair_energy(m, 0b0011, 0b0010), InvalidArgument);
}

TEST(InteractionMatrix, BlockEnergyIsUnionMinusParts) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = InteractionMatrix::random(7, trial);
    VertexMask a = 0;
    VertexMask b = 0;
    for (int v = 0; v < 7; ++v) {
      const int r = static_cast<int>(rng() % 3);
      if (r == 0) a |= VertexMask{1} << v;
      if (r == 1) b |= VertexMask{1} << v;
    }
    if (a == 0 || b == 0) continue;
    EXPECT_NEAR(block_pair_energy(m, a, b), subset_energy(m, a | b) - subset_energy(m, a) - subset_energy(m, b),
                1e-12);
  }
}

TEST(Ursell, TrivialCases) {
  InteractionMatrix one(1);
  EXPECT_EQ(ursell_graph_sum(one, 1.0), 1.0);
  EXPECT_EQ(ursell_partition_sum(one, 1.0), 1.0);
  EXPECT_EQ(ursell_tree_integral(one, 1.0), 1.0);
  EXPECT_EQ(merge_sequence_expansion(one, 1.0), 1.0);

  InteractionMatrix two(2);
  two.set(0, 1, 0.7);
  const double expected = std::expm1(-1.3 * 0.7);
  EXPECT_NEAR(ursell_graph_sum(two, 1.3), expected, 1e-15);
  EXPECT_NEAR(ursell_partition_sum(two, 1.3), expected, 1e-15);
  EXPECT_NEAR(ursell_tree_integral(two, 1.3), expected, 1e-12);
  EXPECT_NEAR(merge_sequence_expansion(two, 1.3), expected, 1e-12);

  EXPECT_EQ(ursell_graph_sum(InteractionMatrix(4), 1.0), 0.0);
}

TEST(Ursell, BetaZeroGivesZero) {
  for (int n = 2; n <= 5; ++n) {
    const auto m = InteractionMatrix::random(n, 100 + n);
    EXPECT_EQ(ursell_graph_sum(m, 0.0), 0.0);
    EXPECT_NEAR(ursell_partition_sum(m, 0.0), 0.0, 1e-15);
    EXPECT_EQ(ursell_tree_integral(m, 0.0), 0.0);
    EXPECT_EQ(merge_sequence_expansion(m, 0.0), 0.0);
  }
}

TEST(Ursell, FrozenHighPrecisionValues) {
  const auto m = fixed_matrix();
  EXPECT_LT(rel(ursell_graph_sum(m, 1.0), frozen::kUrsellFixedBeta1), 1e-14);
  EXPECT_LT(rel(ursell_partition_sum(m, 1.0), frozen::kUrsellFixedBeta1), 1e-14);
  EXPECT_LT(rel(ursell_graph_sum(m, 2.7), frozen::kUrsellFixedBeta27), 1e-14);
  EXPECT_LT(rel(ursell_partition_sum(m, 2.7), frozen::kUrsellFixedBeta27), 1e-14);
  EXPECT_LT(rel(ursell_tree_integral(m, 1.0), frozen::kUrsellFixedBeta1), 1e-8);
  EXPECT_LT(rel(merge_sequence_expansion(m, 2.7), frozen::kUrsellFixedBeta27), 1e-8);
}

TEST(Ursell, GraphSumMatchesBruteForce) {
  for (int n = 2; n <= 6; ++n)
    for (int seed = 0; seed < 5; ++seed) {
      const auto m = InteractionMatrix::random(n, seed);
      EXPECT_LT(rel(ursell_graph_sum(m, 1.0), oracle::ursell_brute_force(m, 1.0)), 1e-12) << n << "/" << seed;
      EXPECT_LT(rel(ursell_partition_sum(m, 1.0), oracle::ursell_partitions_recursive(m, 1.0)), 1e-12);
    }
}

TEST(Ursell, RoutesAgreeAtFive) {
  const auto m = InteractionMatrix::random(5, 9);
  const double g = ursell_graph_sum(m, 1.0);
  EXPECT_LT(rel(ursell_partition_sum(m, 1.0), g), 1e-10);
  EXPECT_LT(rel(merge_sequence_expansion(m, 1.0), g), 1e-6);
}

TEST(Ursell, SizeGuards) {
  EXPECT_THROW(ursell_graph_sum(InteractionMatrix(8), 1.0), SizeLimitError);
  EXPECT_THROW(ursell_tree_integral(InteractionMatrix(6), 1.0), SizeLimitError);
  EXPECT_THROW(ursell_graph_sum(InteractionMatrix(3), -1.0), DomainError);
}

TEST(Ursell, HardCoreLimit) {
  const double beta = 1.0;
  InteractionMatrix base = InteractionMatrix::random(5, 21);
  base.set_hard_core(0, 2);
  base.set_hard_core(1, 4);
  const double limit = ursell_graph_sum_hard_core_limit(base, beta);
  std::vector<double> values;
  for (double H : {10.0, 20.0, 40.0}) {
    InteractionMatrix m = base;
    m.set_cutoff(H);
    values.push_back(ursell_graph_sum(m, beta));
  }
  EXPECT_LT(std::abs(values[2] - values[1]), 1e-6);
  EXPECT_LT(std::abs(values[2] - values[1]), std::abs(values[1] - values[0]));
  EXPECT_LT(std::abs(values[2] - limit), 1e-12);
}

TEST(TreeCoefficients, SmallTrees) {
  auto m = InteractionMatrix::random(3, 5);
  const EdgeLabeledTree t2(2, {Edge::of(0, 1)});
  InteractionMatrix m2(2);
  m2.set(0, 1, 0.4);
  EXPECT_EQ(tree_exponent_coefficients(t2, m2), std::vector<double>{0.4});
  const EdgeLabeledTree t3(3, {Edge::of(0, 1), Edge::of(1, 2)});
  const auto c = tree_exponent_coefficients(t3, m);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], m(0, 1));
  EXPECT_NEAR(c[1], m(0, 1) + m(0, 2) + m(1, 2), 1e-15);
}

TEST(TreeCoefficients, IndependentComponentScan) {
  const auto m = InteractionMatrix::random(4, 8);
  for (const EdgeLabeledTree& t : enumerate_labeled_trees(4, TreeLabeling::all)) {
    const auto c = tree_exponent_coefficients(t, m);
    for (int k = 1; k <= 3; ++k) {
      // vertices joined by the first k edges, by repeated relaxation
      std::vector<int> label{0, 1, 2, 3};
      for (int pass = 0; pass < 4; ++pass)
        for (int e = 0; e < k; ++e) {
          const int lo = std::min(label[t.edges()[e].u], label[t.edges()[e].v]);
          label[t.edges()[e].u] = label[t.edges()[e].v] = lo;
        }
      double expected = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          if (label[i] == label[j]) expected += m(i, j);
      EXPECT_NEAR(c[k - 1], expected, 1e-14);
    }
  }
}

TEST(Simplex, VolumeAndOneLevel) {
  const double beta = 1.7;
  EXPECT_NEAR(simplex_exponential_integral({{0.0, 0.0, 0.0}, beta}), std::pow(beta, 3) / 6.0, 1e-9);
  const double c = 0.8;
  EXPECT_NEAR(simplex_exponential_integral({{c}, beta}), -std::expm1(-c * beta) / c, 1e-12);
  EXPECT_EQ(simplex_exponential_integral({{1.0, 2.0}, 0.0}), 0.0);
  EXPECT_THROW(simplex_exponential_integral({std::vector<double>(5, 1.0), 1.0}), SizeLimitError);
}

TEST(Simplex, DividedDifferenceOracle) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 3.0);
  for (int m = 1; m <= 4; ++m)
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> c(m);
      for (double& x : c) x = u(rng);
      const double beta = 0.3 + 0.2 * trial;
      const double expected = static_cast<double>(oracle::simplex_divided_difference(c, beta));
      EXPECT_LT(rel(simplex_exponential_integral({c, beta}), expected), 1e-6) << m << "/" << trial;
    }
}

TEST(Simplex, MonteCarloOracleTwoLevels) {
  const std::vector<double> c{0.9, -0.4};
  const auto mc = oracle::simplex_monte_carlo(c, 1.5, 200000, 17);
  EXPECT_LT(std::abs(simplex_exponential_integral({c, 1.5}) - mc.mean), 3.0 * mc.standard_error);
}

TEST(Simplex, CoincidentCoefficients) {
  // c = (1, 1): int_{beta >= b1 >= b2 >= 0} e^{-b1} = 1 - e^{-beta}(1 + beta)
  const double beta = 2.0;
  EXPECT_NEAR(simplex_exponential_integral({{1.0, 1.0}, beta}), 1.0 - std::exp(-beta) * (1.0 + beta), 1e-10);
}

TEST(Simplex, LinearFormMatchesTelescopedForm) {
  const std::vector<double> w{0.5, -0.3, 1.2};
  const std::vector<double> partial{0.5, 0.2, 1.4};
  EXPECT_LT(rel(ordered_simplex_linear_integral(w, 1.1), simplex_exponential_integral({partial, 1.1})), 1e-8);
}

TEST(MergeSequences, Counts) {
  // (n choose 2)(n-1 choose 2)...(2 choose 2)
  const std::uint64_t expected[] = {1, 1, 1, 3, 18, 180, 2700};
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t count = 0;
    for_each_merge_sequence(n, [&](const MergeState& s) {
      EXPECT_EQ(s.block_count(), 1);
      EXPECT_EQ(static_cast<int>(s.history().size()), n - 1);
      ++count;
    });
    EXPECT_EQ(count, expected[n]) << n;
  }
}

TEST(MergeSequences, ExpansionIsBijectiveWithLabeledTrees) {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::vector<Edge>> trees;
    std::size_t total = 0;
    for_each_merge_sequence(n, [&](const MergeState& s) {
      for (const EdgeLabeledTree& t : expand_merge_sequence(s)) {
        ++total;
        trees.insert(std::vector<Edge>(t.edges().begin(), t.edges().end()));
        EXPECT_EQ(merge_state_from_tree(t), s);
      }
    });
    std::size_t labeled = 0;
    for_each_labeled_tree(n, TreeLabeling::all, [&](const EdgeLabeledTree&) { ++labeled; });
    EXPECT_EQ(total, labeled) << n;
    EXPECT_EQ(trees.size(), labeled) << n;
  }
}

TEST(MergeSequences, PartialSumsEqualBlockEnergies) {
  const auto m = InteractionMatrix::random(6, 33);
  int checked = 0;
  for_each_merge_sequence(6, [&](const MergeState& s) {
    if (++checked % 37 != 0) return;
    MergeState replay(6);
    double partial = 0.0;
    for (const BlockPair& p : s.history()) {
      partial += block_pair_energy(m, p.first, p.second);
      replay.merge(p);
      double blocks = 0.0;
      for (VertexMask b : replay.blocks()) blocks += subset_energy(m, b);
      EXPECT_NEAR(partial, blocks, 1e-12);
    }
  });
}

TEST(MergeSequences, TelescopingIdentity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  const auto m = InteractionMatrix::random(5, 12);
  int checked = 0;
  for_each_merge_sequence(5, [&](const MergeState& s) {
    if (++checked % 11 != 0) return;
    std::vector<double> b(4);
    for (double& x : b) x = u(rng);
    std::sort(b.begin(), b.end(), std::greater<>());
    double lhs = 0.0;
    for (int i = 0; i < 4; ++i) lhs += b[i] * block_pair_energy(m, s.history()[i].first, s.history()[i].second);
    double rhs = 0.0;
    MergeState replay(5);
    for (int k = 0; k < 4; ++k) {
      replay.merge(s.history()[k]);
      double level = 0.0;
      for (VertexMask block : replay.blocks()) level += subset_energy(m, block);
      rhs += (b[k] - (k + 1 < 4 ? b[k + 1] : 0.0)) * level;
    }
    EXPECT_NEAR(lhs, rhs, 1e-12);
  });
}

TEST(MergeSequences, RejectsInvalidMerge) {
  MergeState s(3);
  EXPECT_THROW(s.merge(BlockPair{0b001, 0b110}), InvalidArgument);
  s.merge(BlockPair::of(0b001, 0b010));
  EXPECT_EQ(s.partition().to_string(), "{{1,2},{3}}");
}
