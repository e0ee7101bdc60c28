#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "permpow/families.hpp"
#include "permpow/partition.hpp"
#include "permpow/power.hpp"
#include "permpow/reduction.hpp"

using namespace permpow;

namespace {

Partition hat(const Graph& h, std::size_t k) { return neighborhood_partition(disjoint_copies(h, k)); }

// Random permutation preserving every block of pi.
Permutation block_shuffle(const Partition& pi, std::mt19937_64& rng) {
  std::vector<std::size_t> images(pi.points());
  for (const auto& block : pi.blocks()) {
    std::vector<std::size_t> target = block;
    std::shuffle(target.begin(), target.end(), rng);
    for (std::size_t i = 0; i < block.size(); ++i) images[block[i]] = target[i];
  }
  return Permutation(std::move(images));
}

bool contains(const std::vector<Permutation>& sorted, const Permutation& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace

TEST(Transfer, IdentityKeepsBlocks) {
  const Partition pi = hat(fixtures::h6(), 2);
  const TransferSets t(Permutation::identity(12), pi);
  for (std::size_t i = 0; i < pi.block_count(); ++i) {
    EXPECT_EQ(t.at(i, i), pi.block(i));
    for (std::size_t j = 0; j < pi.block_count(); ++j) {
      if (i != j) EXPECT_TRUE(t.at(i, j).empty());
    }
  }
}

TEST(Transfer, SizesAreQuotientCounts) {
  const Partition pi = hat(complete_bipartite(3, 5), 2);
  const Partition pc = hat(fixtures::h6(), 2);
  EXPECT_EQ(TransferSets(fixtures::h6x2_p(), pc).sizes(),
            permutation_quotient_counts(fixtures::h6x2_p(), pc));
  EXPECT_EQ(TransferSets(fixtures::k35_p(), pi).sizes(),
            permutation_quotient_counts(fixtures::k35_p(), pi));
}

TEST(Reduction, H6PairReduces) {
  const Permutation q = reduce_to_involution(fixtures::h6(), 2, fixtures::h6x2_p());
  EXPECT_TRUE(q.is_involution());
  EXPECT_TRUE(products_equal(fixtures::h6(), 2, q, fixtures::h6x2_p()));
  EXPECT_TRUE(fixtures::h6x2_q().is_involution());
  EXPECT_TRUE(products_equal(fixtures::h6(), 2, fixtures::h6x2_q(), fixtures::h6x2_p()));
}

TEST(Reduction, K35Reduces) {
  const Graph h = complete_bipartite(3, 5);
  const Permutation q = reduce_to_involution(h, 2, fixtures::k35_p());
  EXPECT_TRUE(q.is_involution());
  EXPECT_TRUE(products_equal(h, 2, q, fixtures::k35_p()));
  EXPECT_TRUE(fixtures::k35_q().is_involution());
  EXPECT_TRUE(products_equal(h, 2, fixtures::k35_q(), fixtures::k35_p()));
}

TEST(Reduction, InvolutionInputStaysValid) {
  const Permutation q = reduce_to_involution(cycle_graph(4), 3, fixtures::c4x3_p());
  EXPECT_TRUE(q.is_involution());
  EXPECT_TRUE(products_equal(cycle_graph(4), 3, q, fixtures::c4x3_p()));
}

TEST(Reduction, UnbalancedTransfersThrow) {
  try {
    reduce_to_involution(complete_bipartite(2, 2), 2, Permutation::from_cycles("(0 2)(1 3 4)", 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::QuotientNotSymmetric);
  }
  try {
    reduce_to_involution(cycle_graph(8), 1, fixtures::tau4());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::QuotientNotSymmetric);
  }
}

TEST(Reduction, CountingFormula) {
  EXPECT_EQ(count_involution_candidates(Permutation::identity(2), hat(complete_graph(2), 1)), 1);
  EXPECT_EQ(count_involution_candidates(fixtures::h6x2_p(), hat(fixtures::h6(), 2)), 2);
  EXPECT_EQ(count_involution_candidates(fixtures::k35_p(), hat(complete_bipartite(3, 5), 2)), 4);
}

TEST(Reduction, BruteForceOnC8) {
  const Graph c8 = cycle_graph(8);
  EXPECT_TRUE(brute_force_equivalent_involutions(c8, 1, fixtures::tau4()).empty());
  const auto eq = brute_force_equivalent_involutions(c8, 1, fixtures::gamma1());
  EXPECT_TRUE(contains(eq, fixtures::gamma1_q()));
  const Permutation q = Permutation::from_cycles("(0 3)", 8);
  EXPECT_TRUE(contains(brute_force_equivalent_involutions(c8, 1, q), q));
}

TEST(Reduction, BruteForceCap) {
  try {
    brute_force_equivalent_involutions(cycle_graph(8), 1, fixtures::tau4(), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(Reduction, FastPath) {
  std::mt19937_64 rng(43);
  const Graph h = complete_bipartite(2, 3);
  int hits = 0;
  for (int trial = 0; trial < 2000 && hits < 20; ++trial) {
    const Permutation p = gen::permutation(10, rng);
    if (!permutational_power(h, 2, p).symmetric) continue;
    ++hits;
    const FastPathResult r = invertible_quotient_fast_path(h, 2, p);
    ASSERT_TRUE(r.involution.has_value()) << r.reason;
    EXPECT_TRUE(r.involution->is_involution());
    EXPECT_TRUE(products_equal(h, 2, *r.involution, p));
  }
  EXPECT_GT(hits, 0);
  EXPECT_FALSE(invertible_quotient_fast_path(cycle_graph(8), 1, fixtures::tau4()).involution);
}

TEST(ReductionProperty, EqualTransferCountsGiveEqualProducts) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph h = gen::small_bases()[gen::uniform(rng, 0, 4)];
    const std::size_t k = gen::uniform(rng, 1, 3);
    const Partition pi = hat(h, k);
    const Permutation p = gen::permutation(h.size() * k, rng);
    const Permutation q = compose(block_shuffle(pi, rng), compose(p, block_shuffle(pi, rng)));
    ASSERT_EQ(permutation_quotient_counts(p, pi), permutation_quotient_counts(q, pi));
    ASSERT_TRUE(products_equal(h, k, p, q));
  }
}

TEST(ReductionProperty, ConverseFailsOnC8) {
  // pi-hat is trivial on C8, so P / pi-hat = P is not symmetric, yet the product is.
  const Partition pi = hat(cycle_graph(8), 1);
  EXPECT_FALSE(is_quotient_symmetric(fixtures::tau4(), pi));
  EXPECT_TRUE(permutational_power(cycle_graph(8), 1, fixtures::tau4()).symmetric);
}

TEST(ReductionProperty, BijectionSystemsAreEquivalentInvolutions) {
  std::mt19937_64 rng(53);
  const std::vector<Graph> bases{complete_bipartite(1, 2), complete_bipartite(2, 2), fixtures::h6()};
  for (int trial = 0; trial < 30; ++trial) {
    const Graph& h = bases[trial % bases.size()];
    const Partition pi = hat(h, 1);
    const Permutation p = gen::permutation(h.size(), rng);
    if (!is_quotient_symmetric(p, pi)) continue;
    const auto systems = enumerate_bijection_systems(p, pi);
    const auto brute = brute_force_equivalent_involutions(h, 1, p);
    ASSERT_FALSE(systems.empty());
    for (const Permutation& q : systems) {
      ASSERT_TRUE(q.is_involution());
      ASSERT_TRUE(contains(brute, q));
      ASSERT_EQ(TransferSets(q, pi), TransferSets(p, pi));
    }
  }
}

TEST(ReductionProperty, ReducedPermutationsOnK23) {
  std::mt19937_64 rng(59);
  const Graph h = complete_bipartite(2, 3);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Permutation p = gen::permutation(10, rng);
    if (!permutational_power(h, 2, p).symmetric) continue;
    const Permutation q = reduce_to_involution(h, 2, p);
    ASSERT_TRUE(q.is_involution());
    ASSERT_TRUE(products_equal(h, 2, p, q));
    ++checked;
  }
  EXPECT_GT(checked, 0);
}
