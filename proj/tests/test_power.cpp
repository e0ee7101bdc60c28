#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "generators.hpp"
#include "permpow/families.hpp"
#include "permpow/linalg.hpp"
#include "permpow/power.hpp"

using namespace permpow;

namespace {

// Direct dense evaluation, independent of the sparse kernel.
IntegerMatrix dense_product(const Graph& h, std::size_t k, const Permutation& p) {
  const IntegerMatrix at = kron_identity(k, h.adjacency());
  return at * p.matrix() * at;
}

bool rows_equal(const IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m(a, c) != m(b, c)) return false;
  }
  return true;
}

}  // namespace

TEST(Power, TripleC4InvolutionIsSymmetric) {
  const PowerResult r = permutational_power(cycle_graph(4), 3, fixtures::c4x3_p());
  EXPECT_TRUE(r.symmetric);
  ASSERT_TRUE(r.graph.has_value());
  EXPECT_EQ(r.graph->size(), 12u);
  EXPECT_EQ(r.product, dense_product(cycle_graph(4), 3, fixtures::c4x3_p()));
}

TEST(Power, H6PairIsSymmetric) {
  const PowerResult r = permutational_power(fixtures::h6(), 2, fixtures::h6x2_p());
  EXPECT_TRUE(r.symmetric);
  ASSERT_TRUE(r.graph.has_value());
  EXPECT_EQ(r.graph->neighbors(2), fixtures::h6x2_neighbors_of_2());
}

TEST(Power, Tau4GivesTwoComponents) {
  const PowerResult r = permutational_power(cycle_graph(8), 1, fixtures::tau4());
  EXPECT_TRUE(r.symmetric);
  ASSERT_TRUE(r.graph.has_value());
  EXPECT_EQ(connected_components(*r.graph).size(), 2u);
}

TEST(Power, IdentityGivesSquare) {
  const Graph h = fixtures::h6();
  const PowerResult r = permutational_power(h, 2, Permutation::identity(12));
  const IntegerMatrix at = kron_identity(2, h.adjacency());
  EXPECT_EQ(r.product, at * at);
  EXPECT_TRUE(r.symmetric);
}

TEST(Power, ThreeCycleOnC8IsNotSymmetric) {
  const PowerResult r = permutational_power(cycle_graph(8), 1, Permutation::from_cycles("(0 1 2)", 8));
  EXPECT_FALSE(r.symmetric);
  EXPECT_FALSE(r.graph.has_value());
}

TEST(Power, DimensionMismatch) {
  try {
    permutational_power(cycle_graph(4), 2, Permutation::identity(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Power, EqualProducts) {
  EXPECT_TRUE(products_equal(cycle_graph(4), 3, fixtures::c4x3_p(), fixtures::c4x3_p_prime()));
  EXPECT_TRUE(products_equal(cycle_graph(8), 1, fixtures::gamma1(), fixtures::gamma1_q()));
  EXPECT_TRUE(products_equal(fixtures::h6(), 2, fixtures::h6x2_p(), fixtures::h6x2_p()));
  EXPECT_FALSE(products_equal(cycle_graph(8), 1, fixtures::tau4(), Permutation::identity(8)));
  EXPECT_TRUE(range_projection_equal(cycle_graph(4), 3, fixtures::c4x3_p(), fixtures::c4x3_p_prime()));
  EXPECT_TRUE(range_projection_equal(cycle_graph(8), 1, fixtures::gamma1(), fixtures::gamma1_q()));
}

TEST(Power, ProjectedSymmetry) {
  EXPECT_TRUE(is_symmetric_product_projected(cycle_graph(8), 1, fixtures::tau4()));
  EXPECT_FALSE(is_symmetric_product_projected(cycle_graph(8), 1, Permutation::from_cycles("(0 1 2)", 8)));
  // On an invertible graph projected symmetry is exactly involutivity.
  gen::each_permutation(5, [](const Permutation& p) {
    EXPECT_EQ(is_symmetric_product_projected(cycle_graph(5), 1, p), p.is_involution());
  });
}

TEST(Power, NeighborhoodWitnessOnC8) {
  const PowerResult r = permutational_power(cycle_graph(8), 1, fixtures::neighborhood_witness());
  ASSERT_TRUE(r.symmetric);
  EXPECT_TRUE(rows_equal(r.product, 0, 4));
  EXPECT_TRUE(rows_equal(r.product, 3, 7));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = a + 1; b < 8; ++b) {
      EXPECT_FALSE(rows_equal(cycle_graph(8).adjacency(), a, b));
    }
  }
}

TEST(Power, InverseSymmetryExamples) {
  EXPECT_EQ(inverse_symmetry(cycle_graph(8), 1, fixtures::tau4()), std::make_pair(true, true));
  EXPECT_EQ(inverse_symmetry(cycle_graph(8), 1, Permutation::from_cycles("(0 1 2)", 8)),
            std::make_pair(false, false));
  EXPECT_EQ(inverse_symmetry(fixtures::h6(), 2, fixtures::h6x2_q()), std::make_pair(true, true));
}

TEST(PowerProperty, InvolutionsAlwaysValid) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    const std::size_t k = gen::uniform(rng, 1, 3);
    const Graph h = gen::graph(n, rng, 2);
    ASSERT_TRUE(permutational_power(h, k, gen::involution(n * k, rng)).symmetric);
  }
}

TEST(PowerProperty, SparseMatchesDense) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 5);
    const std::size_t k = gen::uniform(rng, 1, 3);
    const Graph h = gen::graph(n, rng, 2);
    const Permutation p = gen::permutation(n * k, rng);
    const PowerResult r = permutational_power(h, k, p);
    ASSERT_EQ(r.product, dense_product(h, k, p));
    ASSERT_EQ(r.symmetric, r.product.is_symmetric());
  }
}

TEST(PowerProperty, InverseSymmetryExhaustiveOnSmallGraphs) {
  for (const Graph& h : {cycle_graph(4), path_graph(3), complete_bipartite(2, 3), fixtures::h6()}) {
    gen::each_permutation(h.size(), [&](const Permutation& p) {
      const auto [direct, inverse] = inverse_symmetry(h, 1, p);
      ASSERT_EQ(direct, inverse);
    });
  }
}

TEST(PowerProperty, InverseSymmetrySampled) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph h = gen::small_bases()[gen::uniform(rng, 0, 4)];
    const std::size_t k = gen::uniform(rng, 1, 3);
    const auto [direct, inverse] = inverse_symmetry(h, k, gen::permutation(h.size() * k, rng));
    ASSERT_EQ(direct, inverse);
  }
}

TEST(PowerProperty, InvertibleBaseForcesInvolution) {
  for (std::size_t n : {5u, 6u, 7u}) {
    const Graph h = cycle_graph(n);
    ASSERT_TRUE(linalg::is_invertible(h.adjacency()));
    const PowerKernel kernel(h, 1);
    gen::each_permutation(n, [&](const Permutation& p) {
      ASSERT_EQ(kernel.is_symmetric(p), p.is_involution()) << p.to_cycle_string();
    });
  }
}

TEST(PowerProperty, SharedNeighborhoodsSurvive) {
  // Vertices 0,1 and 4,5 of H6 share neighborhoods; so do their copies in any power.
  std::mt19937_64 rng(23);
  const Graph h = fixtures::h6();
  int symmetric = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = gen::uniform(rng, 1, 2);
    const Permutation p = trial % 2 == 0 ? gen::involution(6 * k, rng) : gen::permutation(6 * k, rng);
    const PowerResult r = permutational_power(h, k, p);
    if (!r.symmetric) continue;
    ++symmetric;
    for (std::size_t c = 0; c < k; ++c) {
      ASSERT_TRUE(rows_equal(r.product, 6 * c, 6 * c + 1));
      ASSERT_TRUE(rows_equal(r.product, 6 * c + 4, 6 * c + 5));
    }
  }
  EXPECT_GT(symmetric, 0);
}

TEST(PowerProperty, ProjectionMatchesDirectTest) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph h = gen::small_bases()[gen::uniform(rng, 0, 4)];
    const std::size_t k = gen::uniform(rng, 1, 2);
    const Permutation p = gen::permutation(h.size() * k, rng);
    const Permutation q = trial % 3 == 0 ? p : gen::permutation(h.size() * k, rng);
    ASSERT_EQ(range_projection_equal(h, k, p, q), products_equal(h, k, p, q));
    ASSERT_EQ(is_symmetric_product_projected(h, k, p), permutational_power(h, k, p).symmetric);
  }
}

TEST(PowerSearch, ZeroBudgetFindsNothing) {
  const PowerSearchReport r = search_power_counterexample(cycle_graph(8), 1, 0);
  EXPECT_FALSE(r.found.has_value());
  EXPECT_EQ(r.scanned, 0u);
}

TEST(PowerSearch, FoundCounterexampleIsGenuine) {
  const PowerSearchReport r = search_power_counterexample(cycle_graph(4), 2, 40320);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.scanned, 40320u);
  if (r.found) {
    const PowerKernel kernel(cycle_graph(4), 2);
    EXPECT_TRUE(kernel.is_symmetric(r.found->permutation));
    EXPECT_FALSE(kernel.is_symmetric(r.found->permutation.power(r.found->exponent)));
  }
}

TEST(PowerSearch, SquareOfValidPermutationCanFail) {
  const Graph h = complete_bipartite(2, 3);
  const Permutation p = Permutation::from_cycles("(0 5 9 2 8 7 6 1 4 3)", 10);
  EXPECT_TRUE(dense_product(h, 2, p).is_symmetric());
  EXPECT_FALSE(dense_product(h, 2, p.power(2)).is_symmetric());
  const PowerSearchReport r = search_power_counterexample(h, 2, 200000, 7);
  ASSERT_TRUE(r.found.has_value());
  const PowerKernel kernel(h, 2);
  EXPECT_TRUE(kernel.is_symmetric(r.found->permutation));
  EXPECT_FALSE(kernel.is_symmetric(r.found->permutation.power(r.found->exponent)));
}

TEST(PowerSearch, NoneOnC8) {
  const PowerSearchReport r = search_power_counterexample(cycle_graph(8), 1, 40320);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.valid, 876u);
  EXPECT_FALSE(r.found.has_value());
}

TEST(Spectral, CompleteAndCycle) {
  EXPECT_NEAR(spectral_gap_estimate(complete_graph(4)).second_eigenvalue, 1.0 / 3.0, 1e-6);
  EXPECT_NEAR(spectral_gap_estimate(cycle_graph(4)).second_eigenvalue, 1.0, 1e-6);
  EXPECT_NEAR(spectral_gap_estimate(cycle_graph(5)).second_eigenvalue,
              std::abs(std::cos(4.0 * std::acos(-1.0) / 5.0)), 1e-6);
  EXPECT_EQ(spectral_gap_estimate(Graph::from_adjacency(IntegerMatrix{{1}})).second_eigenvalue, 0.0);
}

TEST(Spectral, Errors) {
  auto code = [](const Graph& g) {
    try {
      spectral_gap_estimate(g);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Empty;
  };
  EXPECT_EQ(code(path_graph(3)), Errc::NotRegular);
  EXPECT_EQ(code(Graph::from_adjacency(IntegerMatrix(2, 2))), Errc::NotRegular);
  EXPECT_EQ(code(disjoint_copies(cycle_graph(4), 2)), Errc::NotConnected);
}
