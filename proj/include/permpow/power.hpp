#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "permpow/graph.hpp"
#include "permpow/linalg.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// Result of forming A~ M(p) A~ with A~ = I_k (x) A_H.
struct PowerResult {
  IntegerMatrix product;
  bool symmetric = false;
  /// Present iff `symmetric`; its adjacency equals `product`.
  std::optional<Graph> graph;
};

/// Holds A~ = I_k (x) A_H in sparse row form so that the triple product
/// A~ M(p) A~ can be evaluated repeatedly for many permutations.
///
/// Entry (x, y) of the product is sum_l a~(x, l) a~(p(l), y), so only the
/// nonzero entries of A~ are ever touched.
class PowerKernel {
 public:
  PowerKernel(const Graph& h, std::size_t k);

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t copies() const noexcept { return k_; }
  const Graph& base() const noexcept { return h_; }
  const Graph& copies_graph() const noexcept { return tilde_; }

  /// Throws DimensionMismatch when p does not act on dimension() elements.
  IntegerMatrix product(const Permutation& p) const;
  bool is_symmetric(const Permutation& p) const;
  bool products_equal(const Permutation& p, const Permutation& q) const;

 private:
  void check(const Permutation& p) const;

  Graph h_;
  std::size_t k_;
  Graph tilde_;
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rows_;
};

/// Second route to the same decisions: with B an exact basis of range(A~),
/// A~ P A~ = A~ Q A~ iff B^T (P - Q) B = 0, and A~ P A~ is symmetric iff
/// B^T P B is symmetric. B comes from exact_linalg, never from the product.
class ProjectionKernel {
 public:
  ProjectionKernel(const Graph& h, std::size_t k);

  std::size_t dimension() const noexcept { return basis_.rows(); }
  std::size_t rank() const noexcept { return basis_.cols(); }
  const RationalMatrix& range_basis() const noexcept { return basis_; }

  /// B^T M(p) B.
  RationalMatrix projected(const Permutation& p) const;
  bool projections_equal(const Permutation& p, const Permutation& q) const;
  bool projected_symmetric(const Permutation& p) const;

 private:
  void check(const Permutation& p) const;

  RationalMatrix basis_;
};

PowerResult permutational_power(const Graph& h, std::size_t k, const Permutation& p);

bool products_equal(const Graph& h, std::size_t k, const Permutation& p,
                    const Permutation& q);

bool range_projection_equal(const Graph& h, std::size_t k, const Permutation& p,
                            const Permutation& q);

bool is_symmetric_product_projected(const Graph& h, std::size_t k, const Permutation& p);

/// (symmetric for p, symmetric for p^-1). The two flags always agree.
std::pair<bool, bool> inverse_symmetry(const Graph& h, std::size_t k, const Permutation& p);

struct PowerCounterexample {
  Permutation permutation;
  long long exponent = 0;
};

struct PowerSearchReport {
  std::optional<PowerCounterexample> found;
  std::uint64_t scanned = 0;
  std::uint64_t valid = 0;          // symmetric product
  std::uint64_t powers_checked = 0;  // (p, h) pairs with 2 <= h < order(p)
  bool exhaustive = false;
};

/// Looks for p with A~ P A~ symmetric but A~ P^h A~ not symmetric.
/// When (k |V_H|)! <= budget every permutation is scanned in lexicographic
/// order; otherwise `budget` seeded uniform samples are drawn.
PowerSearchReport search_power_counterexample(const Graph& h, std::size_t k,
                                              std::uint64_t budget,
                                              std::uint64_t seed = 1);

struct SpectralEstimate {
  BigInt degree;
  double second_eigenvalue = 0.0;  // max |lambda| over the complement of 1
  std::size_t iterations = 0;
};

/// Power iteration on (1/d) A_G restricted to the orthogonal complement of
/// the all-ones vector; tolerance 1e-9, at most 1e5 iterations.
/// Throws NotRegular (also for degree 0) and NotConnected. A single vertex
/// has no second eigenvalue and reports 0.
SpectralEstimate spectral_gap_estimate(const Graph& g);

}  // namespace permpow
