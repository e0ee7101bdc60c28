#pragma once

#include <cstddef>
#include <vector>

#include "permpow/graph.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// Ordered set partition of {0, ..., N-1}. Blocks are sorted internally and
/// ordered by their smallest element, so equal partitions compare equal.
class Partition {
 public:
  /// Throws InvalidPartition for empty blocks, overlaps or missing points.
  Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n);

  static Partition singletons(std::size_t n);

  std::size_t points() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }
  std::size_t block_of(std::size_t v) const { return block_of_[v]; }
  std::vector<std::size_t> sizes() const;

  /// 0/1 indicator N with N(v, i) = 1 iff v lies in block i.
  IntegerMatrix indicator() const;

  /// N D^-1 N^T, the orthogonal projector onto block-constant vectors
  /// (D = diag(sizes)). Entry (u, v) is 1/|C| when u, v share block C.
  RationalMatrix projector() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Classes of identical adjacency rows (diagonal included, multiplicities
/// compared exactly).
Partition neighborhood_partition(const Graph& g);

/// Every vertex of a block sends the same number of edges into each block.
/// Throws InvalidPartition when the partition does not cover V_G.
bool is_equitable(const Graph& g, const Partition& pi);

/// Exact stand-in for the normalized quotient A/pi = M^T A M, where
/// M = N D^-1/2. The irrational factors never appear: counts = N^T A N and
/// (A/pi)(i, j) = counts(i, j) / sqrt(c_i c_j).
struct QuotientMatrix {
  IntegerMatrix counts;
  std::vector<std::size_t> sizes;

  /// Decimal value of counts(i, j) / sqrt(c_i c_j), for display only.
  double normalized(std::size_t i, std::size_t j) const;
};

/// Throws NotEquitable (or InvalidPartition) when pi is not equitable for g.
QuotientMatrix quotient_adjacency(const Graph& g, const Partition& pi);

/// counts(i, j) = |{v in C_i : p(v) in C_j}| = (N^T M(p) N)(i, j).
/// Throws DimensionMismatch.
IntegerMatrix permutation_quotient_counts(const Permutation& p, const Partition& pi);

/// P/pi = D^-1/2 counts D^-1/2 and the scaling is symmetric in (i, j), so
/// P/pi is symmetric iff its integer counts are.
bool is_quotient_symmetric(const Permutation& p, const Partition& pi);

/// Exact form of (A/pi)(P/pi)(A/pi).
///
/// With A/pi = D^-1/2 C_A D^-1/2 and P/pi = D^-1/2 C_P D^-1/2 the triple
/// product is D^-1/2 (C_A D^-1 C_P D^-1 C_A) D^-1/2. Conjugating by the
/// positive diagonal D^-1/2 neither creates nor destroys symmetry or
/// equality, so all comparisons are made on the rational middle factor
/// C_A D^-1 C_P D^-1 C_A returned here.
RationalMatrix reweighted_triple_product(const QuotientMatrix& a,
                                         const IntegerMatrix& p_counts);

/// A N = N D^-1 (N^T A N): the equitable-partition identity A M = M (A/pi)
/// multiplied through by D^1/2.
bool satisfies_equitable_identity(const Graph& g, const Partition& pi);

/// A (N D^-1 N^T) = A = (N D^-1 N^T) A, i.e. A M M^T = A = M M^T A.
bool satisfies_neighborhood_identity(const Graph& g, const Partition& pi);

/// Neighborhood-partition view of k copies of H: caches pi-hat of
/// A~ = I_k (x) A_H and its quotient counts so that the reweighted triple
/// product can be evaluated per permutation.
class QuotientKernel {
 public:
  QuotientKernel(const Graph& h, std::size_t k);

  const Partition& partition() const noexcept { return partition_; }
  const QuotientMatrix& quotient() const noexcept { return quotient_; }

  RationalMatrix triple_product(const Permutation& p) const;
  bool triple_products_equal(const Permutation& p, const Permutation& q) const;
  bool triple_product_symmetric(const Permutation& p) const;

 private:
  Partition partition_;
  QuotientMatrix quotient_;
};

}  // namespace permpow
