#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permpow/graph.hpp"
#include "permpow/partition.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// V(i, j) = {v in C_i : p(v) in C_j}, each sorted ascending. For every i
/// the sets V(i, 0..m-1) partition C_i.
class TransferSets {
 public:
  TransferSets(const Permutation& p, const Partition& pi);

  std::size_t block_count() const noexcept { return m_; }
  const std::vector<std::size_t>& at(std::size_t i, std::size_t j) const {
    return sets_[i * m_ + j];
  }
  /// |V(i, j)|, equal to permutation_quotient_counts(p, pi).
  IntegerMatrix sizes() const;

  friend bool operator==(const TransferSets&, const TransferSets&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::vector<std::size_t>> sets_;
};

/// Throws DimensionMismatch.
TransferSets transfer_sets(const Permutation& p, const Partition& pi);

/// Involution q with the same transfer sets as p: for i < j the sorted
/// V(i, j) and V(j, i) are paired positionally into transpositions and every
/// element of V(i, i) is fixed. Throws QuotientNotSymmetric when some
/// |V(i, j)| != |V(j, i)|.
Permutation involution_from_transfers(const Permutation& p, const Partition& pi);

/// Same construction with pi = neighborhood partition of k copies of H. The
/// result satisfies q^2 = id and A~ Q A~ = A~ P A~.
Permutation reduce_to_involution(const Graph& h, std::size_t k, const Permutation& p);

/// The product of p_ij! over all ordered pairs (i, j), p_ij = |V(i, j)|.
/// Reported as stated in the literature; it is not claimed to equal the
/// number of equivalent involutions. Throws QuotientNotSymmetric.
BigInt count_involution_candidates(const Permutation& p, const Partition& pi);

/// Every involution q (identity included) with A~ Q A~ = A~ P A~, sorted.
/// Throws TooLarge when the number of involutions on k |V_H| points exceeds
/// `cap`.
std::vector<Permutation> brute_force_equivalent_involutions(const Graph& h, std::size_t k,
                                                            const Permutation& p,
                                                            std::uint64_t cap = 1'000'000);

/// All involutions obtained from bijection systems: any bijection
/// V(i, j) -> V(j, i) for i < j together with any involution on each
/// V(i, i). Sorted. Throws QuotientNotSymmetric, or TooLarge when more than
/// `cap` systems exist.
std::vector<Permutation> enumerate_bijection_systems(const Permutation& p, const Partition& pi,
                                                     std::uint64_t cap = 1'000'000);

struct FastPathResult {
  std::optional<Permutation> involution;
  std::string reason;
};

/// When the quotient counts of A~ over pi-hat form an invertible matrix and
/// A~ P A~ is symmetric, P/pi-hat is forced to be symmetric and the
/// transfer-set construction applies. Otherwise returns no involution and a
/// reason.
FastPathResult invertible_quotient_fast_path(const Graph& h, std::size_t k,
                                             const Permutation& p);

}  // namespace permpow
