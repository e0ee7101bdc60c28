#include "permpow/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace permpow {

Partition::Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n)
    : blocks_(std::move(blocks)), block_of_(n, n) {
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(Errc::InvalidPartition, "empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t v : blocks_[i]) {
      if (v >= n) {
        throw Error(Errc::InvalidPartition,
                    "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
      }
      if (block_of_[v] != n) {
        throw Error(Errc::InvalidPartition, "vertex " + std::to_string(v) + " in two blocks");
      }
      block_of_[v] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (block_of_[v] == n) {
      throw Error(Errc::InvalidPartition, "vertex " + std::to_string(v) + " not covered");
    }
  }
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t v = 0; v < n; ++v) blocks[v] = {v};
  return Partition(std::move(blocks), n);
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(b.size());
  return out;
}

IntegerMatrix Partition::indicator() const {
  IntegerMatrix n(points(), block_count());
  for (std::size_t v = 0; v < points(); ++v) n(v, block_of_[v]) = 1;
  return n;
}

RationalMatrix Partition::projector() const {
  RationalMatrix out(points(), points());
  for (const auto& b : blocks_) {
    const BigRational weight(1, static_cast<long long>(b.size()));
    for (std::size_t u : b) {
      for (std::size_t v : b) out(u, v) = weight;
    }
  }
  return out;
}

Partition neighborhood_partition(const Graph& g) {
  const std::size_t n = g.size();
  std::map<std::vector<BigInt>, std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<BigInt> row(n);
    for (std::size_t w = 0; w < n; ++w) row[w] = g(v, w);
    classes[std::move(row)].push_back(v);
  }
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(classes.size());
  for (auto& [row, members] : classes) blocks.push_back(std::move(members));
  return Partition(std::move(blocks), n);
}

namespace {

void require_cover(const Graph& g, const Partition& pi) {
  if (pi.points() != g.size()) {
    throw Error(Errc::InvalidPartition, "partition of " + std::to_string(pi.points()) +
                                            " points for a graph on " +
                                            std::to_string(g.size()) + " vertices");
  }
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& pi) {
  require_cover(g, pi);
  // (A N)(v, j) is the number of edges from v into block j.
  const IntegerMatrix into = g.adjacency() * pi.indicator();
  for (const auto& block : pi.blocks()) {
    for (std::size_t idx = 1; idx < block.size(); ++idx) {
      for (std::size_t j = 0; j < pi.block_count(); ++j) {
        if (into(block[idx], j) != into(block[0], j)) return false;
      }
    }
  }
  return true;
}

double QuotientMatrix::normalized(std::size_t i, std::size_t j) const {
  return counts(i, j).convert_to<double>() /
         std::sqrt(static_cast<double>(sizes[i]) * static_cast<double>(sizes[j]));
}

QuotientMatrix quotient_adjacency(const Graph& g, const Partition& pi) {
  if (!is_equitable(g, pi)) {
    throw Error(Errc::NotEquitable, "quotient requires an equitable partition");
  }
  const IntegerMatrix n = pi.indicator();
  return QuotientMatrix{n.transpose() * g.adjacency() * n, pi.sizes()};
}

IntegerMatrix permutation_quotient_counts(const Permutation& p, const Partition& pi) {
  if (p.size() != pi.points()) {
    throw Error(Errc::DimensionMismatch, "permutation on " + std::to_string(p.size()) +
                                             " points, partition on " +
                                             std::to_string(pi.points()));
  }
  IntegerMatrix counts(pi.block_count(), pi.block_count());
  for (std::size_t v = 0; v < p.size(); ++v) counts(pi.block_of(v), pi.block_of(p(v))) += 1;
  return counts;
}

bool is_quotient_symmetric(const Permutation& p, const Partition& pi) {
  return permutation_quotient_counts(p, pi).is_symmetric();
}

RationalMatrix reweighted_triple_product(const QuotientMatrix& a,
                                         const IntegerMatrix& p_counts) {
  const std::size_t m = a.sizes.size();
  if (a.counts.rows() != m || p_counts.rows() != m || p_counts.cols() != m) {
    throw Error(Errc::DimensionMismatch, "quotient matrices of different order");
  }
  RationalMatrix d_inv(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    d_inv(i, i) = BigRational(1, static_cast<long long>(a.sizes[i]));
  }
  const RationalMatrix ca = to_rational(a.counts);
  return ca * d_inv * to_rational(p_counts) * d_inv * ca;
}

bool satisfies_equitable_identity(const Graph& g, const Partition& pi) {
  require_cover(g, pi);
  const IntegerMatrix n = pi.indicator();
  const IntegerMatrix counts = n.transpose() * g.adjacency() * n;
  RationalMatrix d_inv(pi.block_count(), pi.block_count());
  for (std::size_t i = 0; i < pi.block_count(); ++i) {
    d_inv(i, i) = BigRational(1, static_cast<long long>(pi.block(i).size()));
  }
  const RationalMatrix lhs = to_rational(g.adjacency() * n);
  const RationalMatrix rhs = to_rational(n) * d_inv * to_rational(counts);
  return lhs == rhs;
}

bool satisfies_neighborhood_identity(const Graph& g, const Partition& pi) {
  require_cover(g, pi);
  const RationalMatrix a = to_rational(g.adjacency());
  const RationalMatrix proj = pi.projector();
  return a * proj == a && proj * a == a;
}

QuotientKernel::QuotientKernel(const Graph& h, std::size_t k)
    : partition_(neighborhood_partition(disjoint_copies(h, k))),
      quotient_(quotient_adjacency(disjoint_copies(h, k), partition_)) {}

RationalMatrix QuotientKernel::triple_product(const Permutation& p) const {
  return reweighted_triple_product(quotient_, permutation_quotient_counts(p, partition_));
}

bool QuotientKernel::triple_products_equal(const Permutation& p, const Permutation& q) const {
  return triple_product(p) == triple_product(q);
}

bool QuotientKernel::triple_product_symmetric(const Permutation& p) const {
  return triple_product(p).is_symmetric();
}

}  // namespace permpow
