#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permpow/matrix.hpp"

namespace permpow {

/// Undirected multigraph given by a symmetric nonnegative integer adjacency
/// matrix. Entry (u, v) is the number of edges joining u and v; a diagonal
/// entry counts loops. Immutable after construction.
class Graph {
 public:
  /// Validates the matrix: nonempty, square, symmetric, nonnegative.
  /// Throws Error with Empty, NotSquare, NotSymmetric or NegativeEntry.
  static Graph from_adjacency(IntegerMatrix adjacency);

  std::size_t size() const noexcept { return adjacency_.rows(); }
  const IntegerMatrix& adjacency() const noexcept { return adjacency_; }
  const BigInt& operator()(std::size_t u, std::size_t v) const {
    return adjacency_(u, v);
  }

  /// Row sum of the adjacency matrix (a loop contributes its diagonal entry).
  BigInt degree(std::size_t v) const;

  /// The common degree, or nullopt when the graph is not regular.
  std::optional<BigInt> regular_degree() const;

  /// Vertices w with a(v, w) > 0, ascending.
  std::vector<std::size_t> neighbors(std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  explicit Graph(IntegerMatrix adjacency) : adjacency_(std::move(adjacency)) {}

  IntegerMatrix adjacency_;
};

/// k disjoint copies of h; vertex x = i * |V_h| + j is vertex j of copy i.
Graph disjoint_copies(const Graph& h, std::size_t k);

/// Connected components by BFS over the support of the adjacency matrix.
/// Components are listed by smallest vertex, each sorted ascending.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

}  // namespace permpow
