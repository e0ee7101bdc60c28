#include "permpow/graph.hpp"

#include <algorithm>
#include <deque>

namespace permpow {

Graph Graph::from_adjacency(IntegerMatrix adjacency) {
  if (adjacency.rows() == 0 && adjacency.cols() == 0) {
    throw Error(Errc::Empty, "graph must have at least one vertex");
  }
  if (!adjacency.is_square()) {
    throw Error(Errc::NotSquare, "adjacency matrix must be square");
  }
  const std::size_t n = adjacency.rows();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (adjacency(u, v) < 0) {
        throw Error(Errc::NegativeEntry,
                    "negative entry at (" + std::to_string(u) + ", " +
                        std::to_string(v) + ")");
      }
      if (adjacency(u, v) != adjacency(v, u)) {
        throw Error(Errc::NotSymmetric,
                    "a(" + std::to_string(u) + ", " + std::to_string(v) +
                        ") != a(" + std::to_string(v) + ", " +
                        std::to_string(u) + ")");
      }
    }
  }
  return Graph(std::move(adjacency));
}

BigInt Graph::degree(std::size_t v) const {
  BigInt sum = 0;
  for (std::size_t w = 0; w < size(); ++w) sum += adjacency_(v, w);
  return sum;
}

std::optional<BigInt> Graph::regular_degree() const {
  BigInt d = degree(0);
  for (std::size_t v = 1; v < size(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < size(); ++w) {
    if (adjacency_(v, w) > 0) out.push_back(w);
  }
  return out;
}

Graph disjoint_copies(const Graph& h, std::size_t k) {
  if (k == 0) throw Error(Errc::TooSmall, "need at least one copy");
  return Graph::from_adjacency(kron_identity(k, h.adjacency()));
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (std::size_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace permpow
