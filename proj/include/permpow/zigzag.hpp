#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "permpow/graph.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// A port is a (vertex, color) pair of a labeled regular graph.
struct Port {
  std::size_t vertex = 0;
  std::size_t color = 0;
  friend auto operator<=>(const Port&, const Port&) = default;
};

/// d-regular graph given by its rotation map Rot(v, h) = (w, k): the edge
/// leaving v with color h near v arrives at w with color k near w.
///
/// Ports flatten as (v, h) -> v * d + h. A pair of distinct ports on the same
/// vertex is a loop contributing 2 to the diagonal; a port fixed by the
/// rotation map is a half-loop contributing 1. The underlying adjacency is
/// therefore a(v, w) = #{h : Rot(v, h) lands on w}, with row sums d.
class LabeledGraph {
 public:
  /// Quadruples (v, h, w, k). Every port must be listed exactly once and the
  /// map must be an involution; otherwise throws InvalidRotation (or
  /// IndexOutOfRange for labels outside range).
  static LabeledGraph from_rotation(std::size_t n, std::size_t d,
                                    const std::vector<std::array<std::size_t, 4>>& rot);

  std::size_t size() const noexcept { return n_; }
  std::size_t degree() const noexcept { return d_; }
  Port rotate(std::size_t v, std::size_t h) const { return rot_[v * d_ + h]; }

  /// Rotation map as quadruples in port order.
  std::vector<std::array<std::size_t, 4>> quadruples() const;

  Graph underlying() const;

 private:
  LabeledGraph(std::size_t n, std::size_t d, std::vector<Port> rot)
      : n_(n), d_(d), rot_(std::move(rot)) {}

  std::size_t n_ = 0;
  std::size_t d_ = 0;
  std::vector<Port> rot_;
};

/// The involution on n * d ports induced by the rotation map; its matrix is
/// the jump matrix P_G with P_G((v,k),(w,l)) = 1 iff Rot(v,k) = (w,l).
Permutation rotation_to_permutation(const LabeledGraph& g);

/// Zig-zag product: vertices (v, k) flattened as v * d_G + k; for each pair
/// of H-colors (i, j) the edge follows a zig step in H, a jump along G and a
/// zag step in H. Multi-edges accumulate as matrix entries.
/// Throws DimensionMismatch when |V_H| != d_G.
Graph zigzag_product(const LabeledGraph& g, const LabeledGraph& h);

/// The labeled "cloud" graph read off a permutation of k * m elements, where
/// x = i * m + j is color j of cloud i.
class CloudGraph {
 public:
  struct Arc {
    Port source;
    Port target;
    friend auto operator<=>(const Arc&, const Arc&) = default;
  };

  std::size_t clouds() const noexcept { return k_; }
  std::size_t colors() const noexcept { return m_; }

  /// One arc per element x, from port(x) to port(p(x)), in order of x.
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  /// Arcs of elements in 2-cycles or fixed points, merged into undirected
  /// edges (source <= target); fixed points become loops with equal labels.
  std::vector<Arc> undirected_edges() const;

  /// Arcs of elements lying on cycles of length >= 3.
  std::vector<Arc> directed_arcs() const;

  /// True when every arc pairs up, i.e. the permutation is an involution.
  bool is_undirected() const;

  /// For an involution, the m-regular labeled graph on k vertices whose
  /// rotation map sends (i_x, j_x) to (i_y, j_y) whenever p(x) = y.
  /// Throws InvalidRotation otherwise.
  LabeledGraph to_labeled_graph() const;

  /// Graphviz digraph: paired arcs are drawn once with dir=none, the rest
  /// with dir=forward; labels read "j_s,j_t".
  std::string to_dot() const;

 private:
  friend CloudGraph cloud_graph_from_permutation(const Permutation&, std::size_t,
                                                 std::size_t);
  CloudGraph(std::size_t k, std::size_t m, Permutation p, std::vector<Arc> arcs)
      : k_(k), m_(m), p_(std::move(p)), arcs_(std::move(arcs)) {}

  std::size_t k_;
  std::size_t m_;
  Permutation p_;
  std::vector<Arc> arcs_;
};

/// Throws DimensionMismatch unless p acts on k * m elements.
CloudGraph cloud_graph_from_permutation(const Permutation& p, std::size_t k,
                                        std::size_t m);

}  // namespace permpow
