// Worked-example data shared by the unit tests and the acceptance binary.
// Every vertex index is 0-based.
#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "permpow/families.hpp"
#include "permpow/graph.hpp"
#include "permpow/permutation.hpp"
#include "permpow/zigzag.hpp"

namespace fixtures {

using permpow::Graph;
using permpow::IntegerMatrix;
using permpow::LabeledGraph;
using permpow::Permutation;

// Nonregular graph on six vertices: 0,1 hang off 2; 4,5 hang off 3; 2 ~ 3.
inline Graph h6() {
  return Graph::from_adjacency(IntegerMatrix{{0, 0, 1, 0, 0, 0},
                                             {0, 0, 1, 0, 0, 0},
                                             {1, 1, 0, 1, 0, 0},
                                             {0, 0, 1, 0, 1, 1},
                                             {0, 0, 0, 1, 0, 0},
                                             {0, 0, 0, 1, 0, 0}});
}

// 3-regular G on four vertices, colors a, b, c = 0, 1, 2.
inline LabeledGraph example_g() {
  return LabeledGraph::from_rotation(
      4, 3,
      {{0, 0, 1, 2}, {1, 2, 0, 0}, {0, 1, 2, 2}, {2, 2, 0, 1}, {0, 2, 3, 0},
       {3, 0, 0, 2}, {1, 0, 3, 1}, {3, 1, 1, 0}, {1, 1, 2, 0}, {2, 0, 1, 1},
       {2, 1, 3, 2}, {3, 2, 2, 1}});
}

// Triangle on a, b, c = 0, 1, 2 with colors A, B = 0, 1.
inline LabeledGraph example_h() {
  return LabeledGraph::from_rotation(
      3, 2, {{0, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, 2, 0}, {2, 0, 0, 1}, {2, 1, 1, 0}, {1, 0, 2, 1}});
}

// Reference 12 x 12 permutation matrix of the rotation map of example_g().
inline IntegerMatrix example_pg() {
  return IntegerMatrix{
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}};
}

// (1,a) is adjacent to (3,a), (3,b), (4,b), (4,c); flattened v*3 + color.
inline std::vector<std::size_t> example_neighbors_of_1a() { return {6, 7, 10, 11}; }

// Three copies of C4.
inline Permutation c4x3_p() {
  return Permutation::from_cycles("(0 11)(1 9)(2 5)(3 6)(4 10)(7 8)", 12);
}
inline Permutation c4x3_p_prime() {
  return Permutation::from_cycles("(0 11 3 6 10 7 8 4 1 9 2 5)", 12);
}

// Two copies of h6().
inline Permutation h6x2_p() {
  return Permutation::from_cycles("(0 4 6 3 7 5 1 8)(2 9)(10 11)", 12);
}
inline Permutation h6x2_q() {
  return Permutation::from_cycles("(0 4)(1 8)(2 9)(3 7)(5 6)(10 11)", 12);
}
inline std::vector<std::size_t> h6x2_neighbors_of_2() { return {3, 6, 7, 8, 9}; }

// Reference P / pi-hat for h6x2_p, entries squared as {numerator, denominator}.
inline std::vector<std::vector<std::pair<int, int>>> h6x2_quotient_squared() {
  const std::pair<int, int> z{0, 1}, q{1, 4}, h{1, 2}, o{1, 1};
  return {{z, z, z, q, z, h, z, z}, {z, z, z, z, z, z, o, z}, {z, z, z, z, h, z, z, z},
          {q, z, z, z, q, z, z, z}, {z, z, h, q, z, z, z, z}, {h, z, z, z, z, z, z, z},
          {z, o, z, z, z, z, z, z}, {z, z, z, z, z, z, z, o}};
}

// Reference H6 / pi-hat, entries squared.
inline IntegerMatrix h6_quotient_squared() {
  return IntegerMatrix{{0, 2, 0, 0}, {2, 0, 1, 0}, {0, 1, 0, 2}, {0, 0, 2, 0}};
}
inline IntegerMatrix h6_counts() {
  return IntegerMatrix{{0, 2, 0, 0}, {2, 0, 1, 0}, {0, 1, 0, 2}, {0, 0, 2, 0}};
}
inline std::vector<std::size_t> h6_sizes() { return {2, 1, 1, 2}; }

// Two copies of K_{3,5}; one-line form given 1-based, shifted down by one.
inline Permutation k35_p() {
  return Permutation({3, 9, 15, 7, 1, 8, 14, 13, 5, 12, 2, 6, 10, 4, 11, 0});
}
inline Permutation k35_q() {
  return Permutation::from_cycles("(0 4)(1 10)(2 15)(5 8)(6 11)(7 13)(9 12)", 16);
}
// Reference P / pi-hat entries squared as {numerator, denominator}.
inline std::vector<std::vector<std::pair<int, int>>> k35_quotient_squared() {
  const std::pair<int, int> z{0, 1}, f{1, 15}, n{1, 9}, t{1, 25}, w{4, 25};
  return {{z, f, n, f}, {f, t, f, w}, {n, f, z, f}, {f, w, f, t}};
}

// C8 witnesses.
inline Permutation tau4() { return Permutation::from_cycles("(1 5 7 3)", 8); }
inline Permutation gamma1() { return Permutation::from_cycles("(0 1 2 3)(4 7 6 5)", 8); }
inline Permutation gamma1_q() { return Permutation::from_cycles("(0 1)(2 3)(4 7)(5 6)", 8); }
inline Permutation neighborhood_witness() {
  return Permutation::from_cycles("(0 3 2 1)(4 5 6 7)", 8);
}

}  // namespace fixtures
