#include "permpow/zigzag.hpp"

#include <sstream>

namespace permpow {

LabeledGraph LabeledGraph::from_rotation(
    std::size_t n, std::size_t d,
    const std::vector<std::array<std::size_t, 4>>& rot) {
  if (n == 0) throw Error(Errc::Empty, "labeled graph needs a vertex");
  std::vector<Port> table(n * d);
  std::vector<bool> defined(n * d, false);
  for (const auto& [v, h, w, k] : rot) {
    if (v >= n || w >= n || h >= d || k >= d) {
      throw Error(Errc::IndexOutOfRange,
                  "rotation entry (" + std::to_string(v) + "," + std::to_string(h) +
                      ")->(" + std::to_string(w) + "," + std::to_string(k) +
                      ") outside " + std::to_string(n) + " vertices x " +
                      std::to_string(d) + " colors");
    }
    const std::size_t port = v * d + h;
    if (defined[port]) {
      throw Error(Errc::InvalidRotation, "port (" + std::to_string(v) + "," +
                                             std::to_string(h) + ") listed twice");
    }
    defined[port] = true;
    table[port] = Port{w, k};
  }
  for (std::size_t port = 0; port < n * d; ++port) {
    if (!defined[port]) {
      throw Error(Errc::InvalidRotation, "port (" + std::to_string(port / d) + "," +
                                             std::to_string(port % d) + ") missing");
    }
    const Port there = table[port];
    const Port back = table[there.vertex * d + there.color];
    if (back.vertex * d + back.color != port) {
      throw Error(Errc::InvalidRotation,
                  "rotation map is not an involution at (" + std::to_string(port / d) +
                      "," + std::to_string(port % d) + ")");
    }
  }
  return LabeledGraph(n, d, std::move(table));
}

std::vector<std::array<std::size_t, 4>> LabeledGraph::quadruples() const {
  std::vector<std::array<std::size_t, 4>> out;
  out.reserve(rot_.size());
  for (std::size_t port = 0; port < rot_.size(); ++port) {
    out.push_back({port / d_, port % d_, rot_[port].vertex, rot_[port].color});
  }
  return out;
}

Graph LabeledGraph::underlying() const {
  IntegerMatrix a(n_, n_);
  for (std::size_t port = 0; port < rot_.size(); ++port) {
    a(port / d_, rot_[port].vertex) += 1;
  }
  return Graph::from_adjacency(std::move(a));
}

Permutation rotation_to_permutation(const LabeledGraph& g) {
  const std::size_t d = g.degree();
  std::vector<std::size_t> images(g.size() * d);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t h = 0; h < d; ++h) {
      const Port to = g.rotate(v, h);
      images[v * d + h] = to.vertex * d + to.color;
    }
  }
  return Permutation(std::move(images));
}

Graph zigzag_product(const LabeledGraph& g, const LabeledGraph& h) {
  const std::size_t dg = g.degree();
  if (h.size() != dg) {
    throw Error(Errc::DimensionMismatch, "|V_H| = " + std::to_string(h.size()) +
                                             " but d_G = " + std::to_string(dg));
  }
  const std::size_t dh = h.degree();
  const std::size_t n = g.size() * dg;
  IntegerMatrix a(n, n);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t k = 0; k < dg; ++k) {
      for (std::size_t i = 0; i < dh; ++i) {
        const Port zig = h.rotate(k, i);            // (k', i')
        const Port jump = g.rotate(v, zig.vertex);  // (w, l')
        for (std::size_t j = 0; j < dh; ++j) {
          const Port zag = h.rotate(jump.color, j);  // (l, j')
          a(v * dg + k, jump.vertex * dg + zag.vertex) += 1;
        }
      }
    }
  }
  return Graph::from_adjacency(std::move(a));
}

CloudGraph cloud_graph_from_permutation(const Permutation& p, std::size_t k,
                                        std::size_t m) {
  if (p.size() != k * m || m == 0) {
    throw Error(Errc::DimensionMismatch,
                "permutation on " + std::to_string(p.size()) +
                    " elements cannot be split into " + std::to_string(k) +
                    " clouds of " + std::to_string(m));
  }
  std::vector<CloudGraph::Arc> arcs;
  arcs.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    const std::size_t y = p(x);
    arcs.push_back({Port{x / m, x % m}, Port{y / m, y % m}});
  }
  return CloudGraph(k, m, p, std::move(arcs));
}

std::vector<CloudGraph::Arc> CloudGraph::undirected_edges() const {
  std::vector<Arc> out;
  for (std::size_t x = 0; x < p_.size(); ++x) {
    const std::size_t y = p_(x);
    if (p_(y) == x && x <= y) out.push_back(arcs_[x]);
  }
  return out;
}

std::vector<CloudGraph::Arc> CloudGraph::directed_arcs() const {
  std::vector<Arc> out;
  for (std::size_t x = 0; x < p_.size(); ++x) {
    if (p_(p_(x)) != x) out.push_back(arcs_[x]);
  }
  return out;
}

bool CloudGraph::is_undirected() const { return p_.is_involution(); }

LabeledGraph CloudGraph::to_labeled_graph() const {
  if (!is_undirected()) {
    throw Error(Errc::InvalidRotation, "only an involution defines a rotation map");
  }
  std::vector<std::array<std::size_t, 4>> quads;
  quads.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    quads.push_back({a.source.vertex, a.source.color, a.target.vertex, a.target.color});
  }
  return LabeledGraph::from_rotation(k_, m_, quads);
}

std::string CloudGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph cloud {\n";
  for (std::size_t i = 0; i < k_; ++i) os << "  c" << i << " [label=\"" << i << "\"];\n";
  for (const Arc& e : undirected_edges()) {
    os << "  c" << e.source.vertex << " -> c" << e.target.vertex << " [dir=none, label=\""
       << e.source.color << ',' << e.target.color << "\"];\n";
  }
  for (const Arc& e : directed_arcs()) {
    os << "  c" << e.source.vertex << " -> c" << e.target.vertex
       << " [dir=forward, label=\"" << e.source.color << ',' << e.target.color
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace permpow
