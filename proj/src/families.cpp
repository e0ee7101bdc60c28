#include "permpow/families.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <complex>
#include <limits>
#include <numbers>

namespace permpow {

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::TooSmall, "cycle needs at least 3 vertices");
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, (i + 1) % n) = 1;
    a((i + 1) % n, i) = 1;
  }
  return Graph::from_adjacency(std::move(a));
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw Error(Errc::TooSmall, "path needs at least 1 vertex");
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a(i, i + 1) = 1;
    a(i + 1, i) = 1;
  }
  return Graph::from_adjacency(std::move(a));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error(Errc::TooSmall, "both sides need a vertex");
  IntegerMatrix a(m + n, m + n);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = m; v < m + n; ++v) {
      a(u, v) = 1;
      a(v, u) = 1;
    }
  }
  return Graph::from_adjacency(std::move(a));
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error(Errc::TooSmall, "complete graph needs a vertex");
  IntegerMatrix a(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) a(u, v) = 1;
    }
  }
  return Graph::from_adjacency(std::move(a));
}

namespace {

void require_multiple_of_4(std::size_t n) {
  if (n == 0 || n % 4 != 0) {
    throw Error(Errc::NotDivisibleBy4, "n = " + std::to_string(n) + " is not a multiple of 4");
  }
}

Permutation cycles_on_8(std::initializer_list<std::initializer_list<std::size_t>> cycles) {
  std::vector<std::size_t> images(8);
  for (std::size_t i = 0; i < 8; ++i) images[i] = i;
  for (const auto& cycle : cycles) {
    const std::vector<std::size_t> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) images[c[i]] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(images));
}

/// Involutions (identity included) on the given four points of {0..7}.
std::vector<Permutation> involutions_on_8(const std::array<std::size_t, 4>& pts) {
  std::vector<Permutation> out;
  out.push_back(Permutation::identity(8));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) out.push_back(cycles_on_8({{pts[a], pts[b]}}));
  }
  out.push_back(cycles_on_8({{pts[0], pts[1]}, {pts[2], pts[3]}}));
  out.push_back(cycles_on_8({{pts[0], pts[2]}, {pts[1], pts[3]}}));
  out.push_back(cycles_on_8({{pts[0], pts[3]}, {pts[1], pts[2]}}));
  return out;
}

}  // namespace

std::size_t star_involution(std::size_t i, std::size_t n) {
  require_multiple_of_4(n);
  return (i + n / 2) % n;
}

bool cyclic_symmetry_conditions(const Permutation& p, std::size_t n) {
  require_multiple_of_4(n);
  if (p.size() != n) {
    throw Error(Errc::DimensionMismatch, "permutation is not on " + std::to_string(n) + " points");
  }
  const Permutation inv = p.inverse();
  auto star = [n](std::size_t i) { return (i + n / 2) % n; };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool both_fixed_by_square = p(i) == inv(i) && p(j) == inv(j);
      if ((i + 4 - j % 4) % 4 == 0) {
        const bool crossed = p(i) == star(inv(j)) && p(j) == star(inv(i));
        if (!both_fixed_by_square && !crossed) return false;
      } else if ((i + 4 - j % 4) % 4 == 2) {
        const bool swapped = p(i) == inv(j) && p(j) == inv(i);
        const bool antipodal = p(i) == star(p(j)) && inv(i) == star(inv(j));
        if (!both_fixed_by_square && !swapped && !antipodal) return false;
      }
    }
  }
  return true;
}

C8Catalog c8_catalog() {
  C8Catalog cat;
  cat.sigmas = {cycles_on_8({{0, 2, 6, 4}}), cycles_on_8({{0, 6, 2, 4}}),
                cycles_on_8({{0, 4, 2, 6}}), cycles_on_8({{0, 4, 6, 2}})};
  cat.taus = {cycles_on_8({{1, 3, 7, 5}}), cycles_on_8({{1, 7, 3, 5}}),
              cycles_on_8({{1, 5, 3, 7}}), cycles_on_8({{1, 5, 7, 3}})};
  auto star = [](std::size_t i) { return (i + 4) % 8; };
  for (int shift : {2, -2}) {
    for (std::size_t b : {2, 6}) {
      for (std::size_t a : {1, 3, 5, 7}) {
        const std::size_t c = (a + 8 + shift) % 8;
        cat.gammas.push_back(cycles_on_8({{0, a, b, c}, {4, star(c), star(b), star(a)}}));
      }
    }
  }
  return cat;
}

std::vector<Permutation> c8_all_valid_noninvolutions() {
  const C8Catalog cat = c8_catalog();
  std::vector<Permutation> out;
  for (const auto& q : involutions_on_8({1, 3, 5, 7})) {
    for (const auto& sigma : cat.sigmas) out.push_back(compose(q, sigma));
  }
  for (const auto& s : involutions_on_8({0, 2, 4, 6})) {
    for (const auto& tau : cat.taus) out.push_back(compose(s, tau));
  }
  for (const auto& sigma : cat.sigmas) {
    for (const auto& tau : cat.taus) out.push_back(compose(sigma, tau));
  }
  out.insert(out.end(), cat.gammas.begin(), cat.gammas.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RootSumReport root_sum_scan(std::size_t n) {
  require_multiple_of_4(n);
  if (n > 24) throw Error(Errc::TooLarge, "root-sum scan is limited to n <= 24");

  constexpr double kVanish = 1e-9;
  constexpr double kBandLow = 1e-12;
  constexpr double kBandHigh = 1e-6;

  std::vector<std::complex<double>> zeta(n);
  for (std::size_t e = 0; e < n; ++e) {
    zeta[e] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                  static_cast<double>(n));
  }
  auto star = [n](std::size_t i) { return (i + n / 2) % n; };

  RootSumReport report;
  report.min_nonvanishing = std::numeric_limits<double>::infinity();
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      for (std::size_t i3 = 0; i3 < n; ++i3) {
        for (std::size_t i4 = 0; i4 < n; ++i4) {
          ++report.quadruples;
          const double mag = std::abs(zeta[i1] + zeta[i2] - zeta[i3] - zeta[i4]);
          if (mag >= kBandLow && mag <= kBandHigh) report.band_clear = false;
          if (mag >= kVanish) {
            report.min_nonvanishing = std::min(report.min_nonvanishing, mag);
            continue;
          }
          ++report.vanishing;
          const bool antipodal = i1 == star(i2) && i3 == star(i4);
          const bool same = (i1 == i3 && i2 == i4) || (i1 == i4 && i2 == i3);
          if (!antipodal && !same) report.holds = false;
        }
      }
    }
  }
  return report;
}

bool verify_root_sum_lemma(std::size_t n) {
  const RootSumReport r = root_sum_scan(n);
  return r.holds && r.band_clear;
}

}  // namespace permpow
