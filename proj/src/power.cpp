#include "permpow/power.hpp"

#include <cmath>
#include <random>

#include "permpow/scan.hpp"

namespace permpow {

PowerKernel::PowerKernel(const Graph& h, std::size_t k)
    : h_(h), k_(k), tilde_(disjoint_copies(h, k)) {
  const std::size_t n = tilde_.size();
  rows_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (tilde_(x, y) != 0) rows_[x].emplace_back(y, tilde_(x, y));
    }
  }
}

void PowerKernel::check(const Permutation& p) const {
  if (p.size() != dimension()) {
    throw Error(Errc::DimensionMismatch,
                "permutation on " + std::to_string(p.size()) + " elements, expected " +
                    std::to_string(dimension()) + " = k * |V_H|");
  }
}

IntegerMatrix PowerKernel::product(const Permutation& p) const {
  check(p);
  const std::size_t n = dimension();
  IntegerMatrix out(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& [l, a] : rows_[x]) {
      for (const auto& [y, b] : rows_[p(l)]) out(x, y) += a * b;
    }
  }
  return out;
}

bool PowerKernel::is_symmetric(const Permutation& p) const {
  return product(p).is_symmetric();
}

bool PowerKernel::products_equal(const Permutation& p, const Permutation& q) const {
  return product(p) == product(q);
}

ProjectionKernel::ProjectionKernel(const Graph& h, std::size_t k)
    : basis_(linalg::range_kernel_split(to_rational(disjoint_copies(h, k).adjacency()))
                 .range_basis) {}

void ProjectionKernel::check(const Permutation& p) const {
  if (p.size() != dimension()) {
    throw Error(Errc::DimensionMismatch,
                "permutation on " + std::to_string(p.size()) + " elements, expected " +
                    std::to_string(dimension()));
  }
}

RationalMatrix ProjectionKernel::projected(const Permutation& p) const {
  check(p);
  // (B^T M(p) B)(a, c) = sum_i B(i, a) B(p(i), c)
  const std::size_t r = rank();
  RationalMatrix out(r, r);
  for (std::size_t i = 0; i < dimension(); ++i) {
    const std::size_t pi = p(i);
    for (std::size_t a = 0; a < r; ++a) {
      const BigRational& left = basis_(i, a);
      if (left == 0) continue;
      for (std::size_t c = 0; c < r; ++c) {
        const BigRational& right = basis_(pi, c);
        if (right != 0) out(a, c) += left * right;
      }
    }
  }
  return out;
}

bool ProjectionKernel::projections_equal(const Permutation& p, const Permutation& q) const {
  return projected(p) == projected(q);
}

bool ProjectionKernel::projected_symmetric(const Permutation& p) const {
  return projected(p).is_symmetric();
}

PowerResult permutational_power(const Graph& h, std::size_t k, const Permutation& p) {
  PowerResult out;
  out.product = PowerKernel(h, k).product(p);
  out.symmetric = out.product.is_symmetric();
  if (out.symmetric) out.graph = Graph::from_adjacency(out.product);
  return out;
}

bool products_equal(const Graph& h, std::size_t k, const Permutation& p,
                    const Permutation& q) {
  const PowerKernel kernel(h, k);
  return kernel.products_equal(p, q);
}

bool range_projection_equal(const Graph& h, std::size_t k, const Permutation& p,
                            const Permutation& q) {
  const ProjectionKernel kernel(h, k);
  return kernel.projections_equal(p, q);
}

bool is_symmetric_product_projected(const Graph& h, std::size_t k, const Permutation& p) {
  return ProjectionKernel(h, k).projected_symmetric(p);
}

std::pair<bool, bool> inverse_symmetry(const Graph& h, std::size_t k, const Permutation& p) {
  const PowerKernel kernel(h, k);
  return {kernel.is_symmetric(p), kernel.is_symmetric(p.inverse())};
}

PowerSearchReport search_power_counterexample(const Graph& h, std::size_t k,
                                              std::uint64_t budget, std::uint64_t seed) {
  const PowerKernel kernel(h, k);
  const std::size_t n = kernel.dimension();
  PowerSearchReport report;
  report.exhaustive = factorial_saturating(n) <= budget;

  // True when the search should stop.
  auto examine = [&](const Permutation& p) {
    ++report.scanned;
    if (!kernel.is_symmetric(p)) return false;
    ++report.valid;
    if (p.is_involution()) return false;
    const auto order = static_cast<long long>(p.order());
    for (long long e = 2; e < order; ++e) {
      ++report.powers_checked;
      if (!kernel.is_symmetric(p.power(e))) {
        report.found = PowerCounterexample{p, e};
        return true;
      }
    }
    return false;
  };

  if (budget == 0) return report;
  if (report.exhaustive) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    do {
      if (examine(Permutation(images))) break;
    } while (std::next_permutation(images.begin(), images.end()));
  } else {
    auto rng = chunk_rng(seed, 0);
    for (std::uint64_t s = 0; s < budget; ++s) {
      if (examine(random_permutation(n, rng))) break;
    }
  }
  return report;
}

SpectralEstimate spectral_gap_estimate(const Graph& g) {
  const auto d = g.regular_degree();
  if (!d || *d == 0) {
    throw Error(Errc::NotRegular, "spectral estimate needs a regular graph of positive degree");
  }
  if (connected_components(g).size() != 1) {
    throw Error(Errc::NotConnected, "deflating the all-ones vector assumes connectivity");
  }
  SpectralEstimate out{*d, 0.0, 0};
  const std::size_t n = g.size();
  if (n == 1) return out;

  constexpr double kTolerance = 1e-9;
  constexpr std::size_t kMaxIterations = 100000;
  const double inv_d = 1.0 / d->convert_to<double>();

  std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (g(v, w) != 0) rows[v].emplace_back(w, g(v, w).convert_to<double>() * inv_d);
    }
  }

  auto deflate_and_normalize = [n](std::vector<double>& x) {
    double mean = 0.0;
    for (double value : x) mean += value;
    mean /= static_cast<double>(n);
    double norm = 0.0;
    for (double& value : x) {
      value -= mean;
      norm += value * value;
    }
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (double& value : x) value /= norm;
    }
    return norm;
  };

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& value : v) value = uniform(rng);
  deflate_and_normalize(v);

  std::vector<double> next(n);
  double previous = -1.0;
  for (std::size_t it = 1; it <= kMaxIterations; ++it) {
    for (std::size_t x = 0; x < n; ++x) {
      double sum = 0.0;
      for (const auto& [y, a] : rows[x]) sum += a * v[y];
      next[x] = sum;
    }
    const double estimate = deflate_and_normalize(next);
    out.second_eigenvalue = estimate;
    out.iterations = it;
    if (estimate == 0.0 || std::abs(estimate - previous) < kTolerance) break;
    previous = estimate;
    v.swap(next);
  }
  return out;
}

}  // namespace permpow
