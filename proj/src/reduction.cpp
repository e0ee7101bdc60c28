#include "permpow/reduction.hpp"

#include <algorithm>
#include <functional>

#include "permpow/linalg.hpp"
#include "permpow/power.hpp"
#include "permpow/scan.hpp"

namespace permpow {

TransferSets::TransferSets(const Permutation& p, const Partition& pi)
    : m_(pi.block_count()), sets_(m_ * m_) {
  if (p.size() != pi.points()) {
    throw Error(Errc::DimensionMismatch, "permutation on " + std::to_string(p.size()) +
                                             " points, partition on " +
                                             std::to_string(pi.points()));
  }
  // Iterating v in ascending order keeps every set sorted.
  for (std::size_t v = 0; v < p.size(); ++v) {
    sets_[pi.block_of(v) * m_ + pi.block_of(p(v))].push_back(v);
  }
}

IntegerMatrix TransferSets::sizes() const {
  IntegerMatrix out(m_, m_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) out(i, j) = at(i, j).size();
  }
  return out;
}

TransferSets transfer_sets(const Permutation& p, const Partition& pi) {
  return TransferSets(p, pi);
}

namespace {

void require_balanced(const TransferSets& t) {
  for (std::size_t i = 0; i < t.block_count(); ++i) {
    for (std::size_t j = i + 1; j < t.block_count(); ++j) {
      if (t.at(i, j).size() != t.at(j, i).size()) {
        throw Error(Errc::QuotientNotSymmetric,
                    "|V(" + std::to_string(i) + "," + std::to_string(j) + ")| = " +
                        std::to_string(t.at(i, j).size()) + " but |V(" + std::to_string(j) +
                        "," + std::to_string(i) + ")| = " + std::to_string(t.at(j, i).size()));
      }
    }
  }
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Calls visit(images) for every involution on the listed points, writing
/// into `images` (which must hold the identity on those points on entry).
void for_each_involution_on(std::vector<std::size_t>& points, std::vector<bool>& used,
                            std::size_t from, std::vector<std::size_t>& images,
                            const std::function<void()>& visit) {
  std::size_t first = from;
  while (first < points.size() && used[first]) ++first;
  if (first == points.size()) {
    visit();
    return;
  }
  used[first] = true;
  // fixed point
  for_each_involution_on(points, used, first + 1, images, visit);
  for (std::size_t partner = first + 1; partner < points.size(); ++partner) {
    if (used[partner]) continue;
    used[partner] = true;
    images[points[first]] = points[partner];
    images[points[partner]] = points[first];
    for_each_involution_on(points, used, first + 1, images, visit);
    images[points[first]] = points[first];
    images[points[partner]] = points[partner];
    used[partner] = false;
  }
  used[first] = false;
}

}  // namespace

Permutation involution_from_transfers(const Permutation& p, const Partition& pi) {
  const TransferSets t(p, pi);
  require_balanced(t);
  std::vector<std::size_t> images(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) images[v] = v;
  for (std::size_t i = 0; i < t.block_count(); ++i) {
    for (std::size_t j = i + 1; j < t.block_count(); ++j) {
      const auto& from = t.at(i, j);
      const auto& to = t.at(j, i);
      for (std::size_t idx = 0; idx < from.size(); ++idx) {
        images[from[idx]] = to[idx];
        images[to[idx]] = from[idx];
      }
    }
  }
  return Permutation(std::move(images));
}

Permutation reduce_to_involution(const Graph& h, std::size_t k, const Permutation& p) {
  const Partition pi = neighborhood_partition(disjoint_copies(h, k));
  return involution_from_transfers(p, pi);
}

BigInt count_involution_candidates(const Permutation& p, const Partition& pi) {
  const TransferSets t(p, pi);
  require_balanced(t);
  BigInt product = 1;
  for (std::size_t i = 0; i < t.block_count(); ++i) {
    for (std::size_t j = 0; j < t.block_count(); ++j) product *= factorial(t.at(i, j).size());
  }
  return product;
}

std::vector<Permutation> brute_force_equivalent_involutions(const Graph& h, std::size_t k,
                                                            const Permutation& p,
                                                            std::uint64_t cap) {
  const PowerKernel kernel(h, k);
  const std::size_t n = kernel.dimension();
  const BigInt total = involution_count(n);
  if (total > cap) {
    throw Error(Errc::TooLarge, "Sym(" + std::to_string(n) + ") has " + total.str() +
                                    " involutions, cap is " + std::to_string(cap));
  }
  const IntegerMatrix target = kernel.product(p);
  if (n == 0) return {};

  // Split on the partner of point 0 (itself or any later point).
  std::vector<std::vector<Permutation>> found(n);
  parallel_for(n, [&](std::size_t partner) {
    std::vector<std::size_t> images(n);
    for (std::size_t v = 0; v < n; ++v) images[v] = v;
    images[0] = partner;
    images[partner] = 0;
    std::vector<std::size_t> rest;
    for (std::size_t v = 1; v < n; ++v) {
      if (v != partner) rest.push_back(v);
    }
    std::vector<bool> used(rest.size(), false);
    for_each_involution_on(rest, used, 0, images, [&] {
      Permutation q(images);
      if (kernel.product(q) == target) found[partner].push_back(std::move(q));
    });
  });

  std::vector<Permutation> out;
  for (auto& chunk : found) {
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> enumerate_bijection_systems(const Permutation& p, const Partition& pi,
                                                     std::uint64_t cap) {
  const TransferSets t(p, pi);
  require_balanced(t);
  const std::size_t m = t.block_count();

  BigInt total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= involution_count(t.at(i, i).size());
    for (std::size_t j = i + 1; j < m; ++j) total *= factorial(t.at(i, j).size());
  }
  if (total > cap) {
    throw Error(Errc::TooLarge, total.str() + " bijection systems exceed cap " +
                                    std::to_string(cap));
  }

  // One stage per diagonal set (involutions) and per off-diagonal pair
  // (bijections, i.e. orderings of V(j, i) matched to sorted V(i, j)).
  struct Stage {
    bool diagonal;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Stage> stages;
  for (std::size_t i = 0; i < m; ++i) {
    if (!t.at(i, i).empty()) stages.push_back({true, i, i});
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!t.at(i, j).empty()) stages.push_back({false, i, j});
    }
  }

  std::vector<std::size_t> images(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) images[v] = v;
  std::vector<Permutation> out;

  std::function<void(std::size_t)> run = [&](std::size_t s) {
    if (s == stages.size()) {
      out.emplace_back(images);
      return;
    }
    const Stage& st = stages[s];
    if (st.diagonal) {
      std::vector<std::size_t> points = t.at(st.i, st.i);
      std::vector<bool> used(points.size(), false);
      for_each_involution_on(points, used, 0, images, [&] { run(s + 1); });
      return;
    }
    const auto& from = t.at(st.i, st.j);
    std::vector<std::size_t> to = t.at(st.j, st.i);
    do {
      for (std::size_t idx = 0; idx < from.size(); ++idx) {
        images[from[idx]] = to[idx];
        images[to[idx]] = from[idx];
      }
      run(s + 1);
    } while (std::next_permutation(to.begin(), to.end()));
    for (std::size_t v : from) images[v] = v;
    for (std::size_t v : to) images[v] = v;
  };
  run(0);

  std::sort(out.begin(), out.end());
  return out;
}

FastPathResult invertible_quotient_fast_path(const Graph& h, std::size_t k,
                                             const Permutation& p) {
  const QuotientKernel quotient(h, k);
  if (!linalg::is_invertible(quotient.quotient().counts)) {
    return {std::nullopt, "quotient of the copies over the neighborhood partition is singular"};
  }
  if (!PowerKernel(h, k).is_symmetric(p)) {
    return {std::nullopt, "the triple product is not symmetric"};
  }
  return {involution_from_transfers(p, quotient.partition()),
          "invertible quotient forces a symmetric permutation quotient"};
}

}  // namespace permpow
