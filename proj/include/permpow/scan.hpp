#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "permpow/graph.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// Worker count for batch scans: PERMPOW_THREADS when set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
std::size_t scan_threads();

/// Runs body(i) for every i in [0, count) on scan_threads() workers.
/// Callers write results into per-index slots so the outcome does not depend
/// on scheduling.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers = std::min(scan_threads(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// Uniform permutation by Fisher-Yates.
Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Generator for sample chunk `chunk` of a seeded run; chunking is fixed so
/// sampled scans are reproducible for any thread count.
std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk);

/// n!, saturating at UINT64_MAX.
std::uint64_t factorial_saturating(std::size_t n);

/// Every permutation of {0..n-1} whose image of 0 is `first`, in
/// lexicographic order.
template <typename Visit>
void for_each_permutation_with_first(std::size_t n, std::size_t first, Visit&& visit) {
  std::vector<std::size_t> images;
  images.reserve(n);
  images.push_back(first);
  for (std::size_t v = 0; v < n; ++v) {
    if (v != first) images.push_back(v);
  }
  do {
    visit(images);
  } while (std::next_permutation(images.begin() + 1, images.end()));
}

enum class ScanMode { Exhaustive, Sample };

struct ScanOptions {
  ScanMode mode = ScanMode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

struct ScanSummary {
  std::uint64_t scanned = 0;
  std::uint64_t symmetric = 0;
  std::uint64_t involutive = 0;
  std::uint64_t noninvolutive_valid = 0;
  /// Distinct non-involutive permutations with symmetric product, sorted.
  std::vector<Permutation> noninvolutive;
};

/// Scans Sym(k |V_H|) (exhaustively, up to 11 points, else TooLarge) or a
/// seeded uniform sample of it, classifying each permutation by whether
/// A~ P A~ is symmetric and whether it is an involution.
ScanSummary scan_powers(const Graph& h, std::size_t k, const ScanOptions& options);

}  // namespace permpow
