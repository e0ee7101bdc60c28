#include "permpow/scan.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "permpow/power.hpp"

namespace permpow {

namespace {

constexpr std::uint64_t kSampleChunk = 1024;
constexpr std::size_t kMaxExhaustive = 11;

struct ChunkResult {
  std::uint64_t scanned = 0;
  std::uint64_t symmetric = 0;
  std::uint64_t involutive = 0;
  std::uint64_t noninvolutive_valid = 0;
  std::vector<Permutation> noninvolutive;
};

void classify(const PowerKernel& kernel, const Permutation& p, ChunkResult& out) {
  ++out.scanned;
  const bool involution = p.is_involution();
  if (involution) ++out.involutive;
  if (!kernel.is_symmetric(p)) return;
  ++out.symmetric;
  if (!involution) {
    ++out.noninvolutive_valid;
    out.noninvolutive.push_back(p);
  }
}

}  // namespace

std::size_t scan_threads() {
  if (const char* env = std::getenv("PERMPOW_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(images[i - 1], images[pick(rng)]);
  }
  return Permutation(std::move(images));
}

std::mt19937_64 chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

std::uint64_t factorial_saturating(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= i;
  }
  return f;
}

ScanSummary scan_powers(const Graph& h, std::size_t k, const ScanOptions& options) {
  const PowerKernel kernel(h, k);
  const std::size_t n = kernel.dimension();

  std::vector<ChunkResult> chunks;
  if (options.mode == ScanMode::Exhaustive) {
    if (n > kMaxExhaustive) {
      throw Error(Errc::TooLarge, "exhaustive scan over Sym(" + std::to_string(n) +
                                      ") exceeds the " + std::to_string(kMaxExhaustive) +
                                      "-point limit");
    }
    chunks.resize(n);
    parallel_for(n, [&](std::size_t first) {
      for_each_permutation_with_first(n, first, [&](const std::vector<std::size_t>& img) {
        classify(kernel, Permutation(img), chunks[first]);
      });
    });
  } else {
    const std::uint64_t count = (options.samples + kSampleChunk - 1) / kSampleChunk;
    chunks.resize(count);
    parallel_for(count, [&](std::size_t c) {
      auto rng = chunk_rng(options.seed, c);
      const std::uint64_t begin = c * kSampleChunk;
      const std::uint64_t end = std::min(options.samples, begin + kSampleChunk);
      for (std::uint64_t s = begin; s < end; ++s) {
        classify(kernel, random_permutation(n, rng), chunks[c]);
      }
    });
  }

  ScanSummary summary;
  for (auto& c : chunks) {
    summary.scanned += c.scanned;
    summary.symmetric += c.symmetric;
    summary.involutive += c.involutive;
    summary.noninvolutive_valid += c.noninvolutive_valid;
    summary.noninvolutive.insert(summary.noninvolutive.end(),
                                 std::make_move_iterator(c.noninvolutive.begin()),
                                 std::make_move_iterator(c.noninvolutive.end()));
  }
  std::sort(summary.noninvolutive.begin(), summary.noninvolutive.end());
  summary.noninvolutive.erase(
      std::unique(summary.noninvolutive.begin(), summary.noninvolutive.end()),
      summary.noninvolutive.end());
  return summary;
}

}  // namespace permpow
