#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permpow/matrix.hpp"

namespace permpow {

/// A bijection of {0, ..., N-1}, stored by images: p(i) = images()[i].
///
/// The matrix view follows the row convention M(p)(i, p(i)) = 1, so that
/// (M(p) v)_i = v_{p(i)}. With this convention M(p) M(q) = M(q o p) and
/// M(p^-1) = M(p)^T.
class Permutation {
 public:
  Permutation() = default;

  /// Throws IndexOutOfRange or RepeatedIndex when `images` is not a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  /// Cycle notation over 0-based indices, e.g. "(0 11)(1 9)(2 5)".
  /// Whitespace and commas inside a cycle separate entries. Unlisted indices
  /// are fixed. Throws ParseError, IndexOutOfRange or RepeatedIndex.
  static Permutation from_cycles(std::string_view text, std::size_t n);

  /// Word form "w:4,10,16,..." listing p(0), p(1), ... (0-based).
  static Permutation from_word(std::string_view text);

  /// Dispatches on a leading "w:" to from_word, otherwise from_cycles.
  /// For word form `n` must match the word length.
  static Permutation parse(std::string_view text, std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  std::span<const std::size_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  /// Least common multiple of the cycle lengths.
  BigInt order() const;
  /// p o p = id. The identity counts.
  bool is_involution() const;
  bool is_identity() const;
  Permutation power(long long exponent) const;

  /// Nontrivial cycles, each starting at its smallest element, ordered by
  /// that element.
  std::vector<std::vector<std::size_t>> cycles() const;

  /// Canonical cycle notation; "()" for the identity.
  std::string to_cycle_string() const;
  /// "w:" followed by comma-separated images.
  std::string to_word_string() const;

  IntegerMatrix matrix() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (a o b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);

/// Number of involutions (identity included) on n points.
BigInt involution_count(std::size_t n);

}  // namespace permpow
