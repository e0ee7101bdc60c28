#include "permpow/permutation.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace permpow {

namespace {

bool is_separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0 || c == ',';
}

std::size_t parse_index(std::string_view text, std::size_t& pos) {
  const std::size_t begin = pos;
  while (pos < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
    ++pos;
  }
  if (begin == pos) {
    throw Error(Errc::ParseError, "expected an index at offset " +
                                      std::to_string(begin) + " in \"" +
                                      std::string(text) + "\"");
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + pos, value);
  if (ec != std::errc{}) {
    throw Error(Errc::ParseError, "index too large in \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const std::size_t v = images_[i];
    if (v >= images_.size()) {
      throw Error(Errc::IndexOutOfRange,
                  "image " + std::to_string(v) + " of " + std::to_string(i) +
                      " outside 0.." + std::to_string(images_.size() - 1));
    }
    if (hit[v]) {
      throw Error(Errc::RepeatedIndex, "image " + std::to_string(v) + " repeated");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<bool> used(n, false);

  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw Error(Errc::ParseError, "expected '(' at offset " +
                                        std::to_string(pos) + " in \"" +
                                        std::string(text) + "\"");
    }
    ++pos;
    std::vector<std::size_t> cycle;
    skip();
    while (pos < text.size() && text[pos] != ')') {
      const std::size_t v = parse_index(text, pos);
      if (v >= n) {
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(v) + " not below " + std::to_string(n));
      }
      if (used[v]) {
        throw Error(Errc::RepeatedIndex, "index " + std::to_string(v) + " repeated");
      }
      used[v] = true;
      cycle.push_back(v);
      skip();
    }
    if (pos >= text.size()) {
      throw Error(Errc::ParseError, "unterminated cycle in \"" + std::string(text) + "\"");
    }
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_word(std::string_view text) {
  if (text.substr(0, 2) != "w:") {
    throw Error(Errc::ParseError, "word form must start with \"w:\"");
  }
  text.remove_prefix(2);
  std::vector<std::size_t> images;
  std::size_t pos = 0;
  while (pos < text.size() && is_separator(text[pos])) ++pos;
  while (pos < text.size()) {
    images.push_back(parse_index(text, pos));
    while (pos < text.size() && is_separator(text[pos])) ++pos;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  std::size_t start = 0;
  while (start < text.size() && is_separator(text[start])) ++start;
  if (text.substr(start, 2) == "w:") {
    Permutation p = from_word(text.substr(start));
    if (p.size() != n) {
      throw Error(Errc::DimensionMismatch, "word lists " + std::to_string(p.size()) +
                                               " images, expected " + std::to_string(n));
    }
    return p;
  }
  return from_cycles(text, n);
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

BigInt Permutation::order() const {
  BigInt result = 1;
  for (const auto& cycle : cycles()) {
    const BigInt len = cycle.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::power(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(size());
  while (e != 0) {
    if ((e & 1ULL) != 0) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i != 0) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

std::string Permutation::to_word_string() const {
  std::ostringstream os;
  os << "w:";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i != 0) os << ',';
    os << images_[i];
  }
  return os.str();
}

IntegerMatrix Permutation::matrix() const {
  IntegerMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, images_[i]) = 1;
  return m;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::DimensionMismatch, "composing permutations of different degree");
  }
  std::vector<std::size_t> images(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) images[x] = a(b(x));
  return Permutation(std::move(images));
}

BigInt involution_count(std::size_t n) {
  // I(n) = I(n-1) + (n-1) I(n-2)
  BigInt prev = 1;
  BigInt cur = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    BigInt next = cur + BigInt(m - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace permpow
