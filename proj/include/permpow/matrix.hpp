#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permpow/error.hpp"

namespace permpow {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over an exact ring. Only instantiated for BigInt
/// and BigRational; cpp_rational keeps every entry in lowest terms with a
/// positive denominator after each operation.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-list construction; throws DimensionMismatch on ragged input.
  Matrix(std::initializer_list<std::initializer_list<long long>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  /// Column `c` as a (rows x 1) matrix.
  Matrix column(std::size_t c) const;

  /// Matrix product. Zero entries of the left operand are skipped, so the
  /// sparse adjacency products used throughout stay cheap.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(l, j);
          if (y != 0) out(i, j) += x * y;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r == 0 ? "[[" : " [");
      for (std::size_t c = 0; c < m.cols_; ++c) {
        if (c != 0) os << ", ";
        os << m(r, c);
      }
      os << (r + 1 == m.rows_ ? "]]" : "]\n");
    }
    if (m.rows_ == 0) os << "[]";
    return os;
  }

 private:
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(Errc::DimensionMismatch, "matrix shapes differ");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<BigRational>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// I_k (x) m, the block-diagonal matrix with k copies of m.
IntegerMatrix kron_identity(std::size_t k, const IntegerMatrix& m);

extern template class Matrix<BigInt>;
extern template class Matrix<BigRational>;

}  // namespace permpow
