#include "permpow/matrix.hpp"

namespace permpow {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Empty: return "Empty";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::RepeatedIndex: return "RepeatedIndex";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::NotEquitable: return "NotEquitable";
    case Errc::QuotientNotSymmetric: return "QuotientNotSymmetric";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotDivisibleBy4: return "NotDivisibleBy4";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    }
    for (long long v : row) data_.emplace_back(v);
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

template <typename T>
bool Matrix<T>::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

template <typename T>
bool Matrix<T>::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

template <typename T>
Matrix<T> Matrix<T>::column(std::size_t c) const {
  Matrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

template class Matrix<BigInt>;
template class Matrix<BigRational>;

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = BigRational(m(r, c));
  }
  return out;
}

IntegerMatrix kron_identity(std::size_t k, const IntegerMatrix& m) {
  IntegerMatrix out(k * m.rows(), k * m.cols());
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out(b * m.rows() + r, b * m.cols() + c) = m(r, c);
      }
    }
  }
  return out;
}

}  // namespace permpow
