#include "permpow/linalg.hpp"

#include <utility>

namespace permpow::linalg {

RrefResult rref(const RationalMatrix& m) {
  RrefResult out{m, {}, 0};
  RationalMatrix& r = out.reduced;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && r(sel, c) == 0) ++sel;
    if (sel == rows) continue;

    if (sel != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(sel, j), r(pivot_row, j));
    }
    const BigRational inv = 1 / r(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) r(pivot_row, j) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || r(i, c) == 0) continue;
      const BigRational factor = r(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (r(pivot_row, j) != 0) r(i, j) -= factor * r(pivot_row, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }
std::size_t rank(const IntegerMatrix& m) { return rref(to_rational(m)).rank; }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const RrefResult red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;

  RationalMatrix basis(cols, cols - red.rank);
  std::size_t out_col = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out_col) = 1;
    for (std::size_t i = 0; i < red.rank; ++i) {
      basis(red.pivot_columns[i], out_col) = -red.reduced(i, free);
    }
    ++out_col;
  }
  return basis;
}

RangeKernelSplit range_kernel_split(const RationalMatrix& a) {
  if (!a.is_symmetric()) {
    throw Error(Errc::NotSymmetric, "range/kernel split needs a symmetric matrix");
  }
  const RrefResult red = rref(a);
  RangeKernelSplit out;
  out.rank = red.rank;
  out.range_basis = RationalMatrix(a.rows(), red.rank);
  for (std::size_t k = 0; k < red.rank; ++k) {
    const std::size_t c = red.pivot_columns[k];
    for (std::size_t r = 0; r < a.rows(); ++r) out.range_basis(r, k) = a(r, c);
  }
  out.kernel_basis = kernel_basis(a);
  return out;
}

bool is_invertible(const RationalMatrix& a) {
  return a.is_square() && rank(a) == a.rows();
}

bool is_invertible(const IntegerMatrix& a) { return is_invertible(to_rational(a)); }

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "hcat needs equal row counts");
  }
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

bool in_column_space(const RationalMatrix& a, const RationalMatrix& v) {
  return rank(hcat(a, v)) == rank(a);
}

}  // namespace permpow::linalg
