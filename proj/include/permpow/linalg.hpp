#pragma once

#include <cstddef>
#include <vector>

#include "permpow/matrix.hpp"

namespace permpow::linalg {

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination in exact arithmetic.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const IntegerMatrix& m);

/// Range/kernel bases of a symmetric matrix, stored column-wise.
///
/// For symmetric A the column space and the kernel are orthogonal
/// complements, so any exact basis of range(A) may stand in for the
/// orthonormal eigenvector block of the nonzero eigenvalues: a linear map X
/// sends range(A) into ker(A) iff B^T X B = 0 for one (hence every) basis B
/// of range(A).
struct RangeKernelSplit {
  RationalMatrix range_basis;   // n x rank, the pivot columns of A
  RationalMatrix kernel_basis;  // n x (n - rank)
  std::size_t rank = 0;
};

/// Throws NotSymmetric for non-symmetric input.
RangeKernelSplit range_kernel_split(const RationalMatrix& a);

/// Column basis of ker(m), one vector per free column of rref(m).
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Square with full rank. Non-square input is simply not invertible.
bool is_invertible(const RationalMatrix& a);
bool is_invertible(const IntegerMatrix& a);

/// True iff a x = v has a solution (v is a single column).
bool in_column_space(const RationalMatrix& a, const RationalMatrix& v);

/// Horizontal concatenation [a | b].
RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace permpow::linalg
