#pragma once

#include <rwls/function_space.hpp>
#include <rwls/knot_vector.hpp>
#include <rwls/types.hpp>

#include <span>

namespace rwls {

/// Dense m x n matrix B with B(i, j) = beta_j(x_i).
Matrix collocation_matrix(const FunctionSpace& space, const RowMatrix& sites);

/// Sparse counterpart of collocation_matrix for large point sets.
SparseRowMatrix collocation_sparse(const FunctionSpace& space, const RowMatrix& sites);

/// Singularity threshold for square collocation minors: |det| counts as zero
/// below kSingularRelative times the product of the rows' max-norms.
inline constexpr double kSingularRelative = 1e-12;

/// Determinant of a square matrix by LU with partial pivoting.
double determinant(const Matrix& square);

/// Whether |det| of the square matrix clears the singularity threshold.
bool is_nonsingular(const Matrix& square, double det);

/// Schoenberg-Whitney nesting test for a univariate space: the sorted
/// sites xi_0 < ... < xi_{n-1} must satisfy t_j < xi_j < t_{j+k}, with
/// equality allowed at a clamped end knot where the function is nonzero.
/// Throws InvalidArgument unless exactly n sites are given.
bool schoenberg_whitney_admissible(const KnotVector& knots, std::span<const double> sites);

}  // namespace rwls
