#pragma once

#include "blp/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace blp {

/// Dense row-major rational matrix. Zero-row and zero-column shapes are
/// first-class; several fixtures have n = 0 or k = 0 blocks.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  /// Builds from explicit rows; throws std::invalid_argument on ragged input.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool operator==(const RatMatrix&) const = default;

  RatMatrix transposed() const;
  /// Submatrix made of the given columns, in the given order.
  RatMatrix select_columns(const std::vector<std::size_t>& indices) const;
  RatVector row(std::size_t i) const;
  RatVector column(std::size_t j) const;
  const std::vector<Rat>& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

RatVector mat_vec(const RatMatrix& m, const RatVector& v);
/// v^T M as a vector of length M.cols().
RatVector vec_mat(const RatVector& v, const RatMatrix& m);
Rat dot(const RatVector& a, const RatVector& b);

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. det of the 0x0 matrix is 1. Throws std::invalid_argument on
/// non-square input.
Rat det(const RatMatrix& m);

/// Exact solve of Mx = b for square M; nullopt when det(M) = 0.
std::optional<RatVector> solve_square(const RatMatrix& m, const RatVector& b);

/// Column-wise solve of MX = rhs for square M; nullopt when singular.
std::optional<RatMatrix> solve_square_multi(const RatMatrix& m, const RatMatrix& rhs);

/// Maximal absolute value of any entry; 0 for empty data.
Rat max_abs(const RatMatrix& m);
Rat max_abs(const RatVector& v);

/// m! * max_b * max_A^(m-1), the coordinate bound for vertices of
/// {Ax = b, x >= 0} with integer data. m = 0 returns max_b.
Rat vertex_bound(std::size_t m, const Rat& max_b, const Rat& max_A);

}  // namespace blp
