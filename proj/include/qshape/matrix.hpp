#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qshape {

// Dense real square matrix, row-major. Ladder representations stay at N <= 64,
// so there is no sparse storage. Products treat exact zeros as structural
// (0 * NaN = 0), which lets invalid diagonal entries stay confined to the rows
// and columns they actually touch.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t size() const { return n_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, double s) { return lhs *= s; }
  friend Matrix operator*(double s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// [A, B] = AB - BA
Matrix commutator(const Matrix& a, const Matrix& b);

// max |a_ij - b_ij| over lo <= i, j < hi; NaN if any compared entry is NaN.
double max_abs_diff(const Matrix& a, const Matrix& b, std::size_t lo, std::size_t hi);

}  // namespace qshape
