#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

namespace cgt {

// Largest singular value of a row-major dim x dim array (need not be
// invertible). Relative error <= 1e-9; see matrix.cpp for the contract.
double operator_norm(int dim, std::span<const double> row_major);

// An invertible real matrix with its inverse and operator norms cached at
// construction. Construction enforces: finite entries, invertibility,
// condition number ||A|| * ||A^{-1}|| <= 1e12, and A * A^{-1} = I within
// 1e-9 entrywise.
class SquareMatrix {
public:
  SquareMatrix(int dim, std::vector<double> row_major);
  static SquareMatrix identity(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[i * dim_ + j]; }
  std::span<const double> entries() const { return a_; }
  std::span<const double> inverse_entries() const { return inv_; }

  // Exact cache swap: the inverse reuses the stored entries, so norms (and
  // anything built from them) agree bit-for-bit in both directions.
  SquareMatrix inverse() const;

  double norm() const { return norm_; }
  double inverse_norm() const { return inv_norm_; }

  std::string str() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b);

private:
  struct FromCaches {};
  SquareMatrix(FromCaches, int dim, std::vector<double> a, std::vector<double> inv,
               double norm, double inv_norm);

  int dim_;
  std::vector<double> a_;
  std::vector<double> inv_;
  double norm_ = 0.0;
  double inv_norm_ = 0.0;
};

double operator_norm(const SquareMatrix& m);

// Random matrix with singular values in [0.6, 1.8]: a rotation, a diagonal
// stretch, another rotation. Well-conditioned by construction.
SquareMatrix random_well_conditioned(std::mt19937_64& rng, int dim);

}  // namespace cgt
