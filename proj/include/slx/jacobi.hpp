#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace slx {

/// Dense square matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  double trace() const;
  /// Largest |A(i,j) - A(j,i)|.
  double asymmetry() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Eigensystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j is the eigenvector of values[j]
};

/// Cyclic Jacobi rotations until the off-diagonal norm is negligible. The
/// input is symmetrized as (A + A^T)/2.
Eigensystem jacobi_eigensystem(const DenseMatrix& a, int max_sweeps = 100);

/// max_j ||A x_j - lambda_j x_j||.
double eigen_residual(const DenseMatrix& a, const Eigensystem& es);

}  // namespace slx
