#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

namespace r2r::oracle {

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm falls below
  /// tolerance * ||A||_F.
  double tolerance = 1e-13;
  int max_sweeps = 100;
  /// Rejection threshold for max |A - A^T|.
  double symmetry_tolerance = 1e-12;
  bool compute_vectors = false;
};

template <typename Scalar>
struct JacobiResult {
  /// Sorted descending.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  /// Column i pairs with values(i); empty unless requested.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
  int sweeps = 0;
  Scalar off_diagonal = 0;
};

/// Cyclic Jacobi eigen-decomposition of a real symmetric matrix. Sweeps
/// visit (p, q) pairs in row-major order.
template <typename Derived>
JacobiResult<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                    const JacobiOptions& opts = {}) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using std::abs;
  using std::sqrt;

  if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix is not square");
  if (input.size() > 0 && (input - input.transpose()).cwiseAbs().maxCoeff() > Scalar(opts.symmetry_tolerance))
    throw std::invalid_argument("jacobi_eigen: matrix is not symmetric");

  const Eigen::Index dim = input.rows();
  Matrix a = input;
  Matrix v;
  if (opts.compute_vectors) v = Matrix::Identity(dim, dim);

  auto off_norm = [&] {
    Scalar s = 0;
    for (Eigen::Index j = 0; j < dim; ++j)
      for (Eigen::Index i = 0; i < dim; ++i)
        if (i != j) s += a(i, j) * a(i, j);
    return sqrt(s);
  };

  const Scalar target = Scalar(opts.tolerance) * std::max(a.norm(), Scalar(1e-300));
  JacobiResult<Scalar> result;
  Scalar off = off_norm();
  while (off > target && result.sweeps < opts.max_sweeps) {
    ++result.sweeps;
    // Rotations whose pivot is already negligible next to the current
    // off-diagonal mass are skipped.
    const Scalar skip = off * Scalar(1e-3) / static_cast<Scalar>(dim * dim);
    for (Eigen::Index p = 0; p + 1 < dim; ++p)
      for (Eigen::Index q = p + 1; q < dim; ++q) {
        if (abs(a(p, q)) <= skip) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = 0;
        if (opts.compute_vectors) v.applyOnTheRight(p, q, rot);
      }
    off = off_norm();
  }
  if (off > target) throw std::runtime_error("jacobi_eigen: no convergence within max_sweeps");
  result.off_diagonal = off;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });
  result.values.resize(dim);
  if (opts.compute_vectors) result.vectors.resize(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    result.values(k) = a(order[k], order[k]);
    if (opts.compute_vectors) result.vectors.col(k) = v.col(order[k]);
  }
  return result;
}

}  // namespace r2r::oracle
