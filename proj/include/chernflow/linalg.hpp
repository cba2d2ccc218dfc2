#ifndef CHERNFLOW_LINALG_HPP
#define CHERNFLOW_LINALG_HPP

#include <array>

#include "chernflow/util.hpp"

namespace chernflow {

/// Frame dimension cap for the stack-allocated sitewise matrix work below.
inline constexpr int kMaxDim = 8;

/// Dense n x n complex matrix in a fixed-capacity buffer, row major.
/// Entry (i,j) of a metric holds g_{i jbar}; of an inverse holds g^{ibar j}.
struct SmallMat {
  int n = 0;
  std::array<cplx, kMaxDim * kMaxDim> a{};

  cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

  static SmallMat identity(int n);
  static SmallMat zero(int n);
};

SmallMat matmul(const SmallMat& x, const SmallMat& y);
SmallMat adjoint(const SmallMat& x);

/// Largest |entry| of x - y.
double max_abs_diff(const SmallMat& x, const SmallMat& y);

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Eigenvalues ascending. Vectors returned as columns of `vecs`
/// (may be null when only values are needed).
void hermitian_eigen(const SmallMat& h, std::array<double, kMaxDim>& vals, SmallMat* vecs);

double hermitian_min_eigenvalue(const SmallMat& h);

/// Hermitian inverse through the eigendecomposition. Throws
/// SingularMetricError when min eigenvalue <= 0 or cond > cond_limit.
SmallMat hermitian_inverse(const SmallMat& h, double cond_limit = 1e12);

/// Cholesky positive-definiteness probe (no factor returned).
bool cholesky_pd(const SmallMat& h);

}  // namespace chernflow

#endif
