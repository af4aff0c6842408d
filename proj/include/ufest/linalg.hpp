// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <stdexcept>

namespace ufest {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Thrown when a matrix/state dimension would exceed the desk-scale cap.
struct DimCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a numerical routine fails (SVD non-convergence, norm drift...).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default cap on entries per axis of any constructed operator (2^20).
inline constexpr Index kDefaultDimCap = Index{1} << 20;

void checkDimCap(Index rows, Index cols, Index cap = kDefaultDimCap);

/// Factors of A = left * diag(singulars) * right; both factors unitary,
/// the right factor already carries the adjoint.
struct SvdFactors {
  Mat left;
  Eigen::VectorXd singulars;  // descending, nonnegative
  Mat right;
};

/// Kronecker product a (x) b.
Mat tensor(const Mat& a, const Mat& b, Index cap = kDefaultDimCap);

/// Block-diagonal stacking diag(a, b).
Mat directSum(const Mat& a, const Mat& b, Index cap = kDefaultDimCap);

SvdFactors svd(const Mat& a);

/// Sum of singular values.
double traceNorm(const Mat& a);

enum class Factor { First, Second };

/// Partial transpose of a square matrix on V (x) W with dim V = dimV,
/// dim W = dimW. Factor::Second transposes each dimW x dimW block in place;
/// Factor::First swaps blocks across the grid.
Mat partialTranspose(const Mat& x, Index dimV, Index dimW, Factor which);

/// Matrix P with P e_k = e_{perm[k]}; perm must be a bijection on {0..n-1}.
Mat permutationMatrix(std::span<const Index> perm);

}  // namespace ufest
