// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/linalg.hpp"

#include <Eigen/SVD>
#include <vector>

namespace ufest {

void checkDimCap(Index rows, Index cols, Index cap) {
  if (rows > cap || cols > cap) {
    throw DimCapError("matrix dimension " + std::to_string(std::max(rows, cols)) +
                      " exceeds cap " + std::to_string(cap));
  }
}

Mat tensor(const Mat& a, const Mat& b, Index cap) {
  checkDimCap(a.rows() * b.rows(), a.cols() * b.cols(), cap);
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat directSum(const Mat& a, const Mat& b, Index cap) {
  checkDimCap(a.rows() + b.rows(), a.cols() + b.cols(), cap);
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

SvdFactors svd(const Mat& a) {
  Eigen::BDCSVD<Mat> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("SVD did not converge");
  }
  SvdFactors f;
  f.left = solver.matrixU();
  f.singulars = solver.singularValues();
  f.right = solver.matrixV().adjoint();  // A = U D V with V carrying the adjoint
  return f;
}

double traceNorm(const Mat& a) {
  Eigen::BDCSVD<Mat> solver(a);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("SVD did not converge while computing trace norm");
  }
  return solver.singularValues().sum();
}

Mat partialTranspose(const Mat& x, Index dimV, Index dimW, Factor which) {
  if (x.rows() != x.cols() || x.rows() != dimV * dimW) {
    throw std::invalid_argument("partialTranspose: side must equal dimV*dimW");
  }
  Mat out(x.rows(), x.cols());
  for (Index i = 0; i < dimV; ++i) {
    for (Index j = 0; j < dimV; ++j) {
      const Mat blk = x.block(i * dimW, j * dimW, dimW, dimW);
      if (which == Factor::Second) {
        out.block(i * dimW, j * dimW, dimW, dimW) = blk.transpose();
      } else {
        out.block(j * dimW, i * dimW, dimW, dimW) = blk;
      }
    }
  }
  return out;
}

Mat permutationMatrix(std::span<const Index> perm) {
  const Index n = static_cast<Index>(perm.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (Index k = 0; k < n; ++k) {
    if (perm[k] < 0 || perm[k] >= n || seen[static_cast<size_t>(perm[k])]) {
      throw std::invalid_argument("permutationMatrix: map is not a bijection");
    }
    seen[static_cast<size_t>(perm[k])] = true;
  }
  Mat out = Mat::Zero(n, n);
  for (Index k = 0; k < n; ++k) out(perm[k], k) = 1.0;
  return out;
}

}  // namespace ufest
