// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/repr.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "ufest/haar.hpp"

namespace ufest {

namespace {

void requireUnitary2(const Mat& g) {
  if (g.rows() != 2 || g.cols() != 2)
    throw std::invalid_argument("irrepU2: g must be 2x2");
  if ((g.adjoint() * g - Mat::Identity(2, 2)).norm() > 1e-10)
    throw std::invalid_argument("irrepU2: g is not unitary");
}

Mat tensorPower(const Mat& g, int k) {
  Mat out = Mat::Identity(1, 1);
  for (int i = 0; i < k; ++i) out = tensor(out, g);
  return out;
}

double binom(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v *= static_cast<double>(n - k + i) / i;
  return v;
}

}  // namespace

Mat symmetrizerIsometry(int k) {
  const Index amb = Index{1} << k;
  Mat t = Mat::Zero(amb, k + 1);
  for (Index idx = 0; idx < amb; ++idx) {
    int ones = 0;
    for (int bit = 0; bit < k; ++bit) ones += static_cast<int>((idx >> bit) & 1);
    t(idx, ones) = 1.0 / std::sqrt(binom(k, ones));
  }
  return t;
}

Mat irrepU2(const IrrepLabel& label, const Mat& g) {
  if (label.lambda1 < label.lambda2)
    throw std::invalid_argument("irrepU2: label must satisfy lambda1 >= lambda2");
  requireUnitary2(g);
  const int k = label.lambda1 - label.lambda2;
  const Complex det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  Complex detPow = 1.0;
  const int p = std::abs(label.lambda2);
  for (int i = 0; i < p; ++i) detPow *= det;
  if (label.lambda2 < 0) detPow = std::conj(detPow);  // |det g| = 1 on U(2)
  if (k == 0) return detPow * Mat::Identity(1, 1);
  const Mat s = symmetrizerIsometry(k);
  return detPow * (s.adjoint() * tensorPower(g, k) * s);
}

Complex character(const IrrepLabel& label, const Mat& g) {
  return irrepU2(label, g).trace();
}

Intertwiner solveIntertwiner(const IrrepLabel& label, int m, int mbar,
                             RngStream& rng) {
  const Index amb = Index{1} << (m + mbar);
  const Index dimV = label.dim();
  auto rho = [&](const Mat& g) {
    return tensor(tensorPower(g, m), tensorPower(g.conjugate(), mbar));
  };

  // Isotypic-component presence check via the character inner product.
  {
    RngStream probe = rng.split(0);
    constexpr long kProbeSamples = 4000;
    Complex acc = 0.0;
    for (long i = 0; i < kProbeSamples; ++i) {
      Mat g = sampleHaar(2, probe);
      acc += std::conj(character(label, g)) * rho(g).trace();
    }
    if ((acc / static_cast<double>(kProbeSamples)).real() < 0.5) {
      throw std::invalid_argument(
          "solveIntertwiner: label has empty isotypic component in the ambient "
          "tensor power");
    }
  }

  // Stack rho(g_k) T - T pi(g_k) = 0 for 8 independent Haar samples and take
  // the joint null space.
  constexpr int kSamples = 8;
  RngStream solver = rng.split(1);
  Mat system(kSamples * amb * dimV, amb * dimV);
  for (int s = 0; s < kSamples; ++s) {
    Mat g = sampleHaar(2, solver);
    const Mat r = rho(g);
    const Mat piT = irrepU2(label, g).transpose();
    // vec(rho T - T pi) = (I (x) rho - pi^T (x) I) vec(T), column-major vec.
    Mat block = tensor(Mat::Identity(dimV, dimV), r) -
                tensor(piT, Mat::Identity(amb, amb));
    system.middleRows(s * amb * dimV, amb * dimV) = block;
  }
  Eigen::BDCSVD<Mat> dec(system, Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success)
    throw NumericalError("solveIntertwiner: SVD failed");
  const auto& sv = dec.singularValues();
  const double tol = 1e-8 * sv(0);
  Index nullity = 0;
  for (Index i = sv.size() - 1; i >= 0 && sv(i) < tol; --i) ++nullity;
  if (nullity == 0) {
    throw NumericalError(
        "solveIntertwiner: equivariance system has no null space beyond "
        "tolerance");
  }

  // Deterministic pick among equivalent copies: the null-space column whose
  // first nonzero entry (row-major over T) is largest in magnitude.
  const Mat nullBasis = dec.matrixV().rightCols(nullity);
  Index best = 0;
  double bestMag = -1.0;
  Complex bestLead = 1.0;
  for (Index c = 0; c < nullity; ++c) {
    Mat t = Eigen::Map<const Mat>(nullBasis.col(c).data(), amb, dimV);
    Complex lead = 0.0;
    for (Index r = 0; r < amb && lead == 0.0; ++r)
      for (Index cc = 0; cc < dimV; ++cc)
        if (std::abs(t(r, cc)) > 1e-12) {
          lead = t(r, cc);
          break;
        }
    if (std::abs(lead) > bestMag) {
      bestMag = std::abs(lead);
      best = c;
      bestLead = lead;
    }
  }
  Mat t = Eigen::Map<const Mat>(nullBasis.col(best).data(), amb, dimV);
  t *= std::conj(bestLead) / std::abs(bestLead);  // leading entry positive real
  // Schur: T^* T = c I; rescale to an isometry.
  const double c = (t.adjoint() * t).trace().real() / static_cast<double>(dimV);
  if (c < 1e-14)
    throw NumericalError("solveIntertwiner: degenerate null-space column");
  t /= std::sqrt(c);

  Intertwiner out;
  out.map = std::move(t);
  out.label = label;
  out.m = m;
  out.mbar = mbar;
  return out;
}

}  // namespace ufest
