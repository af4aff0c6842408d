// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/haar.hpp"

#include <Eigen/QR>
#include <cmath>
#include <vector>

namespace ufest {

Mat sampleHaar(int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("sampleHaar: d must be >= 1");
  Mat ginibre(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      ginibre(i, j) = Complex(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Mat> qr(ginibre);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Naive QR is not Haar: fix each column's phase by r_jj / |r_jj|.
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

McEstimate mcIntegrate(const std::function<Complex(const Mat&)>& f, int d,
                       long n, const RngStream& rng) {
  if (n < 2) throw std::invalid_argument("mcIntegrate: n must be >= 2");
  // Chunked over split substreams; merged in chunk order, so the result is
  // independent of how the chunks are scheduled.
  constexpr long kChunk = 4096;
  const long chunks = (n + kChunk - 1) / kChunk;
  Complex sum = 0.0;
  double sumSqRe = 0.0, sumSqIm = 0.0;
  for (long c = 0; c < chunks; ++c) {
    RngStream sub = rng.split(static_cast<uint64_t>(c));
    const long lo = c * kChunk;
    const long hi = std::min(n, lo + kChunk);
    for (long k = lo; k < hi; ++k) {
      Mat g = sampleHaar(d, sub);
      Complex v;
      try {
        v = f(g);
      } catch (const std::exception& e) {
        throw NumericalError("mcIntegrate: integrand failed on sample " +
                             std::to_string(k) + " of stream " +
                             std::to_string(sub.stream()) + ": " + e.what());
      }
      sum += v;
      sumSqRe += v.real() * v.real();
      sumSqIm += v.imag() * v.imag();
    }
  }
  McEstimate est;
  est.samples = n;
  est.mean = sum / static_cast<double>(n);
  const double nd = static_cast<double>(n);
  const double varRe =
      std::max(0.0, (sumSqRe - nd * est.mean.real() * est.mean.real()) / (nd - 1.0));
  const double varIm =
      std::max(0.0, (sumSqIm - nd * est.mean.imag() * est.mean.imag()) / (nd - 1.0));
  est.stderr_ = std::sqrt(std::max(varRe, varIm) / nd);
  return est;
}

double momentG(int alpha, int d) {
  if (d < 1) throw std::invalid_argument("momentG: d must be >= 1");
  if (alpha < 0) throw std::invalid_argument("momentG: alpha must be >= 0");
  // alpha! (d-1)! / (alpha+d-1)! as a stable running product.
  double value = 1.0;
  for (int k = 1; k <= alpha; ++k) {
    value *= static_cast<double>(k) / static_cast<double>(d - 1 + k);
  }
  return value;
}

}  // namespace ufest
