// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "ufest/linalg.hpp"
#include "ufest/rng.hpp"

namespace ufest {

/// Monte-Carlo estimate of a complex mean. stderr is the larger of the
/// per-component standard errors.
struct McEstimate {
  Complex mean{};
  double stderr_{};
  long samples{};
};

/// Exact-Haar sample from U(d): Ginibre matrix, QR, per-column phase fix.
Mat sampleHaar(int d, RngStream& rng);

/// Sample mean of f over n independent Haar draws.
McEstimate mcIntegrate(const std::function<Complex(const Mat&)>& f, int d,
                       long n, const RngStream& rng);

/// Moment G(alpha, d) of |g_11|^2 under Haar measure; closed form
/// alpha! (d-1)! / (alpha+d-1)!, validated against the MC oracle in tests.
double momentG(int alpha, int d);

}  // namespace ufest
