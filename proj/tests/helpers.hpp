// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ufest/linalg.hpp"
#include "ufest/rng.hpp"

namespace ufest::test {

inline Vec randomState(Index dim, RngStream& rng) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i)
    v(i) = Complex(rng.gaussian(), rng.gaussian());
  return v / v.norm();
}

inline Mat randomMatrix(Index rows, Index cols, RngStream& rng) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return m;
}

/// n choose k as an exact small integer.
inline long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

}  // namespace ufest::test
