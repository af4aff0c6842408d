// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ufest/linalg.hpp"
#include "ufest/rng.hpp"

namespace ufest {

/// Signature (lambda1 >= lambda2) labelling an irreducible representation
/// of U(2).
struct IrrepLabel {
  int lambda1;
  int lambda2;

  int dim() const { return lambda1 - lambda2 + 1; }
  IrrepLabel conjugate() const { return {-lambda2, -lambda1}; }
  bool operator==(const IrrepLabel&) const = default;
};

/// pi_lambda(g) = (det g)^{lambda2} Sym^{lambda1-lambda2}(g) in the
/// multinomially-normalized monomial basis. Negative determinant powers use
/// conj(det g)^{|lambda2|}, which is valid on U(2) only.
Mat irrepU2(const IrrepLabel& label, const Mat& g);

Complex character(const IrrepLabel& label, const Mat& g);

/// Isometry locating one copy of pi_lambda inside g^{(x)m} (x) gbar^{(x)mbar}.
struct Intertwiner {
  Mat map;  // ambient-dim x dim(V_lambda), map^* map = I
  IrrepLabel label;
  int m;
  int mbar;
};

/// Numerically solves the joint equivariance system
/// rho(g_k) T = T pi_lambda(g_k) over Haar samples g_k, where
/// rho(g) = g^{(x)m} (x) gbar^{(x)mbar} on (C^2)^{(x)(m+mbar)}.
Intertwiner solveIntertwiner(const IrrepLabel& label, int m, int mbar,
                             RngStream& rng);

/// Isometry from the (k+1)-dim symmetric space into (C^2)^{(x)k};
/// column j is the normalized sum of basis strings with j ones.
Mat symmetrizerIsometry(int k);

}  // namespace ufest
