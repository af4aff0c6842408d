// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ufest/linalg.hpp"

namespace ufest {

/// Register bookkeeping for the generalized Hadamard test: one control
/// qubit, then A_n (qubit) / B_n (qudit) pairs, then C_n / D_n pairs, then E.
struct RegisterLayout {
  int m;
  int d;
  Index dimE;

  Index abcdeDim() const;  // (2d)^{2m} * dimE
  Index totalDim() const;  // 2 * abcdeDim()

  /// Mixed radix of the ABCDE space: [2, d] * m, [2, d] * m, [dimE].
  std::vector<Index> abcdeRadices() const;
};

/// One configured run of the test: tensor power m, qudit dimension d,
/// auxiliary dimension dimE, prepared states phi/psi on ABCDE, and the
/// real/imaginary selector bit b.
struct GHadamardInstance {
  int m;
  int d;
  Index dimE;
  Vec phi;
  Vec psi;
  int b;

  RegisterLayout layout() const { return {m, d, dimE}; }
  void validate() const;
};

struct OutcomeDistribution {
  double p0;
  double p1;
  /// Instrumentation: how many controlled-g applications the run used.
  int controlledGApplications;
};

/// Exact statevector evolution of the circuit: H, C-U_phi, prod C_n(g), X,
/// C-U_psi, prod C'_n(g), S^{-b}, H, measure the control qubit.
OutcomeDistribution simulateGHadamard(const GHadamardInstance& inst,
                                      const Mat& g);

/// Closed formula for the same probability,
/// (1 + Re-or-Im <phi| (I+g*)_AB^m (x) (I+g)_CD^m (x) I_E |psi>) / 2,
/// evaluated by direct matrix-vector products with no circuit.
double pZeroFormula(const GHadamardInstance& inst, const Mat& g);

/// The inner product above (before the Re/Im projection).
Complex overlapFormula(const GHadamardInstance& inst, const Mat& g);

/// Queries to controlled-g consumed by one run: exactly 2m.
int queryCount(const GHadamardInstance& inst);

}  // namespace ufest
