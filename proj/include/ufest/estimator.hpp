// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ufest/circuit.hpp"
#include "ufest/embed.hpp"
#include "ufest/functions.hpp"
#include "ufest/haar.hpp"
#include "ufest/rng.hpp"

namespace ufest {

/// An SVD-sampling estimation plan: estimate f(g) = Tr[A * directSum(g)] by
/// drawing a singular coordinate with probability sigma_i / ||A||_1 and
/// running one generalized Hadamard test.
struct EstimationPlan {
  Mat a;
  SvdFactors factors;
  int m;
  int d;
  Index dimE;
  std::vector<double> probs;  // sigma_i / ||A||_1, zero singulars dropped
  double traceNorm;
  int queriesPerShot;  // 2m
  EmbeddingMap emb;
  // Per-coordinate states: phiTilde_i = v_i, psiTilde_i = u_i on the
  // direct-sum space, plus their embedded ABCDE copies for the circuit.
  std::vector<Vec> phiTilde;
  std::vector<Vec> psiTilde;
  std::vector<Vec> phiEmbedded;
  std::vector<Vec> psiEmbedded;

  bool isZero() const { return probs.empty(); }
};

struct ShotOutcome {
  Index coordinate;  // -1 when driven directly through estInner
  int b;
  int measurement;
  Complex value;  // ||A||_1 * fhat(M, b) for plan shots, raw fhat otherwise
  int queries;
};

struct PacResult {
  Complex estimate;
  long shots;
  long totalQueries;
  double epsilon;
  double delta;
};

/// Raw estimator value table of the generalized Hadamard estimator.
Complex fhatTable(int measurement, int b);

/// Maximum modulus of a raw table value (|4 - (1+i)| = sqrt(10)).
inline constexpr double kFhatMaxModulus = 3.1622776601683795;

/// One unbiased sample of <phiTilde| directSum(g) |psiTilde>: embeds both
/// states, draws b uniformly, simulates the circuit once and maps (M, b)
/// through the value table. Costs 2m controlled-g queries.
ShotOutcome estInner(const Vec& phiTilde, const Vec& psiTilde, int m,
                     Index dimE, const Mat& g, RngStream& rng);

EstimationPlan buildPlan(const Mat& a, int m, int d, Index dimE);
EstimationPlan buildPlan(const FunctionSpec& spec);

/// One shot of the plan: samples a coordinate by inverse CDF over the
/// descending singular values, runs estInner, scales by the trace norm.
ShotOutcome shot(const EstimationPlan& plan, const Mat& g, RngStream& rng);

/// Exact expectation of a shot by enumerating (i, b, M) with the exact
/// outcome probabilities; equals Tr[A * directSum(g)].
Complex conditionalExpectation(const EstimationPlan& plan, const Mat& g);

/// Shots needed for the (epsilon, delta) PAC criterion with the conservative
/// Hoeffding constant C0 = sqrt(10) * ||A||_1.
long pacShots(double epsilon, double delta, double traceNorm);

inline constexpr long kDefaultShotCap = 10'000'000;

PacResult estimatePac(const EstimationPlan& plan, const Mat& g, double epsilon,
                      double delta, RngStream& rng,
                      long shotCap = kDefaultShotCap);

/// Haar-averaged squared bias of the plan against the reference function:
/// E_G |conditionalExpectation - f(g)|^2.
McEstimate biasGAverage(const EstimationPlan& plan, const FunctionSpec& reference,
                        long n, const RngStream& rng);

/// Thrown when a PAC request would exceed the shot cap.
struct ShotBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ufest
