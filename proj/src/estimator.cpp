// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/estimator.hpp"

#include <algorithm>
#include <cmath>

namespace ufest {

namespace {

Complex runShot(const Vec& phiFull, const Vec& psiFull, int m, int d,
                Index dimE, const Mat& g, RngStream& rng, int& bOut,
                int& measOut, int& queriesOut) {
  const int b = rng.uniform() < 0.5 ? 0 : 1;
  GHadamardInstance inst{m, d, dimE, phiFull, psiFull, b};
  const OutcomeDistribution dist = simulateGHadamard(inst, g);
  const int meas = rng.uniform() < dist.p0 ? 0 : 1;
  bOut = b;
  measOut = meas;
  queriesOut = dist.controlledGApplications;
  return fhatTable(meas, b);
}

}  // namespace

Complex fhatTable(int measurement, int b) {
  if (measurement == 1) return {-1.0, -1.0};
  return b == 0 ? Complex{3.0, -1.0} : Complex{-1.0, 3.0};
}

ShotOutcome estInner(const Vec& phiTilde, const Vec& psiTilde, int m,
                     Index dimE, const Mat& g, RngStream& rng) {
  const int d = static_cast<int>(g.rows());
  const EmbeddingMap emb = buildEmbedding(m, d, dimE);
  ShotOutcome out;
  out.coordinate = -1;
  out.value = runShot(emb.embed(phiTilde), emb.embed(psiTilde), m, d, dimE, g,
                      rng, out.b, out.measurement, out.queries);
  return out;
}

EstimationPlan buildPlan(const Mat& a, int m, int d, Index dimE) {
  if (a.rows() != a.cols() || a.rows() != directSumDim(m, d, dimE))
    throw std::invalid_argument("buildPlan: a has the wrong dimension");
  EstimationPlan plan;
  plan.a = a;
  plan.factors = svd(a);
  plan.m = m;
  plan.d = d;
  plan.dimE = dimE;
  plan.traceNorm = plan.factors.singulars.sum();
  plan.queriesPerShot = 2 * m;
  plan.emb = buildEmbedding(m, d, dimE);

  if (plan.traceNorm < 1e-15) {
    plan.traceNorm = 0.0;
    return plan;  // constant-zero plan, no coordinates
  }
  const double sigmaMax = plan.factors.singulars(0);
  for (Index i = 0; i < plan.factors.singulars.size(); ++i) {
    const double sigma = plan.factors.singulars(i);
    if (sigma <= 1e-14 * sigmaMax) break;  // singulars are descending
    plan.probs.push_back(sigma / plan.traceNorm);
    // A = sum_i sigma_i |u_i><v_i| with right = V-dagger.
    Vec v = plan.factors.right.row(i).adjoint();
    Vec u = plan.factors.left.col(i);
    plan.phiEmbedded.push_back(plan.emb.embed(v));
    plan.psiEmbedded.push_back(plan.emb.embed(u));
    plan.phiTilde.push_back(std::move(v));
    plan.psiTilde.push_back(std::move(u));
  }
  // Renormalize away the truncated tail so probs sum to 1 exactly.
  double total = 0.0;
  for (double p : plan.probs) total += p;
  for (double& p : plan.probs) p /= total;
  return plan;
}

EstimationPlan buildPlan(const FunctionSpec& spec) {
  const AForm form = buildA(spec);
  return buildPlan(form.a, form.m, spec.d, form.dimE);
}

ShotOutcome shot(const EstimationPlan& plan, const Mat& g, RngStream& rng) {
  ShotOutcome out;
  if (plan.isZero()) {
    out.coordinate = -1;
    out.b = 0;
    out.measurement = 0;
    out.value = 0.0;
    out.queries = 0;
    return out;
  }
  const double u = rng.uniform();
  double cdf = 0.0;
  size_t pick = plan.probs.size() - 1;
  for (size_t i = 0; i < plan.probs.size(); ++i) {
    cdf += plan.probs[i];
    if (u < cdf) {
      pick = i;
      break;
    }
  }
  out.coordinate = static_cast<Index>(pick);
  out.value = plan.traceNorm *
              runShot(plan.phiEmbedded[pick], plan.psiEmbedded[pick], plan.m,
                      plan.d, plan.dimE, g, rng, out.b, out.measurement,
                      out.queries);
  return out;
}

Complex conditionalExpectation(const EstimationPlan& plan, const Mat& g) {
  if (plan.isZero()) return 0.0;
  Complex acc = 0.0;
  for (size_t i = 0; i < plan.probs.size(); ++i) {
    const Vec w =
        applyDirectSum(plan.m, plan.d, plan.dimE, g, plan.psiTilde[i]);
    const Complex z = plan.phiTilde[i].dot(w);
    // Average the value table over b uniform and M ~ Bernoulli(p0(b)).
    Complex inner = 0.0;
    for (int b = 0; b < 2; ++b) {
      const double p0 = (1.0 + (b == 1 ? z.imag() : z.real())) / 2.0;
      inner += 0.5 * (p0 * fhatTable(0, b) + (1.0 - p0) * fhatTable(1, b));
    }
    acc += plan.probs[i] * plan.traceNorm * inner;
  }
  return acc;
}

long pacShots(double epsilon, double delta, double traceNorm) {
  if (epsilon <= 0.0 || epsilon >= 1.0 || delta <= 0.0 || delta >= 1.0)
    throw std::invalid_argument("pacShots: epsilon, delta must lie in (0,1)");
  if (traceNorm == 0.0) return 0;
  const double c0sq = 10.0 * traceNorm * traceNorm;
  const double n = std::ceil(8.0 * c0sq * std::log(4.0 / delta) /
                             (epsilon * epsilon));
  if (n > 9e18) throw ShotBudgetError("pacShots: shot count overflows");
  return static_cast<long>(n);
}

PacResult estimatePac(const EstimationPlan& plan, const Mat& g, double epsilon,
                      double delta, RngStream& rng, long shotCap) {
  PacResult res;
  res.epsilon = epsilon;
  res.delta = delta;
  if (plan.isZero()) {
    res.estimate = 0.0;
    res.shots = 0;
    res.totalQueries = 0;
    return res;
  }
  const long shots = pacShots(epsilon, delta, plan.traceNorm);
  if (shots > shotCap)
    throw ShotBudgetError("estimatePac: " + std::to_string(shots) +
                          " shots exceed the cap of " +
                          std::to_string(shotCap));
  constexpr long kChunk = 4096;
  Complex sum = 0.0;
  for (long start = 0; start < shots; start += kChunk) {
    RngStream sub = rng.split(static_cast<uint64_t>(start / kChunk));
    const long stop = std::min(shots, start + kChunk);
    for (long s = start; s < stop; ++s) sum += shot(plan, g, sub).value;
  }
  res.estimate = sum / static_cast<double>(shots);
  res.shots = shots;
  res.totalQueries = shots * plan.queriesPerShot;
  return res;
}

McEstimate biasGAverage(const EstimationPlan& plan,
                        const FunctionSpec& reference, long n,
                        const RngStream& rng) {
  return mcIntegrate(
      [&](const Mat& g) -> Complex {
        const Complex diff = conditionalExpectation(plan, g) - eval(reference, g);
        return std::norm(diff);
      },
      plan.d, n, rng);
}

}  // namespace ufest
