// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace ufest {

namespace {

void enumerateRec(std::vector<int>& cells, size_t at, int remaining,
                  int d, std::vector<ExponentPair>& out, size_t cap) {
  if (at == cells.size()) {
    if (remaining != 0) return;
    if (out.size() >= cap)
      throw DimCapError("enumerateMonomials: monomial count above cap");
    ExponentPair p;
    p.d = d;
    const size_t half = cells.size() / 2;
    p.alpha.assign(cells.begin(), cells.begin() + half);
    p.alphaBar.assign(cells.begin() + half, cells.end());
    out.push_back(std::move(p));
    return;
  }
  // Largest count first keeps each degree class in descending lex order.
  for (int v = remaining; v >= 0; --v) {
    cells[at] = v;
    enumerateRec(cells, at + 1, remaining - v, d, out, cap);
  }
  cells[at] = 0;
}

double tailNormSq(const UnivariatePoly& poly, int d, int m) {
  double acc = 0.0;
  for (size_t k = 0; k < poly.coeffs.size(); ++k)
    if (static_cast<int>(k) > m)
      acc += std::norm(poly.coeffs[k]) * momentG(static_cast<int>(k), d);
  return acc;
}

}  // namespace

std::vector<ExponentPair> enumerateMonomials(int d, int m, size_t cap) {
  if (d < 0 || m < 0)
    throw std::invalid_argument("enumerateMonomials: d, m must be >= 0");
  std::vector<ExponentPair> out;
  std::vector<int> cells(static_cast<size_t>(2) * d * d, 0);
  for (int k = 0; k <= m; ++k) enumerateRec(cells, 0, k, d, out, cap);
  return out;
}

Complex evalMonomial(const ExponentPair& pair, const Mat& g) {
  Complex acc = 1.0;
  for (int i = 0; i < pair.d; ++i)
    for (int j = 0; j < pair.d; ++j) {
      const size_t cell = static_cast<size_t>(i) * pair.d + j;
      for (int t = 0; t < pair.alpha[cell]; ++t) acc *= g(i, j);
      for (int t = 0; t < pair.alphaBar[cell]; ++t) acc *= std::conj(g(i, j));
    }
  return acc;
}

McEstimate complementNormSq(const FunctionSpec& spec, int m, long n,
                            const RngStream& rng) {
  spec.validate();
  if (m < 0) throw std::invalid_argument("complementNormSq: m must be >= 0");

  // Every shipped family is a sum of mutually orthogonal components, each of
  // one homogeneous degree, so the complement norm is a tail sum.
  double value;
  if (const auto* mono = std::get_if<Monomial>(&spec.family)) {
    value = m < mono->alpha ? momentG(mono->alpha, spec.d) : 0.0;
  } else if (const auto* poly = std::get_if<UnivariatePoly>(&spec.family)) {
    value = tailNormSq(*poly, spec.d, m);
  } else if (std::holds_alternative<NormalizedTrace>(spec.family)) {
    value = m < 1 ? 1.0 / (static_cast<double>(spec.d) * spec.d) : 0.0;
  } else if (std::holds_alternative<Determinant>(spec.family)) {
    value = m < spec.d ? 1.0 : 0.0;
  } else {
    const auto& ent = std::get<IrrepEntry>(spec.family);
    const Ambient amb = irrepAmbient(ent.label);
    value = m < amb.m + amb.mbar ? 1.0 / ent.label.dim() : 0.0;
  }
  (void)n;
  (void)rng;
  return {value, 0.0, 0};
}

McEstimate complementNormSqNumeric(const FunctionSpec& spec, int m, long n,
                                   const RngStream& rng) {
  spec.validate();
  const auto monomials = enumerateMonomials(spec.d, m);
  const Index k = static_cast<Index>(monomials.size());
  constexpr int kBatches = 10;
  if (n < kBatches)
    throw std::invalid_argument("complementNormSqNumeric: n too small");
  const long per = n / kBatches;

  Mat gram = Mat::Zero(k, k);
  std::vector<Vec> coeff(kBatches, Vec::Zero(k));
  std::vector<double> fnorm(kBatches, 0.0);
  Vec probe(k);
  for (int b = 0; b < kBatches; ++b) {
    RngStream sub = rng.split(static_cast<uint64_t>(b));
    for (long s = 0; s < per; ++s) {
      const Mat g = sampleHaar(spec.d, sub);
      for (Index i = 0; i < k; ++i) probe(i) = evalMonomial(monomials[i], g);
      const Complex fv = eval(spec, g);
      gram += probe * probe.adjoint();
      coeff[b] += probe.conjugate() * fv;
      fnorm[b] += std::norm(fv);
    }
    coeff[b] /= static_cast<double>(per);
    fnorm[b] /= static_cast<double>(per);
  }
  gram /= static_cast<double>(per * kBatches);

  Eigen::BDCSVD<Mat> dec(gram, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double sMax = dec.singularValues()(0);
  if (!(sMax > 0.0))
    throw NumericalError("complementNormSqNumeric: degenerate Gram matrix");
  // The monomials satisfy exact pointwise relations on the unitary group
  // (unitarity, determinant identities), so the sampled Gram matrix is
  // rank-deficient with exact zeros along the null directions. Invert on the
  // numerical range only.
  Eigen::VectorXd invSing = dec.singularValues();
  for (Index i = 0; i < k; ++i)
    invSing(i) = invSing(i) > 1e-8 * sMax ? 1.0 / invSing(i) : 0.0;
  const Mat pinv =
      dec.matrixV() * invSing.asDiagonal() * dec.matrixU().adjoint();

  double mean = 0.0, sq = 0.0;
  for (int b = 0; b < kBatches; ++b) {
    const double stat =
        fnorm[b] - (coeff[b].adjoint() * pinv * coeff[b]).real()(0, 0);
    mean += stat;
    sq += stat * stat;
  }
  mean /= kBatches;
  const double var = (sq / kBatches - mean * mean) / (kBatches - 1);
  return {mean, std::sqrt(std::max(var, 0.0)), per * kBatches};
}

int repEpsilon(const FunctionSpec& spec, double epsilon) {
  spec.validate();
  if (epsilon <= 0.0)
    throw std::invalid_argument("repEpsilon: epsilon must be positive");

  if (const auto* mono = std::get_if<Monomial>(&spec.family)) {
    if (mono->alpha >= 1 && epsilon < momentG(mono->alpha, spec.d))
      return (mono->alpha - 1) / 2;
    return 0;
  }
  if (const auto* poly = std::get_if<UnivariatePoly>(&spec.family)) {
    int best = 0;
    for (int m = 0; m <= degree(spec); ++m)
      if (tailNormSq(*poly, spec.d, 2 * m) >= epsilon) best = m;
    return best;
  }
  if (std::holds_alternative<NormalizedTrace>(spec.family)) return 0;
  if (std::holds_alternative<Determinant>(spec.family))
    return epsilon <= 1.0 ? (spec.d - 1) / 2 : 0;
  const auto& ent = std::get<IrrepEntry>(spec.family);
  const Ambient amb = irrepAmbient(ent.label);
  const int h = amb.m + amb.mbar;
  if (h >= 1 && epsilon < 1.0 / ent.label.dim()) return (h - 1) / 2;
  return 0;
}

RepVerdict repEpsilonNumeric(const FunctionSpec& spec, double epsilon, long n,
                             const RngStream& rng) {
  if (epsilon <= 0.0)
    throw std::invalid_argument("repEpsilonNumeric: epsilon must be positive");
  RepVerdict verdict{0, false};
  // The complement vanishes once 2m reaches the degree, so only smaller m
  // can qualify; probing beyond would just inflate the Gram matrix.
  const int mCap = std::max(0, (degree(spec) - 1) / 2);
  for (int m = 0; m <= mCap; ++m) {
    const McEstimate est =
        complementNormSqNumeric(spec, 2 * m, n, rng.split(static_cast<uint64_t>(m)));
    const double v = est.mean.real();
    if (std::abs(v - epsilon) <= 3.0 * est.stderr_) verdict.indeterminate = true;
    if (v >= epsilon) verdict.value = m;
  }
  return verdict;
}

McEstimate lowDegreeWitness(const std::function<Complex(const Mat&)>& h, int m,
                            const IrrepLabel& probe, int i, int j, long n,
                            const RngStream& rng) {
  const Ambient amb = irrepAmbient(probe);
  if (amb.m + amb.mbar <= 2 * m)
    throw std::invalid_argument(
        "lowDegreeWitness: probe degree must exceed 2m");
  if (i < 0 || i >= probe.dim() || j < 0 || j >= probe.dim())
    throw std::invalid_argument("lowDegreeWitness: entry indices out of range");
  return mcIntegrate(
      [&](const Mat& g) {
        return std::conj(irrepU2(probe, g)(i, j)) * h(g);
      },
      2, n, rng);
}

}  // namespace ufest
