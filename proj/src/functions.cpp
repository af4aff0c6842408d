// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/functions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "ufest/embed.hpp"
#include "ufest/estimator.hpp"
#include "ufest/fourier.hpp"
#include "ufest/haar.hpp"

namespace ufest {

namespace {

void requireUnitary(const Mat& g, int d) {
  if (g.rows() != d || g.cols() != d)
    throw std::invalid_argument("g has the wrong dimension");
  if ((g.adjoint() * g - Mat::Identity(d, d)).norm() > 1e-10)
    throw std::invalid_argument("g is not unitary");
}

Index blockOffset(int m, int d, int n, int nbar) {
  Index offset = 0;
  for (int nn = 0; nn <= m; ++nn)
    for (int nb = 0; nb <= m; ++nb) {
      if (nn == n && nb == nbar) return offset;
      Index sz = 1;
      for (int t = 0; t < nn + nb; ++t) sz *= d;
      offset += sz;
    }
  throw std::invalid_argument("blockOffset: block outside the direct sum");
}

ExponentPair entry11Power(int d, int k) {
  ExponentPair p{d, std::vector<int>(static_cast<size_t>(d) * d, 0),
                 std::vector<int>(static_cast<size_t>(d) * d, 0)};
  p.alpha[0] = k;
  return p;
}

/// Intertwiners are expensive to solve and must be identical across calls
/// for seeded determinism, so they come from a fixed-seed cache.
const Intertwiner& cachedIntertwiner(const IrrepLabel& label, int mA,
                                     int mbar) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Intertwiner> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(label.lambda1, label.lambda2);
  auto it = cache.find(key);
  if (it == cache.end()) {
    RngStream rng(0x1e7e57ULL,
                  (static_cast<uint64_t>(static_cast<uint32_t>(label.lambda1))
                   << 32) ^
                      static_cast<uint32_t>(label.lambda2));
    it = cache.emplace(key, solveIntertwiner(label, mA, mbar, rng)).first;
  }
  return it->second;
}

/// One additively separable piece of a family: the minimal block it lives in
/// and a writer that adds its entries into a direct-sum sized matrix.
struct Component {
  int blockN;
  int blockNbar;
  std::function<void(Mat&, int m, int d)> write;
};

std::vector<Component> components(const FunctionSpec& spec) {
  std::vector<Component> out;
  const int d = spec.d;

  if (const auto* mono = std::get_if<Monomial>(&spec.family)) {
    const int alpha = mono->alpha;
    out.push_back({alpha, 0, [alpha, d](Mat& a, int m, int) {
                     const auto loc = monomialEntry(entry11Power(d, alpha), m, d);
                     a(loc.col, loc.row) += 1.0;
                   }});
  } else if (const auto* poly = std::get_if<UnivariatePoly>(&spec.family)) {
    for (size_t k = 0; k < poly->coeffs.size(); ++k) {
      const Complex c = poly->coeffs[k];
      if (c == Complex{}) continue;
      const int kk = static_cast<int>(k);
      out.push_back({kk, 0, [c, kk, d](Mat& a, int m, int) {
                       const auto loc = monomialEntry(entry11Power(d, kk), m, d);
                       a(loc.col, loc.row) += c;
                     }});
    }
  } else if (std::holds_alternative<NormalizedTrace>(spec.family)) {
    out.push_back({1, 0, [d](Mat& a, int m, int) {
                     // Block (1, 0) is g itself: place (1/d) I there.
                     const Index offset = blockOffset(m, d, 1, 0);
                     for (int i = 0; i < d; ++i)
                       a(offset + i, offset + i) += 1.0 / d;
                   }});
  } else if (std::holds_alternative<Determinant>(spec.family)) {
    out.push_back({d, 0, [d](Mat& a, int m, int) {
                     // g^{(x)d} psi_anti = det(g) psi_anti, so the rank-1
                     // projector onto psi_anti realizes det with ||A||_1 = 1.
                     Index dim = 1;
                     for (int t = 0; t < d; ++t) dim *= d;
                     Vec psi = Vec::Zero(dim);
                     std::vector<int> perm(static_cast<size_t>(d));
                     for (int i = 0; i < d; ++i) perm[static_cast<size_t>(i)] = i;
                     double norm = 1.0;
                     for (int i = 2; i <= d; ++i) norm *= i;
                     norm = std::sqrt(norm);
                     do {
                       int inversions = 0;
                       for (int i = 0; i < d; ++i)
                         for (int j = i + 1; j < d; ++j)
                           if (perm[static_cast<size_t>(i)] >
                               perm[static_cast<size_t>(j)])
                             ++inversions;
                       Index idx = 0;
                       for (int i = 0; i < d; ++i)
                         idx = idx * d + perm[static_cast<size_t>(i)];
                       psi(idx) = (inversions % 2 == 0 ? 1.0 : -1.0) / norm;
                     } while (std::next_permutation(perm.begin(), perm.end()));

                     const Index offset = blockOffset(m, d, d, 0);
                     a.block(offset, offset, dim, dim) += psi * psi.adjoint();
                   }});
  } else {
    const auto& ent = std::get<IrrepEntry>(spec.family);
    const Ambient amb = irrepAmbient(ent.label);
    const IrrepLabel label = ent.label;
    const int i = ent.i, j = ent.j;
    out.push_back({amb.m, amb.mbar, [label, amb, i, j](Mat& a, int m, int d) {
                     const Intertwiner& tw =
                         cachedIntertwiner(label, amb.m, amb.mbar);
                     const Vec ui = tw.map.col(i);
                     const Vec uj = tw.map.col(j);
                     // Tr[(T e_j)(T e_i)^* (g^{(x)mA} (x) gbar^{(x)mbar})]
                     // equals pi(g)_{ij}; the partial transpose moves the
                     // gbar factors into the block's g-dagger convention.
                     Mat tilde = uj * ui.adjoint();
                     Index dimA = 1, dimB = 1;
                     for (int t = 0; t < amb.m; ++t) dimA *= d;
                     for (int t = 0; t < amb.mbar; ++t) dimB *= d;
                     Mat blk = amb.mbar == 0
                                   ? tilde
                                   : partialTranspose(tilde, dimA, dimB,
                                                      Factor::Second);
                     const Index offset = blockOffset(m, d, amb.m, amb.mbar);
                     a.block(offset, offset, blk.rows(), blk.cols()) += blk;
                   }});
  }
  return out;
}

AForm assemble(const FunctionSpec& spec, const std::vector<Component>& comps,
               int m) {
  AForm form;
  form.m = m;
  form.dimE = 1;
  form.a = Mat::Zero(directSumDim(m, spec.d, 1), directSumDim(m, spec.d, 1));
  for (const Component& c : comps) c.write(form.a, m, spec.d);
  form.claimedTraceNorm = traceNorm(form.a);
  return form;
}

}  // namespace

void FunctionSpec::validate() const {
  if (d < 1) throw std::invalid_argument("FunctionSpec: d must be positive");
  if (const auto* mono = std::get_if<Monomial>(&family)) {
    if (mono->alpha < 0)
      throw std::invalid_argument("Monomial: alpha must be nonnegative");
  } else if (const auto* ent = std::get_if<IrrepEntry>(&family)) {
    if (d != 2)
      throw std::invalid_argument("IrrepEntry: only d = 2 is supported");
    if (ent->label.lambda1 < ent->label.lambda2)
      throw std::invalid_argument("IrrepEntry: label must be non-increasing");
    const Ambient amb = irrepAmbient(ent->label);
    if (amb.m + amb.mbar > 4)
      throw std::invalid_argument("IrrepEntry: ambient degree above 4");
    const int dim = ent->label.dim();
    if (ent->i < 0 || ent->i >= dim || ent->j < 0 || ent->j >= dim)
      throw std::invalid_argument("IrrepEntry: entry indices out of range");
  } else if (const auto* poly = std::get_if<UnivariatePoly>(&family)) {
    for (const Complex& c : poly->coeffs)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
        throw std::invalid_argument("UnivariatePoly: non-finite coefficient");
  }
}

Complex eval(const FunctionSpec& spec, const Mat& g) {
  spec.validate();
  requireUnitary(g, spec.d);
  if (const auto* mono = std::get_if<Monomial>(&spec.family))
    return std::pow(g(0, 0), mono->alpha);
  if (const auto* poly = std::get_if<UnivariatePoly>(&spec.family)) {
    Complex acc = 0.0;
    for (size_t k = poly->coeffs.size(); k-- > 0;)
      acc = acc * g(0, 0) + poly->coeffs[k];
    return acc;
  }
  if (std::holds_alternative<NormalizedTrace>(spec.family))
    return g.trace() / static_cast<double>(spec.d);
  if (std::holds_alternative<Determinant>(spec.family)) return g.determinant();
  const auto& ent = std::get<IrrepEntry>(spec.family);
  return irrepU2(ent.label, g)(ent.i, ent.j);
}

Ambient irrepAmbient(const IrrepLabel& label) {
  Ambient a{0, 0};
  for (int l : {label.lambda1, label.lambda2}) {
    a.m += std::max(l, 0);
    a.mbar += std::max(-l, 0);
  }
  return a;
}

int degree(const FunctionSpec& spec) {
  if (const auto* mono = std::get_if<Monomial>(&spec.family))
    return mono->alpha;
  if (const auto* poly = std::get_if<UnivariatePoly>(&spec.family)) {
    int deg = 0;
    for (size_t k = 0; k < poly->coeffs.size(); ++k)
      if (poly->coeffs[k] != Complex{}) deg = static_cast<int>(k);
    return deg;
  }
  if (std::holds_alternative<NormalizedTrace>(spec.family)) return 1;
  if (std::holds_alternative<Determinant>(spec.family)) return spec.d;
  const Ambient amb = irrepAmbient(std::get<IrrepEntry>(spec.family).label);
  return amb.m + amb.mbar;
}

AForm buildA(const FunctionSpec& spec) {
  spec.validate();
  const auto comps = components(spec);
  int m = 0;
  for (const Component& c : comps)
    m = std::max({m, c.blockN, c.blockNbar});
  return assemble(spec, comps, m);
}

AForm buildTruncatedA(const FunctionSpec& spec, int maxDegree) {
  spec.validate();
  std::vector<Component> kept;
  int m = 0;
  for (const Component& c : components(spec)) {
    if (c.blockN + c.blockNbar > maxDegree) continue;
    m = std::max({m, c.blockN, c.blockNbar});
    kept.push_back(c);
  }
  return assemble(spec, kept, m);
}

double normSqL2(const FunctionSpec& spec) {
  if (const auto* mono = std::get_if<Monomial>(&spec.family))
    return momentG(mono->alpha, spec.d);
  if (const auto* poly = std::get_if<UnivariatePoly>(&spec.family)) {
    double acc = 0.0;
    for (size_t k = 0; k < poly->coeffs.size(); ++k)
      acc += std::norm(poly->coeffs[k]) * momentG(static_cast<int>(k), spec.d);
    return acc;
  }
  if (std::holds_alternative<NormalizedTrace>(spec.family))
    return 1.0 / (static_cast<double>(spec.d) * spec.d);
  if (std::holds_alternative<Determinant>(spec.family)) return 1.0;
  return 1.0 / std::get<IrrepEntry>(spec.family).label.dim();
}

double supNormBound(const FunctionSpec& spec) {
  if (const auto* poly = std::get_if<UnivariatePoly>(&spec.family)) {
    double acc = 0.0;
    for (const Complex& c : poly->coeffs) acc += std::abs(c);
    return acc;
  }
  // |g_11| <= 1, |Tr g|/d <= 1, |det g| = 1, |pi(g)_ij| <= 1.
  return 1.0;
}

long qBound(const FunctionSpec& spec, double epsilon, double delta) {
  const AForm form = buildA(spec);
  return pacShots(epsilon, delta, form.claimedTraceNorm) * 2 * form.m;
}

int repBound(const FunctionSpec& spec, double epsilon) {
  return repEpsilon(spec, epsilon);
}

const char* familyName(const FunctionSpec& spec) {
  if (std::holds_alternative<Monomial>(spec.family)) return "monomial";
  if (std::holds_alternative<UnivariatePoly>(spec.family)) return "poly";
  if (std::holds_alternative<NormalizedTrace>(spec.family)) return "trace";
  if (std::holds_alternative<Determinant>(spec.family)) return "det";
  return "irrep";
}

}  // namespace ufest
