// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/circuit.hpp"

#include <cmath>

namespace ufest {

namespace {

std::vector<Index> strides(const std::vector<Index>& radices) {
  std::vector<Index> s(radices.size());
  Index acc = 1;
  for (size_t i = radices.size(); i-- > 0;) {
    s[i] = acc;
    acc *= radices[i];
  }
  return s;
}

/// Applies a square matrix on one mixed-radix slot, restricted to basis
/// states whose control slots carry the required digits.
void applySlot(Vec& state, const std::vector<Index>& radices,
               const std::vector<Index>& strd, size_t slot, const Mat& op,
               const std::vector<std::pair<size_t, Index>>& controls = {}) {
  const Index r = radices[slot];
  const Index s = strd[slot];
  const Index n = state.size();
  Vec scratch(r);
  for (Index base = 0; base < n; ++base) {
    if ((base / s) % r != 0) continue;  // visit each fiber once
    bool active = true;
    for (const auto& [cslot, cval] : controls) {
      if ((base / strd[cslot]) % radices[cslot] != cval) {
        active = false;
        break;
      }
    }
    if (!active) continue;
    for (Index k = 0; k < r; ++k) scratch(k) = state(base + k * s);
    for (Index k = 0; k < r; ++k) {
      Complex acc = 0.0;
      for (Index l = 0; l < r; ++l) acc += op(k, l) * scratch(l);
      state(base + k * s) = acc;
    }
  }
}

void requireUnitary(const Mat& g, int d) {
  if (g.rows() != d || g.cols() != d)
    throw std::invalid_argument("g has the wrong dimension");
  if ((g.adjoint() * g - Mat::Identity(d, d)).norm() > 1e-10)
    throw std::invalid_argument("g is not unitary");
}

}  // namespace

Index RegisterLayout::abcdeDim() const {
  Index dim = dimE;
  for (int n = 0; n < 2 * m; ++n) {
    dim *= 2 * static_cast<Index>(d);
    checkDimCap(dim, 1);
  }
  return dim;
}

Index RegisterLayout::totalDim() const {
  const Index dim = 2 * abcdeDim();
  checkDimCap(dim, 1);
  return dim;
}

std::vector<Index> RegisterLayout::abcdeRadices() const {
  std::vector<Index> r;
  for (int n = 0; n < 2 * m; ++n) {
    r.push_back(2);
    r.push_back(d);
  }
  r.push_back(dimE);
  return r;
}

void GHadamardInstance::validate() const {
  if (m < 0 || d < 1 || dimE < 1)
    throw std::invalid_argument("GHadamardInstance: bad register sizes");
  if (b != 0 && b != 1)
    throw std::invalid_argument("GHadamardInstance: b must be 0 or 1");
  const Index dim = layout().abcdeDim();
  if (phi.size() != dim || psi.size() != dim)
    throw std::invalid_argument("GHadamardInstance: phi/psi dimension mismatch");
  if (std::abs(phi.norm() - 1.0) > 1e-10 || std::abs(psi.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("GHadamardInstance: phi/psi must be normalized");
}

OutcomeDistribution simulateGHadamard(const GHadamardInstance& inst,
                                      const Mat& g) {
  inst.validate();
  requireUnitary(g, inst.d);
  const RegisterLayout lay = inst.layout();
  const Index half = lay.abcdeDim();
  const Index n = lay.totalDim();

  // Full register radices: control qubit first (most significant).
  std::vector<Index> radices = lay.abcdeRadices();
  radices.insert(radices.begin(), 2);
  const std::vector<Index> strd = strides(radices);
  const auto slotA = [&](int k) { return static_cast<size_t>(1 + 2 * k); };
  const auto slotB = [&](int k) { return static_cast<size_t>(2 + 2 * k); };
  const auto slotC = [&](int k) { return slotA(inst.m + k); };
  const auto slotD = [&](int k) { return slotB(inst.m + k); };

  Vec state = Vec::Zero(n);
  state(0) = 1.0;  // |0>_control (x) |init>, init = |0...0>

  Mat hadamard(2, 2);
  hadamard << 1, 1, 1, -1;
  hadamard /= std::sqrt(2.0);
  Mat pauliX(2, 2);
  pauliX << 0, 1, 1, 0;
  Mat sInv(2, 2);
  sInv << 1, 0, 0, Complex(0, -1);

  // U_phi / U_psi are only specified on |init>; the controlled branch must be
  // proportional to |init> when they fire.
  const auto controlledPrep = [&](const Vec& target) {
    auto branch = state.segment(half, half);
    const Complex amp = branch(0);
    branch(0) = 0.0;
    if (branch.norm() > 1e-9)
      throw NumericalError(
          "controlled state preparation applied off the initial state");
    state.segment(half, half) = amp * target;
  };

  int queries = 0;

  applySlot(state, radices, strd, 0, hadamard);
  controlledPrep(inst.phi);
  for (int k = 0; k < inst.m; ++k) {
    applySlot(state, radices, strd, slotB(k), g, {{0, 1}, {slotA(k), 1}});
    ++queries;
  }
  applySlot(state, radices, strd, 0, pauliX);
  controlledPrep(inst.psi);
  for (int k = 0; k < inst.m; ++k) {
    applySlot(state, radices, strd, slotD(k), g, {{0, 1}, {slotC(k), 1}});
    ++queries;
  }
  if (inst.b == 1) applySlot(state, radices, strd, 0, sInv);
  applySlot(state, radices, strd, 0, hadamard);

  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-9)
    throw NumericalError("statevector norm drifted during simulation");

  OutcomeDistribution out;
  out.p0 = state.head(half).squaredNorm();
  out.p1 = state.tail(half).squaredNorm();
  out.controlledGApplications = queries;
  return out;
}

Complex overlapFormula(const GHadamardInstance& inst, const Mat& g) {
  inst.validate();
  requireUnitary(g, inst.d);
  const RegisterLayout lay = inst.layout();
  const std::vector<Index> radices = lay.abcdeRadices();
  const std::vector<Index> strd = strides(radices);
  const Mat gStar = g.adjoint();

  Vec w = inst.psi;
  for (int k = 0; k < inst.m; ++k) {
    const size_t a = static_cast<size_t>(2 * k);
    const size_t b = a + 1;
    applySlot(w, radices, strd, b, gStar, {{a, 1}});  // (I + g*) on A_k B_k
  }
  for (int k = 0; k < inst.m; ++k) {
    const size_t c = static_cast<size_t>(2 * (inst.m + k));
    const size_t dslot = c + 1;
    applySlot(w, radices, strd, dslot, g, {{c, 1}});  // (I + g) on C_k D_k
  }
  return inst.phi.dot(w);
}

double pZeroFormula(const GHadamardInstance& inst, const Mat& g) {
  const Complex z = overlapFormula(inst, g);
  return (1.0 + (inst.b == 1 ? z.imag() : z.real())) / 2.0;
}

int queryCount(const GHadamardInstance& inst) { return 2 * inst.m; }

}  // namespace ufest
