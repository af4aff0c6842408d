// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>
#include <vector>

#include "ufest/linalg.hpp"
#include "ufest/repr.hpp"

namespace ufest {

struct Monomial {
  int alpha;  // f(g) = g_11^alpha
};
struct UnivariatePoly {
  std::vector<Complex> coeffs;  // f(g) = sum_k coeffs[k] g_11^k
};
struct NormalizedTrace {};  // f(g) = Tr g / d
struct Determinant {};      // f(g) = det g
struct IrrepEntry {         // f(g) = pi_lambda(g)_{i,j}, d = 2 only
  IrrepLabel label;
  int i;
  int j;
};

using Family =
    std::variant<Monomial, UnivariatePoly, NormalizedTrace, Determinant,
                 IrrepEntry>;

/// A target function family f: U(d) -> C with its parameters.
struct FunctionSpec {
  int d;
  Family family;

  void validate() const;
};

/// An A-matrix realizing f(g) = Tr[a * ((+)_{n,nbar<=m} g^n (x) g*^nbar (x) I_E)].
struct AForm {
  Mat a;
  int m;
  Index dimE;
  double claimedTraceNorm;
};

Complex eval(const FunctionSpec& spec, const Mat& g);

AForm buildA(const FunctionSpec& spec);

/// A-form for the degree <= maxDegree part of f; components of higher degree
/// are dropped (possibly yielding the zero matrix).
AForm buildTruncatedA(const FunctionSpec& spec, int maxDegree);

/// Polynomial degree of the family in entries of g and gbar.
int degree(const FunctionSpec& spec);

/// Minimal ambient tensor powers (m, mbar) for an IrrepEntry label.
struct Ambient {
  int m;
  int mbar;
};
Ambient irrepAmbient(const IrrepLabel& label);

/// L^2 norm squared of f under the Haar measure (closed form).
double normSqL2(const FunctionSpec& spec);

/// Upper bound on sup_g |f(g)|.
double supNormBound(const FunctionSpec& spec);

/// Total controlled-g queries of the PAC estimator for (epsilon, delta):
/// shots(epsilon, delta, trace norm) * 2m.
long qBound(const FunctionSpec& spec, double epsilon, double delta);

/// Closed-form Rep_epsilon(f) (delegates to the fourier module).
int repBound(const FunctionSpec& spec, double epsilon);

const char* familyName(const FunctionSpec& spec);

}  // namespace ufest
