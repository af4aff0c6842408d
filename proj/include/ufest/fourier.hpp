// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "ufest/embed.hpp"
#include "ufest/functions.hpp"
#include "ufest/haar.hpp"

namespace ufest {

/// All monomials g^alpha gbar^alphaBar with |alpha| + |alphaBar| <= m,
/// ordered by total degree, then reverse-lexicographically on the
/// concatenated exponent grids (so g powers precede gbar powers).
std::vector<ExponentPair> enumerateMonomials(int d, int m,
                                             size_t cap = 200000);

Complex evalMonomial(const ExponentPair& pair, const Mat& g);

/// || Q-perp_{<= m} f ||^2: closed form where the family admits one,
/// otherwise the numeric Gram path. Closed-form results carry stderr 0.
McEstimate complementNormSq(const FunctionSpec& spec, int m, long n,
                            const RngStream& rng);

/// Forces the Monte-Carlo path: Gram matrix of the monomial set over n Haar
/// samples, pseudo-inverse projection of the coefficient vector, subtraction
/// from ||f||^2. The Gram matrix is rank-deficient by exact monomial
/// relations on the group, so the projection uses a rank-cutoff
/// pseudo-inverse. Batched into 10 groups for the stderr.
McEstimate complementNormSqNumeric(const FunctionSpec& spec, int m, long n,
                                   const RngStream& rng);

/// Largest m with || Q-perp_{<= 2m} f ||^2 >= epsilon, by the per-family
/// closed forms; 0 when no m qualifies.
int repEpsilon(const FunctionSpec& spec, double epsilon);

/// Numeric fallback verdict. Indeterminate flags a boundary case where some
/// Monte-Carlo comparison against epsilon landed within 3 stderr.
struct RepVerdict {
  int value;
  bool indeterminate;
};
RepVerdict repEpsilonNumeric(const FunctionSpec& spec, double epsilon, long n,
                             const RngStream& rng);

/// Monte-Carlo Haar inner product <pi_probe(g)_{ij}, h> for h a conditional
/// expectation of some plan. Consistent with 0 within 3 stderr whenever the
/// probe's homogeneous degree exceeds twice the plan's query count.
McEstimate lowDegreeWitness(const std::function<Complex(const Mat&)>& h, int m,
                            const IrrepLabel& probe, int i, int j, long n,
                            const RngStream& rng);

}  // namespace ufest
