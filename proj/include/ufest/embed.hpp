// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ufest/linalg.hpp"

namespace ufest {

/// One (n, nbar) summand of the direct sum
/// (+)_{0 <= n, nbar <= m} g^{(x)n} (x) g^{* (x)nbar} (x) I_E.
struct BlockIndex {
  int n;
  int nbar;
  Index offset;  // prefix sum of sizes in lexicographic (n, nbar) order
  Index size;    // d^{n+nbar} * dimE
};

/// Index bookkeeping for the isometric copy of the direct sum inside the
/// circuit's natural operator (I+g*)_AB^{(x)m} (x) (I+g)_CD^{(x)m} (x) I_E.
/// The g powers ride on the CD registers and the conjugate powers on AB;
/// callers only ever see the (n, nbar) order.
struct EmbeddingMap {
  int m;
  int d;
  Index dimE;
  Index usefulDim;
  Index fullDim;
  std::vector<BlockIndex> blocks;
  /// Bijection on the full ABCDE index space; entries [0, usefulDim) are the
  /// images of the direct-sum basis, the rest enumerate Garbage.
  std::vector<Index> permutation;

  const BlockIndex& block(int n, int nbar) const;

  /// Embeds a direct-sum vector into the ABCDE space (zero on Garbage).
  Vec embed(const Vec& tilde) const;
};

EmbeddingMap buildEmbedding(int m, int d, Index dimE);

/// Map from the d^{|bits|} indices of the g-power block selected by a control
/// bitstring into the (2d)^{|bits|} AB space: the A register is pinned to the
/// bitstring, B indices pass through (identity factors range over all d basis
/// states).
std::vector<Index> blockForBits(const std::vector<int>& bits, int d);

/// d x d grids of exponents for the monomial g^alpha gbar^alphaBar.
struct ExponentPair {
  int d;
  std::vector<int> alpha;     // row-major d*d
  std::vector<int> alphaBar;  // row-major d*d

  int degree() const;
  int degreeHolomorphic() const;
  int degreeAntiholomorphic() const;
  bool operator==(const ExponentPair&) const = default;
};

/// Global (row, col) in the direct-sum space whose matrix element equals
/// g^alpha gbar^alphaBar exactly. Factors of g_{ij} fill tensor slots in
/// lexicographic (i, j) order; conjugate factors land transposed, since
/// (g*)_{ab} = gbar_{ba}.
struct EntryLocation {
  Index row;
  Index col;
};
EntryLocation monomialEntry(const ExponentPair& pair, int m, int d,
                            Index dimE = 1);

/// Assembles the direct sum as an explicit matrix (test oracle scale only).
Mat assembleDirectSum(int m, int d, Index dimE, const Mat& g);

/// Applies the direct sum operator to a vector without materializing it.
Vec applyDirectSum(int m, int d, Index dimE, const Mat& g, const Vec& v);

Index directSumDim(int m, int d, Index dimE);

}  // namespace ufest
