// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/embed.hpp"

#include <algorithm>
#include <numeric>

namespace ufest {

namespace {

Index ipow(Index base, int exp) {
  Index v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    checkDimCap(v, 1);
  }
  return v;
}

/// ABCDE index from register digits: pairs (a_k, b_k) for k < m, then
/// (c_k, d_k), then e; first register most significant.
struct AbcdeIndexer {
  int m;
  int d;
  Index dimE;

  Index abPairDim() const { return 2 * static_cast<Index>(d); }

  Index compose(const std::vector<int>& aBits, const std::vector<Index>& bIdx,
                const std::vector<int>& cBits, const std::vector<Index>& dIdx,
                Index e) const {
    Index idx = 0;
    for (int k = 0; k < m; ++k)
      idx = idx * abPairDim() + (static_cast<Index>(aBits[k]) * d + bIdx[k]);
    for (int k = 0; k < m; ++k)
      idx = idx * abPairDim() + (static_cast<Index>(cBits[k]) * d + dIdx[k]);
    return idx * dimE + e;
  }
};

}  // namespace

Index directSumDim(int m, int d, Index dimE) {
  Index total = 0;
  for (int n = 0; n <= m; ++n)
    for (int nbar = 0; nbar <= m; ++nbar) total += ipow(d, n + nbar) * dimE;
  return total;
}

const BlockIndex& EmbeddingMap::block(int n, int nbar) const {
  return blocks[static_cast<size_t>(n) * (m + 1) + nbar];
}

Vec EmbeddingMap::embed(const Vec& tilde) const {
  if (tilde.size() != usefulDim)
    throw std::invalid_argument("EmbeddingMap::embed: dimension mismatch");
  Vec full = Vec::Zero(fullDim);
  for (Index k = 0; k < usefulDim; ++k) full(permutation[k]) = tilde(k);
  return full;
}

std::vector<Index> blockForBits(const std::vector<int>& bits, int d) {
  const int m = static_cast<int>(bits.size());
  const Index pair = 2 * static_cast<Index>(d);
  const Index local = ipow(d, m);
  std::vector<Index> map(static_cast<size_t>(local));
  for (Index li = 0; li < local; ++li) {
    Index rem = li;
    std::vector<Index> digits(bits.size());
    for (int k = m - 1; k >= 0; --k) {
      digits[k] = rem % d;
      rem /= d;
    }
    Index glob = 0;
    for (int k = 0; k < m; ++k)
      glob = glob * pair + (static_cast<Index>(bits[k]) * d + digits[k]);
    map[static_cast<size_t>(li)] = glob;
  }
  return map;
}

EmbeddingMap buildEmbedding(int m, int d, Index dimE) {
  EmbeddingMap emb;
  emb.m = m;
  emb.d = d;
  emb.dimE = dimE;
  emb.fullDim = ipow(2 * static_cast<Index>(d), 2 * m) * dimE;

  Index offset = 0;
  for (int n = 0; n <= m; ++n)
    for (int nbar = 0; nbar <= m; ++nbar) {
      BlockIndex b{n, nbar, offset, ipow(d, n + nbar) * dimE};
      offset += b.size;
      emb.blocks.push_back(b);
    }
  emb.usefulDim = offset;

  const AbcdeIndexer ix{m, d, dimE};
  emb.permutation.assign(static_cast<size_t>(emb.fullDim), -1);
  std::vector<bool> taken(static_cast<size_t>(emb.fullDim), false);

  Index k = 0;
  for (const BlockIndex& blk : emb.blocks) {
    // Canonical bitstrings 1^n 0^{m-n}: g powers on CD, conjugates on AB.
    std::vector<int> aBits(m, 0), cBits(m, 0);
    for (int i = 0; i < blk.nbar; ++i) aBits[i] = 1;
    for (int i = 0; i < blk.n; ++i) cBits[i] = 1;
    const Index gDim = ipow(d, blk.n);
    const Index gbarDim = ipow(d, blk.nbar);
    for (Index gi = 0; gi < gDim; ++gi)
      for (Index bi = 0; bi < gbarDim; ++bi)
        for (Index e = 0; e < dimE; ++e) {
          std::vector<Index> dIdx(m, 0), bIdx(m, 0);
          Index rem = gi;
          for (int t = blk.n - 1; t >= 0; --t) {
            dIdx[t] = rem % d;
            rem /= d;
          }
          rem = bi;
          for (int t = blk.nbar - 1; t >= 0; --t) {
            bIdx[t] = rem % d;
            rem /= d;
          }
          const Index full = ix.compose(aBits, bIdx, cBits, dIdx, e);
          emb.permutation[static_cast<size_t>(k)] = full;
          taken[static_cast<size_t>(full)] = true;
          ++k;
        }
  }
  // Garbage indices fill the remainder in ascending order.
  for (Index full = 0; full < emb.fullDim; ++full)
    if (!taken[static_cast<size_t>(full)])
      emb.permutation[static_cast<size_t>(k++)] = full;
  return emb;
}

int ExponentPair::degreeHolomorphic() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}
int ExponentPair::degreeAntiholomorphic() const {
  return std::accumulate(alphaBar.begin(), alphaBar.end(), 0);
}
int ExponentPair::degree() const {
  return degreeHolomorphic() + degreeAntiholomorphic();
}

EntryLocation monomialEntry(const ExponentPair& pair, int m, int d,
                            Index dimE) {
  const int n = pair.degreeHolomorphic();
  const int nbar = pair.degreeAntiholomorphic();
  if (n > m || nbar > m)
    throw std::invalid_argument("monomialEntry: degree exceeds m");

  Index rowG = 0, colG = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int rep = 0; rep < pair.alpha[static_cast<size_t>(i * d + j)]; ++rep) {
        rowG = rowG * d + i;
        colG = colG * d + j;
      }
  // Conjugate side: gbar_{ij} = (g*)_{ji}, so rows take j and columns take i.
  Index rowGbar = 0, colGbar = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int rep = 0; rep < pair.alphaBar[static_cast<size_t>(i * d + j)];
           ++rep) {
        rowGbar = rowGbar * d + j;
        colGbar = colGbar * d + i;
      }

  Index offset = 0;
  for (int nn = 0; nn <= m; ++nn)
    for (int nb = 0; nb <= m; ++nb) {
      if (nn == n && nb == nbar) goto found;
      offset += ipow(d, nn + nb) * dimE;
    }
found:
  const Index gbarDim = ipow(d, nbar);
  EntryLocation loc;
  loc.row = offset + (rowG * gbarDim + rowGbar) * dimE;
  loc.col = offset + (colG * gbarDim + colGbar) * dimE;
  return loc;
}

Mat assembleDirectSum(int m, int d, Index dimE, const Mat& g) {
  Mat out = Mat::Zero(0, 0);
  const Mat idE = Mat::Identity(dimE, dimE);
  for (int n = 0; n <= m; ++n)
    for (int nbar = 0; nbar <= m; ++nbar) {
      Mat blk = Mat::Identity(1, 1);
      for (int i = 0; i < n; ++i) blk = tensor(blk, g);
      for (int i = 0; i < nbar; ++i) blk = tensor(blk, Mat(g.adjoint()));
      blk = tensor(blk, idE);
      out = out.size() == 0 ? blk : directSum(out, blk);
    }
  return out;
}

Vec applyDirectSum(int m, int d, Index dimE, const Mat& g, const Vec& v) {
  if (v.size() != directSumDim(m, d, dimE))
    throw std::invalid_argument("applyDirectSum: dimension mismatch");
  const Mat gConjT = g.adjoint();  // g^*
  Vec out = Vec::Zero(v.size());
  Index offset = 0;
  for (int n = 0; n <= m; ++n)
    for (int nbar = 0; nbar <= m; ++nbar) {
      const Index size = ipow(d, n + nbar) * dimE;
      Vec blk = v.segment(offset, size);
      // Apply g on each of the n leading slots, g^* on the nbar next ones.
      const int slots = n + nbar;
      for (int s = 0; s < slots; ++s) {
        const Mat& op = s < n ? g : gConjT;
        Index stride = dimE;
        for (int t = slots - 1; t > s; --t) stride *= d;
        Vec next = Vec::Zero(size);
        for (Index base = 0; base < size; ++base) {
          if ((base / stride) % d != 0) continue;
          for (Index k = 0; k < d; ++k) {
            Complex acc = 0.0;
            for (Index l = 0; l < d; ++l) acc += op(k, l) * blk(base + l * stride);
            next(base + k * stride) = acc;
          }
        }
        blk = std::move(next);
      }
      out.segment(offset, size) = blk;
      offset += size;
    }
  return out;
}

}  // namespace ufest
