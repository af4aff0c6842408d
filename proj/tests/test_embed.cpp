// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ufest/embed.hpp"
#include "ufest/fourier.hpp"
#include "ufest/haar.hpp"

using namespace ufest;
using test::randomState;

namespace {

/// The circuit's natural operator (I + g-dagger)_AB^m (x) (I + g)_CD^m (x) I_E
/// assembled densely (oracle scale only).
Mat circuitOperator(int m, int d, Index dimE, const Mat& g) {
  Mat op = Mat::Identity(1, 1);
  for (int k = 0; k < m; ++k)
    op = tensor(op, directSum(Mat::Identity(d, d), Mat(g.adjoint())));
  for (int k = 0; k < m; ++k)
    op = tensor(op, directSum(Mat::Identity(d, d), g));
  return tensor(op, Mat::Identity(dimE, dimE));
}

ExponentPair randomPair(int d, int m, RngStream& rng) {
  ExponentPair p{d, std::vector<int>(static_cast<size_t>(d) * d, 0),
                 std::vector<int>(static_cast<size_t>(d) * d, 0)};
  const int n = static_cast<int>(rng.nextU64() % (m + 1));
  const int nbar = static_cast<int>(rng.nextU64() % (m + 1));
  for (int t = 0; t < n; ++t)
    p.alpha[rng.nextU64() % p.alpha.size()] += 1;
  for (int t = 0; t < nbar; ++t)
    p.alphaBar[rng.nextU64() % p.alphaBar.size()] += 1;
  return p;
}

}  // namespace

TEST_CASE("block bookkeeping and useful dimension") {
  const EmbeddingMap emb = buildEmbedding(1, 2, 1);
  CHECK(emb.usefulDim == 9);  // 1 + 2 + 2 + 4
  CHECK(emb.fullDim == 16);
  CHECK(emb.block(0, 0).offset == 0);
  CHECK(emb.block(0, 1).offset == 1);
  CHECK(emb.block(1, 0).offset == 3);
  CHECK(emb.block(1, 1).offset == 5);
  CHECK(emb.block(1, 1).size == 4);
  CHECK(directSumDim(1, 2, 1) == 9);
  CHECK(directSumDim(2, 3, 2) == 2 * (1 + 3 + 9) * (1 + 3 + 9));

  // The permutation is a bijection on the full index space.
  std::vector<bool> seen(static_cast<size_t>(emb.fullDim), false);
  for (Index v : emb.permutation) {
    REQUIRE(v >= 0);
    REQUIRE(v < emb.fullDim);
    CHECK(!seen[static_cast<size_t>(v)]);
    seen[static_cast<size_t>(v)] = true;
  }
}

TEST_CASE("blockForBits places g factors at set bits") {
  // bits = (1) at d = 2: rows {2, 3} of the 4-dim A1B1 space.
  CHECK(blockForBits({1}, 2) == std::vector<Index>{2, 3});
  CHECK(blockForBits({0}, 2) == std::vector<Index>{0, 1});
  // bits = (1, 0): global index (1*2+b1)*4 + (0*2+b2).
  CHECK(blockForBits({1, 0}, 2) == std::vector<Index>{8, 9, 12, 13});
}

TEST_CASE("conjugating the circuit operator yields the direct sum") {
  for (int d : {2, 3}) {
    for (int m : {1, 2}) {
      if (d == 3 && m == 2) continue;  // covered by acceptance at scale
      RngStream rng(81, static_cast<uint64_t>(d * 8 + m));
      const EmbeddingMap emb = buildEmbedding(m, d, 1);
      const Mat w = permutationMatrix(emb.permutation);
      for (int t = 0; t < 5; ++t) {
        const Mat g = sampleHaar(d, rng);
        const Mat conj = w.adjoint() * circuitOperator(m, d, 1, g) * w;
        const Mat lead = conj.topLeftCorner(emb.usefulDim, emb.usefulDim);
        CHECK((lead - assembleDirectSum(m, d, 1, g)).norm() < 1e-10);
      }
    }
  }

  // Identity g: the leading block is the identity.
  const EmbeddingMap emb = buildEmbedding(1, 2, 1);
  const Mat w = permutationMatrix(emb.permutation);
  const Mat conj =
      w.adjoint() * circuitOperator(1, 2, 1, Mat::Identity(2, 2)) * w;
  CHECK((conj.topLeftCorner(9, 9) - Mat::Identity(9, 9)).norm() == 0.0);
}

TEST_CASE("embedding digit pattern: canonical bitstrings, pinned identities") {
  const int m = 2, d = 2;
  const EmbeddingMap emb = buildEmbedding(m, d, 1);
  for (const BlockIndex& blk : emb.blocks) {
    for (Index local = 0; local < blk.size; ++local) {
      Index full = emb.permutation[static_cast<size_t>(blk.offset + local)];
      // Decode (A_k, B_k) x m then (C_k, D_k) x m digits, most significant
      // first.
      std::vector<Index> digits(4 * m);
      for (int slot = 4 * m - 1; slot >= 0; --slot) {
        const Index radix = slot % 2 == 0 ? 2 : d;
        digits[static_cast<size_t>(slot)] = full % radix;
        full /= radix;
      }
      Index gIdx = 0, gbarIdx = 0;
      for (int k = 0; k < m; ++k) {
        const Index aBit = digits[static_cast<size_t>(2 * k)];
        const Index bDig = digits[static_cast<size_t>(2 * k + 1)];
        const Index cBit = digits[static_cast<size_t>(2 * m + 2 * k)];
        const Index dDig = digits[static_cast<size_t>(2 * m + 2 * k + 1)];
        CHECK(aBit == (k < blk.nbar ? 1 : 0));
        CHECK(cBit == (k < blk.n ? 1 : 0));
        if (k >= blk.nbar) CHECK(bDig == 0);  // identity slots pinned
        if (k >= blk.n) CHECK(dDig == 0);
        if (k < blk.nbar) gbarIdx = gbarIdx * d + bDig;
        if (k < blk.n) gIdx = gIdx * d + dDig;
      }
      // Local ordering: g-power index most significant, then gbar index.
      Index gbarDim = 1;
      for (int t = 0; t < blk.nbar; ++t) gbarDim *= d;
      CHECK(local == gIdx * gbarDim + gbarIdx);
    }
  }
}

TEST_CASE("embed places amplitudes and zeroes garbage") {
  RngStream rng(82);
  const EmbeddingMap emb = buildEmbedding(1, 2, 1);
  const Vec tilde = randomState(emb.usefulDim, rng);
  const Vec full = emb.embed(tilde);
  CHECK(full.size() == emb.fullDim);
  CHECK(std::abs(full.norm() - 1.0) < 1e-12);
  for (Index k = 0; k < emb.usefulDim; ++k)
    CHECK(full(emb.permutation[static_cast<size_t>(k)]) == tilde(k));
  CHECK_THROWS_AS(emb.embed(Vec::Zero(3)), std::invalid_argument);
}

TEST_CASE("monomialEntry hits the exact scalar monomial") {
  SUBCASE("pinned examples at d = 2, m = 1") {
    ExponentPair g11{2, {1, 0, 0, 0}, {0, 0, 0, 0}};
    const EntryLocation loc = monomialEntry(g11, 1, 2);
    CHECK(loc.row == 3);
    CHECK(loc.col == 3);

    ExponentPair gbar12{2, {0, 0, 0, 0}, {0, 1, 0, 0}};
    const EntryLocation conjLoc = monomialEntry(gbar12, 1, 2);
    // Block (0,1) starts at offset 1; (g-dagger)_{21} = gbar_12.
    CHECK(conjLoc.row == 1 + 1);
    CHECK(conjLoc.col == 1 + 0);
  }

  SUBCASE("random pairs against the assembled direct sum") {
    for (const auto& [d, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}}) {
      RngStream rng(83, static_cast<uint64_t>(d));
      for (int t = 0; t < 50; ++t) {
        const ExponentPair pair = randomPair(d, m, rng);
        const EntryLocation loc = monomialEntry(pair, m, d);
        for (int s = 0; s < 3; ++s) {
          const Mat g = sampleHaar(d, rng);
          const Mat sum = assembleDirectSum(m, d, 1, g);
          CHECK(std::abs(sum(loc.row, loc.col) - evalMonomial(pair, g)) <
                1e-12);
        }
      }
    }
  }

  ExponentPair tooBig{2, {3, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK_THROWS_AS(monomialEntry(tooBig, 2, 2), std::invalid_argument);
}

TEST_CASE("applyDirectSum matches the assembled matrix") {
  RngStream rng(84);
  for (const auto& [m, d, dimE] :
       std::vector<std::tuple<int, int, Index>>{{1, 2, 1}, {2, 2, 2}, {1, 3, 1}}) {
    const Mat g = sampleHaar(d, rng);
    const Vec v = randomState(directSumDim(m, d, dimE), rng);
    const Mat dense = assembleDirectSum(m, d, dimE, g);
    CHECK((applyDirectSum(m, d, dimE, g, v) - dense * v).norm() < 1e-12);
  }
  CHECK_THROWS_AS(applyDirectSum(1, 2, 1, Mat::Identity(2, 2), Vec::Zero(5)),
                  std::invalid_argument);
}
