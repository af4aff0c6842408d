// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ufest/circuit.hpp"
#include "ufest/haar.hpp"

using namespace ufest;
using test::randomState;

namespace {

GHadamardInstance randomInstance(int m, int d, Index dimE, int b,
                                 RngStream& rng) {
  const Index dim = RegisterLayout{m, d, dimE}.abcdeDim();
  return {m, d, dimE, randomState(dim, rng), randomState(dim, rng), b};
}

}  // namespace

TEST_CASE("register layout dimensions") {
  const RegisterLayout lay{2, 3, 2};
  CHECK(lay.abcdeDim() == 6 * 6 * 6 * 6 * 2);
  CHECK(lay.totalDim() == 2 * lay.abcdeDim());
  CHECK(lay.abcdeRadices() ==
        std::vector<Index>{2, 3, 2, 3, 2, 3, 2, 3, 2});
}

TEST_CASE("identity cases pin the output distribution") {
  const int m = 1, d = 2;
  const Index dim = RegisterLayout{m, d, 1}.abcdeDim();
  Vec phi = Vec::Zero(dim);
  phi(0) = 1.0;
  const Mat g = Mat::Identity(d, d);

  // g = I, phi = psi: the overlap is 1, so p0 = 1 for b = 0.
  GHadamardInstance same{m, d, 1, phi, phi, 0};
  OutcomeDistribution dist = simulateGHadamard(same, g);
  CHECK(dist.p0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dist.controlledGApplications == 2);

  // b = 1 reads the imaginary part of 1, so p0 = 1/2.
  same.b = 1;
  dist = simulateGHadamard(same, g);
  CHECK(dist.p0 == doctest::Approx(0.5).epsilon(1e-12));

  // psi = -phi: overlap -1, p0 = 0 for b = 0.
  GHadamardInstance flipped{m, d, 1, phi, Vec(-phi), 0};
  dist = simulateGHadamard(flipped, g);
  CHECK(dist.p0 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("simulator agrees with the closed formula") {
  for (int d : {2, 3}) {
    for (int m : {1, 2}) {
      RngStream rng(71, static_cast<uint64_t>(d * 8 + m));
      for (int t = 0; t < 10; ++t) {
        const Mat g = sampleHaar(d, rng);
        const GHadamardInstance inst = randomInstance(m, d, 1, t % 2, rng);
        const OutcomeDistribution dist = simulateGHadamard(inst, g);
        CHECK(std::abs(dist.p0 - pZeroFormula(inst, g)) < 1e-10);
        CHECK(dist.p0 + dist.p1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dist.p0 >= 0.0);
        CHECK(dist.p1 >= 0.0);
        CHECK(dist.controlledGApplications == 2 * m);
        CHECK(queryCount(inst) == 2 * m);
      }
    }
  }
}

TEST_CASE("auxiliary register E rides along untouched") {
  RngStream rng(72);
  const Mat g = sampleHaar(2, rng);
  const GHadamardInstance inst = randomInstance(1, 2, 3, 0, rng);
  const OutcomeDistribution dist = simulateGHadamard(inst, g);
  CHECK(std::abs(dist.p0 - pZeroFormula(inst, g)) < 1e-10);
}

TEST_CASE("m = 0 degenerates to the plain Hadamard test") {
  RngStream rng(73);
  const GHadamardInstance inst{0, 2, 2, randomState(2, rng),
                               randomState(2, rng), 0};
  const OutcomeDistribution dist = simulateGHadamard(inst, Mat::Identity(2, 2));
  const Complex overlap = inst.phi.dot(inst.psi);
  CHECK(dist.p0 == doctest::Approx((1.0 + overlap.real()) / 2).epsilon(1e-12));
  CHECK(dist.controlledGApplications == 0);
  CHECK(queryCount(inst) == 0);
}

TEST_CASE("overlap formula matches a dense matrix oracle") {
  // <phi| (I + g-dagger)_AB (x) (I + g)_CD (x) I_E |psi> assembled explicitly.
  RngStream rng(74);
  for (int m : {1, 2}) {
    const int d = 2;
    const Mat g = sampleHaar(d, rng);
    const GHadamardInstance inst = randomInstance(m, d, 1, 0, rng);
    Mat op = Mat::Identity(1, 1);
    for (int k = 0; k < m; ++k)
      op = tensor(op, directSum(Mat::Identity(d, d), Mat(g.adjoint())));
    for (int k = 0; k < m; ++k)
      op = tensor(op, directSum(Mat::Identity(d, d), g));
    const Complex oracle = inst.phi.dot(op * inst.psi);
    CHECK(std::abs(overlapFormula(inst, g) - oracle) < 1e-12);
  }
}

TEST_CASE("invalid instances are rejected") {
  RngStream rng(75);
  const Index dim = RegisterLayout{1, 2, 1}.abcdeDim();
  const Vec phi = randomState(dim, rng);

  GHadamardInstance badB{1, 2, 1, phi, phi, 2};
  CHECK_THROWS_AS(simulateGHadamard(badB, Mat::Identity(2, 2)),
                  std::invalid_argument);

  GHadamardInstance badNorm{1, 2, 1, Vec(2.0 * phi), phi, 0};
  CHECK_THROWS_AS(simulateGHadamard(badNorm, Mat::Identity(2, 2)),
                  std::invalid_argument);

  GHadamardInstance ok{1, 2, 1, phi, phi, 0};
  CHECK_THROWS_AS(simulateGHadamard(ok, Mat(2.0 * Mat::Identity(2, 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulateGHadamard(ok, Mat::Identity(3, 3)),
                  std::invalid_argument);
}
