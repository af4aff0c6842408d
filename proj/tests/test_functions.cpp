// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ufest/embed.hpp"
#include "ufest/estimator.hpp"
#include "ufest/fourier.hpp"
#include "ufest/functions.hpp"
#include "ufest/haar.hpp"

using namespace ufest;

namespace {

std::vector<FunctionSpec> shippedSpecs() {
  std::vector<FunctionSpec> specs;
  for (int alpha : {0, 1, 2, 3}) specs.push_back({2, Monomial{alpha}});
  specs.push_back({2, UnivariatePoly{{Complex(1, 2), 0.0, Complex(0.5, 0), 1.0}}});
  specs.push_back({2, NormalizedTrace{}});
  specs.push_back({3, NormalizedTrace{}});
  specs.push_back({2, Determinant{}});
  specs.push_back({3, Determinant{}});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      specs.push_back({2, IrrepEntry{{2, 0}, i, j}});
      specs.push_back({2, IrrepEntry{{1, -1}, i, j}});
    }
  return specs;
}

}  // namespace

TEST_CASE("eval reference values") {
  CHECK(eval({3, NormalizedTrace{}}, Mat::Identity(3, 3)) == Complex(1.0));

  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = Complex(0, 1);
  diag(1, 1) = 1.0;
  CHECK(std::abs(eval({2, Determinant{}}, diag) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(eval({2, Monomial{3}}, diag) - Complex(0, -1)) < 1e-15);

  const Complex a = std::polar(1.0, 0.4), b = std::polar(1.0, -1.1);
  Mat ab = Mat::Zero(2, 2);
  ab(0, 0) = a;
  ab(1, 1) = b;
  CHECK(std::abs(eval({2, IrrepEntry{{2, 0}, 0, 0}}, ab) - a * a) < 1e-14);

  RngStream rng(41);
  const Mat g = sampleHaar(2, rng);
  const FunctionSpec poly{2, UnivariatePoly{{1.0, Complex(0, 2), 3.0}}};
  const Complex expected = 1.0 + Complex(0, 2) * g(0, 0) + 3.0 * g(0, 0) * g(0, 0);
  CHECK(std::abs(eval(poly, g) - expected) < 1e-14);

  CHECK_THROWS_AS(eval({2, Monomial{1}}, Mat(2.0 * Mat::Identity(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("validation rejects malformed specs") {
  CHECK_THROWS_AS(FunctionSpec({2, Monomial{-1}}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec({3, IrrepEntry{{2, 0}, 0, 0}}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec({2, IrrepEntry{{2, 0}, 3, 0}}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec({2, IrrepEntry{{0, 2}, 0, 0}}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec({2, IrrepEntry{{3, -2}, 0, 0}}).validate(),
                  std::invalid_argument);  // ambient degree 5 > 4
  CHECK_THROWS_AS(FunctionSpec({0, NormalizedTrace{}}).validate(),
                  std::invalid_argument);
}

TEST_CASE("AForm identity: trace representation reproduces eval") {
  for (const FunctionSpec& spec : shippedSpecs()) {
    const AForm form = buildA(spec);
    CHECK(traceNorm(form.a) ==
          doctest::Approx(form.claimedTraceNorm).epsilon(1e-9));
    RngStream rng(42);
    for (int t = 0; t < 20; ++t) {
      const Mat g = sampleHaar(spec.d, rng);
      const Mat sum = assembleDirectSum(form.m, spec.d, form.dimE, g);
      const Complex lhs = (form.a * sum).trace();
      CHECK(std::abs(lhs - eval(spec, g)) < 1e-9);
    }
  }
}

TEST_CASE("trace norms and truncation powers per family") {
  CHECK(buildA({2, Monomial{2}}).claimedTraceNorm ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(buildA({2, Monomial{2}}).m == 2);
  CHECK(buildA({3, NormalizedTrace{}}).claimedTraceNorm ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(buildA({3, NormalizedTrace{}}).m == 1);
  CHECK(buildA({3, Determinant{}}).claimedTraceNorm ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(buildA({3, Determinant{}}).m == 3);

  // UnivariatePoly: entries land in distinct blocks, so the trace norm is
  // the coefficient l1 norm.
  const FunctionSpec poly{2, UnivariatePoly{{Complex(3, 4), 0.0, 2.0}}};
  CHECK(buildA(poly).claimedTraceNorm == doctest::Approx(7.0).epsilon(1e-12));

  // Holomorphic irrep entries are rank-1 with unit norm; the mixed label
  // picks up Schmidt weight from the partial transpose on entangled columns.
  CHECK(buildA({2, IrrepEntry{{2, 0}, 1, 2}}).claimedTraceNorm ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(buildA({2, IrrepEntry{{2, 0}, 1, 2}}).m == 2);
  CHECK(buildA({2, IrrepEntry{{1, -1}, 0, 0}}).m == 1);
  CHECK(buildA({2, IrrepEntry{{1, -1}, 0, 2}}).claimedTraceNorm ==
        doctest::Approx(1.0).epsilon(1e-9));

  // Degree bookkeeping against the monomial enumeration convention.
  CHECK(degree({2, Monomial{3}}) == 3);
  CHECK(degree({5, NormalizedTrace{}}) == 1);
  CHECK(degree({4, Determinant{}}) == 4);
  CHECK(degree({2, IrrepEntry{{2, -1}, 0, 0}}) == 3);
  CHECK(degree({2, UnivariatePoly{{1.0, 1.0, 0.0}}}) == 1);
}

TEST_CASE("irrepAmbient splits signs") {
  CHECK(irrepAmbient({2, 0}).m == 2);
  CHECK(irrepAmbient({2, 0}).mbar == 0);
  CHECK(irrepAmbient({1, -1}).m == 1);
  CHECK(irrepAmbient({1, -1}).mbar == 1);
  CHECK(irrepAmbient({-1, -2}).m == 0);
  CHECK(irrepAmbient({-1, -2}).mbar == 3);
}

TEST_CASE("buildTruncatedA drops high-degree components") {
  // g_11^3 truncated to degree <= 2 has no surviving component.
  const AForm zero = buildTruncatedA({2, Monomial{3}}, 2);
  CHECK(zero.claimedTraceNorm == 0.0);

  // 1 + g_11^3 keeps only the constant.
  const FunctionSpec poly{2, UnivariatePoly{{Complex(2, 0), 0.0, 0.0, 1.0}}};
  const AForm constOnly = buildTruncatedA(poly, 2);
  CHECK(constOnly.m == 0);
  CHECK(constOnly.claimedTraceNorm == doctest::Approx(2.0).epsilon(1e-12));
  RngStream rng(43);
  const Mat g = sampleHaar(2, rng);
  const Mat sum = assembleDirectSum(constOnly.m, 2, 1, g);
  CHECK(std::abs((constOnly.a * sum).trace() - 2.0) < 1e-12);

  // Full-degree truncation reproduces the complete AForm.
  const AForm full = buildTruncatedA(poly, 3);
  CHECK((full.a - buildA(poly).a).norm() == 0.0);

  CHECK(buildTruncatedA({2, Determinant{}}, 1).claimedTraceNorm == 0.0);
}

TEST_CASE("qBound accounting") {
  // shots(eps, delta, 1) * 2m with the explicit Hoeffding constant.
  const long shots = pacShots(0.1, 0.05, 1.0);
  CHECK(qBound({4, NormalizedTrace{}}, 0.1, 0.05) == 2 * shots);
  CHECK(qBound({2, Monomial{3}}, 0.1, 0.05) == 6 * shots);  // linear in alpha
  CHECK(qBound({2, IrrepEntry{{2, 0}, 0, 0}}, 0.1, 0.05) == 4 * shots);

  // Upper bound dominates the lower bound for the shipped families.
  for (int d : {2, 3}) {
    for (const FunctionSpec& spec :
         {FunctionSpec{d, NormalizedTrace{}}, FunctionSpec{d, Determinant{}},
          FunctionSpec{d, Monomial{3}}}) {
      CHECK(qBound(spec, 0.05, 0.05) >= repBound(spec, 0.05));
    }
  }
}

TEST_CASE("supNormBound and normSqL2") {
  CHECK(supNormBound({2, Determinant{}}) == 1.0);
  CHECK(supNormBound({2, UnivariatePoly{{Complex(3, 4), 1.0}}}) == 6.0);
  CHECK(normSqL2({3, NormalizedTrace{}}) == doctest::Approx(1.0 / 9));
  CHECK(normSqL2({2, Monomial{2}}) == doctest::Approx(1.0 / 3));
  CHECK(normSqL2({2, IrrepEntry{{2, 0}, 0, 1}}) == doctest::Approx(1.0 / 3));

  // MC cross-check for one nontrivial case.
  const FunctionSpec poly{2, UnivariatePoly{{1.0, Complex(0, 1)}}};
  const McEstimate mc = mcIntegrate(
      [&](const Mat& g) -> Complex { return std::norm(eval(poly, g)); }, 2,
      50000, RngStream(44));
  CHECK(std::abs(mc.mean.real() - normSqL2(poly)) < 4 * mc.stderr_);
}

TEST_CASE("familyName strings match the CLI vocabulary") {
  CHECK(std::string(familyName({2, Monomial{1}})) == "monomial");
  CHECK(std::string(familyName({2, UnivariatePoly{{1.0}}})) == "poly");
  CHECK(std::string(familyName({2, NormalizedTrace{}})) == "trace");
  CHECK(std::string(familyName({2, Determinant{}})) == "det");
  CHECK(std::string(familyName({2, IrrepEntry{{2, 0}, 0, 0}})) == "irrep");
}
