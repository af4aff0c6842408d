// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ufest/functions.hpp"

namespace ufest {

enum class RunStatus : int {
  Ok = 0,
  ConfigError = 2,
  BudgetError = 3,
  NumericalFailure = 4,
};

/// One batch experiment. Field names mirror the CLI flags; see configFromJson
/// for the kebab-case keys accepted in config files.
struct ExperimentConfig {
  std::string command;  // estimate | bias-scan | rep | verify-circuit | moments
  std::string family;   // monomial | poly | trace | det | irrep
  int d = 2;
  int alpha = 1;                 // monomial families and the moments command
  std::vector<Complex> coeffs;   // poly family, a_0..a_k
  int lambda1 = 0;
  int lambda2 = 0;
  int entryI = 0;
  int entryJ = 0;
  int m = -1;  // override where meaningful; -1 means family default
  double epsilon = 0.1;
  double delta = 0.05;
  long haarSamples = 10000;
  std::optional<uint64_t> seed;  // mandatory except for `rep`
  std::string outputFormat = "json";

  FunctionSpec makeSpec() const;
  void validate() const;
};

ExperimentConfig configFromJson(const std::string& text);

struct ReportRow {
  std::string family;
  std::optional<Complex> trueValue;
  std::optional<Complex> estimate;
  std::optional<double> absError;
  std::optional<long> shots;
  std::optional<long> totalQueries;
  std::optional<int> repEpsilon;
  std::optional<double> biasG;
  std::optional<double> stderr_;
};

struct RunResult {
  RunStatus status = RunStatus::Ok;
  std::string report;        // serialized rows (json or csv) when status == Ok
  std::string errorJson;     // machine-readable error object otherwise
  long runtimeMillis = 0;    // never serialized into the report (determinism)
};

RunResult run(const ExperimentConfig& config);

std::string serializeReport(const ExperimentConfig& config,
                            const std::vector<ReportRow>& rows);

/// Complex formatted as "re+imi" with 17 significant digits.
std::string formatComplex(const Complex& z);

}  // namespace ufest
