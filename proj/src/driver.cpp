// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest/driver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <set>
#include <sstream>

#include "ufest/circuit.hpp"
#include "ufest/estimator.hpp"
#include "ufest/fourier.hpp"
#include "ufest/haar.hpp"

namespace ufest {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string formatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Vec randomState(Index dim, RngStream& rng) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
  return v / v.norm();
}

std::string familyDescriptor(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << cfg.family << "(d=" << cfg.d;
  if (cfg.family == "monomial") os << ";alpha=" << cfg.alpha;
  if (cfg.family == "poly") os << ";deg=" << cfg.coeffs.size() - 1;
  if (cfg.family == "irrep")
    os << ";lambda=(" << cfg.lambda1 << "," << cfg.lambda2 << ");entry=("
       << cfg.entryI << "," << cfg.entryJ << ")";
  os << ")";
  return os.str();
}

std::vector<ReportRow> runEstimate(const ExperimentConfig& cfg) {
  const FunctionSpec spec = cfg.makeSpec();
  RngStream root(*cfg.seed);
  // Documented draw order: the Haar g first, then shot randomness.
  RngStream gStream = root.split(0);
  const Mat g = sampleHaar(cfg.d, gStream);
  RngStream shotStream = root.split(1);

  const EstimationPlan plan = buildPlan(spec);
  const PacResult pac =
      estimatePac(plan, g, cfg.epsilon, cfg.delta, shotStream);

  ReportRow row;
  row.family = familyDescriptor(cfg);
  row.trueValue = eval(spec, g);
  row.estimate = pac.estimate;
  row.absError = std::abs(pac.estimate - *row.trueValue);
  row.shots = pac.shots;
  row.totalQueries = pac.totalQueries;
  row.repEpsilon = repEpsilon(spec, cfg.epsilon);
  return {row};
}

std::vector<ReportRow> runBiasScan(const ExperimentConfig& cfg) {
  const FunctionSpec spec = cfg.makeSpec();
  RngStream root(*cfg.seed);
  const int mMax = cfg.m >= 0 ? cfg.m : buildA(spec).m;
  std::vector<ReportRow> rows;
  for (int mm = 0; mm <= mMax; ++mm) {
    const AForm trunc = buildTruncatedA(spec, 2 * mm);
    const EstimationPlan plan =
        buildPlan(trunc.a, trunc.m, cfg.d, trunc.dimE);
    const McEstimate bias = biasGAverage(plan, spec, cfg.haarSamples,
                                         root.split(static_cast<uint64_t>(mm)));
    ReportRow row;
    row.family = familyDescriptor(cfg) + "[m=" + std::to_string(mm) + "]";
    row.biasG = bias.mean.real();
    row.stderr_ = bias.stderr_;
    row.shots = bias.samples;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> runRep(const ExperimentConfig& cfg) {
  const FunctionSpec spec = cfg.makeSpec();
  ReportRow row;
  row.family = familyDescriptor(cfg);
  row.repEpsilon = repEpsilon(spec, cfg.epsilon);
  return {row};
}

std::vector<ReportRow> runMoments(const ExperimentConfig& cfg) {
  RngStream root(*cfg.seed);
  const int alpha = cfg.alpha;
  const McEstimate est = mcIntegrate(
      [alpha](const Mat& g) -> Complex {
        return std::pow(std::norm(g(0, 0)), alpha);
      },
      cfg.d, cfg.haarSamples, root.split(0));
  ReportRow row;
  row.family = "moment(alpha=" + std::to_string(alpha) +
               ";d=" + std::to_string(cfg.d) + ")";
  row.trueValue = momentG(alpha, cfg.d);
  row.estimate = est.mean;
  row.absError = std::abs(est.mean - *row.trueValue);
  row.stderr_ = est.stderr_;
  row.shots = est.samples;
  return {row};
}

std::vector<ReportRow> runVerifyCircuit(const ExperimentConfig& cfg,
                                        RunStatus& status) {
  RngStream root(*cfg.seed);
  std::vector<std::pair<int, int>> suite;
  if (cfg.m >= 0) {
    suite.emplace_back(cfg.d, cfg.m);
  } else {
    suite = {{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  }

  std::vector<ReportRow> rows;
  double worst = 0.0;
  uint64_t salt = 0;
  for (const auto& [d, m] : suite) {
    const Index dim = RegisterLayout{m, d, 1}.abcdeDim();
    for (int caseNo = 0; caseNo < 10; ++caseNo) {
      RngStream sub = root.split(salt++);
      const Mat g = sampleHaar(d, sub);
      GHadamardInstance inst{m, d, 1, randomState(dim, sub),
                             randomState(dim, sub), caseNo % 2};
      const OutcomeDistribution dist = simulateGHadamard(inst, g);
      const double residual = std::abs(dist.p0 - pZeroFormula(inst, g));
      worst = std::max(worst, residual);
      ReportRow row;
      row.family = "circuit(d=" + std::to_string(d) +
                   ";m=" + std::to_string(m) +
                   ";case=" + std::to_string(caseNo) + ")";
      row.absError = residual;
      row.totalQueries = dist.controlledGApplications;
      if (dist.controlledGApplications != 2 * m) status = RunStatus::NumericalFailure;
      rows.push_back(std::move(row));
    }
  }

  // Unbiasedness spot checks: conditional expectation against the reference.
  const std::vector<FunctionSpec> specs = {
      {cfg.d, NormalizedTrace{}},
      {cfg.d, Monomial{2}},
      {cfg.d, Determinant{}},
  };
  for (const FunctionSpec& spec : specs) {
    const EstimationPlan plan = buildPlan(spec);
    double residual = 0.0;
    for (int t = 0; t < 3; ++t) {
      RngStream sub = root.split(salt++);
      const Mat g = sampleHaar(cfg.d, sub);
      residual = std::max(
          residual, std::abs(conditionalExpectation(plan, g) - eval(spec, g)));
    }
    worst = std::max(worst, residual);
    ReportRow row;
    row.family = std::string("unbiased(") + familyName(spec) +
                 ";d=" + std::to_string(cfg.d) + ")";
    row.absError = residual;
    rows.push_back(std::move(row));
  }
  if (worst >= 1e-9) status = RunStatus::NumericalFailure;
  return rows;
}

ordered_json rowToJson(const ReportRow& row) {
  ordered_json j;
  j["family"] = row.family;
  if (row.trueValue) j["trueValue"] = formatComplex(*row.trueValue);
  if (row.estimate) j["estimate"] = formatComplex(*row.estimate);
  if (row.absError) j["absError"] = *row.absError;
  if (row.shots) j["shots"] = *row.shots;
  if (row.totalQueries) j["totalQueries"] = *row.totalQueries;
  if (row.repEpsilon) j["repEpsilon"] = *row.repEpsilon;
  if (row.biasG) j["biasG"] = *row.biasG;
  if (row.stderr_) j["stderr"] = *row.stderr_;
  return j;
}

std::string rowsToCsv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "family,trueValue,estimate,absError,shots,totalQueries,repEpsilon,"
        "biasG,stderr\n";
  for (const ReportRow& row : rows) {
    os << row.family << ",";
    os << (row.trueValue ? formatComplex(*row.trueValue) : "") << ",";
    os << (row.estimate ? formatComplex(*row.estimate) : "") << ",";
    os << (row.absError ? formatDouble(*row.absError) : "") << ",";
    os << (row.shots ? std::to_string(*row.shots) : "") << ",";
    os << (row.totalQueries ? std::to_string(*row.totalQueries) : "") << ",";
    os << (row.repEpsilon ? std::to_string(*row.repEpsilon) : "") << ",";
    os << (row.biasG ? formatDouble(*row.biasG) : "") << ",";
    os << (row.stderr_ ? formatDouble(*row.stderr_) : "") << "\n";
  }
  return os.str();
}

std::string errorObject(RunStatus status, const std::string& message) {
  ordered_json j;
  j["schema"] = "ufest/1";
  j["error"]["code"] = static_cast<int>(status);
  j["error"]["message"] = message;
  return j.dump(2) + "\n";
}

}  // namespace

std::string formatComplex(const Complex& z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

FunctionSpec ExperimentConfig::makeSpec() const {
  if (family == "monomial") return {d, Monomial{alpha}};
  if (family == "poly") return {d, UnivariatePoly{coeffs}};
  if (family == "trace") return {d, NormalizedTrace{}};
  if (family == "det") return {d, Determinant{}};
  if (family == "irrep")
    return {d, IrrepEntry{IrrepLabel{lambda1, lambda2}, entryI, entryJ}};
  throw std::invalid_argument("unknown family: " + family);
}

void ExperimentConfig::validate() const {
  static const std::set<std::string> commands = {
      "estimate", "bias-scan", "rep", "verify-circuit", "moments"};
  if (!commands.count(command))
    throw std::invalid_argument("unknown command: " + command);
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (command == "estimate" || command == "bias-scan" || command == "rep")
    makeSpec().validate();
  if (command == "estimate" &&
      (epsilon <= 0.0 || epsilon >= 1.0 || delta <= 0.0 || delta >= 1.0))
    throw std::invalid_argument("epsilon, delta must lie in (0,1)");
  if (command == "rep" && epsilon <= 0.0)
    throw std::invalid_argument("epsilon must be positive");
  if (command != "rep" && !seed)
    throw std::invalid_argument("seed is mandatory (no wall-clock default)");
  if (command == "moments" && alpha < 0)
    throw std::invalid_argument("alpha must be nonnegative");
  if (haarSamples < 1)
    throw std::invalid_argument("haar-samples must be positive");
  if (outputFormat != "json" && outputFormat != "csv")
    throw std::invalid_argument("output-format must be json or csv");
}

ExperimentConfig configFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.command = j.value("command", "");
    cfg.family = j.value("family", "");
    cfg.d = j.value("d", 2);
    cfg.alpha = j.value("alpha", 1);
    if (j.contains("coeffs")) {
      for (const auto& c : j["coeffs"]) {
        if (c.is_array())
          cfg.coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        else
          cfg.coeffs.emplace_back(c.get<double>(), 0.0);
      }
    }
    cfg.lambda1 = j.value("lambda1", 0);
    cfg.lambda2 = j.value("lambda2", 0);
    cfg.entryI = j.value("i", 0);
    cfg.entryJ = j.value("j", 0);
    cfg.m = j.value("m", -1);
    cfg.epsilon = j.value("epsilon", 0.1);
    cfg.delta = j.value("delta", 0.05);
    cfg.haarSamples = j.value("haar-samples", cfg.haarSamples);
    cfg.haarSamples = j.value("samples", cfg.haarSamples);
    if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
    cfg.outputFormat = j.value("output-format", "json");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config field error: ") + e.what());
  }
  return cfg;
}

std::string serializeReport(const ExperimentConfig& config,
                            const std::vector<ReportRow>& rows) {
  if (config.outputFormat == "csv") return rowsToCsv(rows);
  ordered_json j;
  j["schema"] = "ufest/1";
  j["command"] = config.command;
  j["rows"] = ordered_json::array();
  for (const ReportRow& row : rows) j["rows"].push_back(rowToJson(row));
  return j.dump(2) + "\n";
}

RunResult run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunResult res;
  try {
    config.validate();
    std::vector<ReportRow> rows;
    if (config.command == "estimate") {
      rows = runEstimate(config);
    } else if (config.command == "bias-scan") {
      rows = runBiasScan(config);
    } else if (config.command == "rep") {
      rows = runRep(config);
    } else if (config.command == "moments") {
      rows = runMoments(config);
    } else {
      rows = runVerifyCircuit(config, res.status);
    }
    res.report = serializeReport(config, rows);
  } catch (const std::invalid_argument& e) {
    res.status = RunStatus::ConfigError;
    res.errorJson = errorObject(res.status, e.what());
  } catch (const ShotBudgetError& e) {
    res.status = RunStatus::BudgetError;
    res.errorJson = errorObject(res.status, e.what());
  } catch (const DimCapError& e) {
    res.status = RunStatus::BudgetError;
    res.errorJson = errorObject(res.status, e.what());
  } catch (const std::exception& e) {
    res.status = RunStatus::NumericalFailure;
    res.errorJson = errorObject(res.status, e.what());
  }
  res.runtimeMillis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return res;
}

}  // namespace ufest
