// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch experiment driver. Everything below talks to the core through the
// C API only; the JSON plumbing here just assembles config objects.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufest.h"

namespace {

using nlohmann::json;

struct FlagValues {
  std::string configPath;
  std::string family;
  int d = 2;
  int alpha = 1;
  std::vector<double> coeffs;
  int lambda1 = 0;
  int lambda2 = 0;
  int entryI = 0;
  int entryJ = 0;
  int m = -1;
  double epsilon = 0.1;
  double delta = 0.05;
  long haarSamples = 10000;
  uint64_t seed = 0;
  std::string output;
  std::string outputFormat = "json";
};

void addCommonFlags(CLI::App* cmd, FlagValues& v) {
  cmd->add_option("--config", v.configPath,
                  "JSON config file; explicit flags override its keys");
  cmd->add_option("--family", v.family,
                  "monomial | poly | trace | det | irrep");
  cmd->add_option("--d", v.d, "unitary group dimension");
  cmd->add_option("--alpha", v.alpha, "monomial exponent / moment order");
  cmd->add_option("--coeffs", v.coeffs,
                  "real polynomial coefficients a0 a1 ...");
  cmd->add_option("--lambda1", v.lambda1, "irrep signature, first part");
  cmd->add_option("--lambda2", v.lambda2, "irrep signature, second part");
  cmd->add_option("--i", v.entryI, "irrep entry row");
  cmd->add_option("--j", v.entryJ, "irrep entry column");
  cmd->add_option("--m", v.m, "tensor-power override");
  cmd->add_option("--epsilon", v.epsilon, "accuracy parameter");
  cmd->add_option("--delta", v.delta, "failure probability");
  cmd->add_option("--haar-samples,--samples", v.haarSamples,
                  "Monte-Carlo sample count");
  cmd->add_option("--seed", v.seed, "RNG seed (mandatory except for rep)");
  cmd->add_option("--output", v.output, "report path (default: stdout)");
  cmd->add_option("--output-format", v.outputFormat, "json | csv");
}

json buildConfig(const CLI::App* cmd, const FlagValues& v,
                 const std::string& command) {
  json cfg;
  if (!v.configPath.empty()) {
    std::ifstream in(v.configPath);
    if (!in) throw CLI::ValidationError("--config", "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = json::parse(buf.str(), nullptr, true, true);
  }
  cfg["command"] = command;
  const auto setIf = [&](const char* flag, const char* key, const json& val) {
    if (cmd->count(flag) > 0) cfg[key] = val;
  };
  setIf("--family", "family", v.family);
  setIf("--d", "d", v.d);
  setIf("--alpha", "alpha", v.alpha);
  setIf("--coeffs", "coeffs", v.coeffs);
  setIf("--lambda1", "lambda1", v.lambda1);
  setIf("--lambda2", "lambda2", v.lambda2);
  setIf("--i", "i", v.entryI);
  setIf("--j", "j", v.entryJ);
  setIf("--m", "m", v.m);
  setIf("--epsilon", "epsilon", v.epsilon);
  setIf("--delta", "delta", v.delta);
  setIf("--haar-samples", "haar-samples", v.haarSamples);
  setIf("--seed", "seed", v.seed);
  setIf("--output-format", "output-format", v.outputFormat);
  return cfg;
}

int execute(const json& cfg, const std::string& outputPath) {
  ufest_ctx* ctx = ufest_ctx_new();
  if (ctx == nullptr) {
    std::cerr << "out of memory\n";
    return 4;
  }
  char* report = nullptr;
  const auto start = std::chrono::steady_clock::now();
  const int status = ufest_run_json(ctx, cfg.dump().c_str(), &report);
  const long millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  if (report != nullptr) {
    if (outputPath.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(outputPath, std::ios::binary);
      out << report;
    }
    ufest_string_free(report);
  }
  if (status != 0) std::cerr << ufest_last_error(ctx) << "\n";
  // Runtime is log-only so that reports stay byte-identical across runs.
  std::cerr << "runtime-millis: " << millis << "\n";
  ufest_ctx_free(ctx);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ufest: estimate polynomial functions of an unknown unitary "
               "from controlled-g queries"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", []() { return ufest_version(); });

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"estimate", "PAC-estimate f(g) for a Haar-random g"},
      {"bias-scan", "Haar-averaged squared bias of m-truncated plans"},
      {"rep", "minimal circuit power needed for accuracy epsilon"},
      {"verify-circuit", "check the simulator against the closed formula"},
      {"moments", "Monte-Carlo check of the |g_11|^2alpha Haar moments"}};
  std::vector<FlagValues> values(commands.size());
  std::vector<CLI::App*> subs;
  for (size_t k = 0; k < commands.size(); ++k) {
    CLI::App* sub = app.add_subcommand(commands[k].first, commands[k].second);
    addCommonFlags(sub, values[k]);
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  for (size_t k = 0; k < commands.size(); ++k) {
    if (subs[k]->parsed()) {
      try {
        const json cfg = buildConfig(subs[k], values[k], commands[k].first);
        return execute(cfg, values[k].output);
      } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
    }
  }
  std::cerr << app.help();
  return 2;
}
