// Copyright 2026 the ufest authors
// SPDX-License-Identifier: Apache-2.0
#include "ufest.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "ufest/driver.hpp"
#include "ufest/fourier.hpp"
#include "ufest/haar.hpp"

struct ufest_ctx {
  std::string lastError;
};

namespace {

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

ufest_ctx* ufest_ctx_new(void) { return new (std::nothrow) ufest_ctx(); }

void ufest_ctx_free(ufest_ctx* ctx) { delete ctx; }

const char* ufest_last_error(const ufest_ctx* ctx) {
  return ctx == nullptr ? "" : ctx->lastError.c_str();
}

int ufest_run_json(ufest_ctx* ctx, const char* config_json,
                   char** report_out) {
  if (ctx == nullptr || config_json == nullptr || report_out == nullptr)
    return static_cast<int>(ufest::RunStatus::ConfigError);
  *report_out = nullptr;
  ctx->lastError.clear();
  try {
    const ufest::ExperimentConfig cfg = ufest::configFromJson(config_json);
    const ufest::RunResult res = ufest::run(cfg);
    if (!res.report.empty()) *report_out = dupString(res.report);
    if (res.status != ufest::RunStatus::Ok) ctx->lastError = res.errorJson;
    return static_cast<int>(res.status);
  } catch (const std::invalid_argument& e) {
    ctx->lastError = e.what();
    return static_cast<int>(ufest::RunStatus::ConfigError);
  } catch (const std::exception& e) {
    ctx->lastError = e.what();
    return static_cast<int>(ufest::RunStatus::NumericalFailure);
  }
}

void ufest_string_free(char* s) { std::free(s); }

double ufest_moment_g(int alpha, int d) {
  try {
    return ufest::momentG(alpha, d);
  } catch (const std::exception&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

int ufest_rep_epsilon(ufest_ctx* ctx, const char* spec_json, double epsilon,
                      int* rep_out) {
  if (ctx == nullptr || spec_json == nullptr || rep_out == nullptr)
    return static_cast<int>(ufest::RunStatus::ConfigError);
  ctx->lastError.clear();
  try {
    const ufest::ExperimentConfig cfg = ufest::configFromJson(spec_json);
    *rep_out = ufest::repEpsilon(cfg.makeSpec(), epsilon);
    return static_cast<int>(ufest::RunStatus::Ok);
  } catch (const std::invalid_argument& e) {
    ctx->lastError = e.what();
    return static_cast<int>(ufest::RunStatus::ConfigError);
  } catch (const std::exception& e) {
    ctx->lastError = e.what();
    return static_cast<int>(ufest::RunStatus::NumericalFailure);
  }
}

const char* ufest_version(void) { return "ufest 1.0.0 (schema ufest/1)"; }

}  // extern "C"
