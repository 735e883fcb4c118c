#pragma once

#include "e7/mpoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace e7 {

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::map<std::string, std::string> artifact_hashes;  // name -> sha256 hex
  bool passed() const;
  // {schema, suite, status, checks, artifact_hashes}
  std::string to_json() const;
};

struct SuiteOptions {
  Rational eta = 1;
  unsigned threads = 1;
  std::optional<std::string> delta_file;  // wdvv: read delta~ instead of recomputing
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite; "all" runs every suite in order.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opt);

std::string sha256_hex(const std::string& data);
// E7M_THREADS, at least 1.
unsigned threads_from_env();

// Canonical text of delta~ / delta_ST34 as emitted by the CLI.
std::string discriminant_text(const std::string& which);

}  // namespace e7
