#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "focal/census.hpp"

namespace focal::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct FocalOptions {
  std::string form;
  std::uint64_t prime = 0;
  std::optional<int> k;
  std::string format;
};

struct TangentCommandOptions {
  std::string form;
  std::uint64_t prime = 0;
  std::optional<int> k;
  bool homogeneous = false;
  std::string format;
};

struct CensusOptions {
  /// Merged configuration; flags already override the file.
  CensusConfig config;
  std::string config_source;
  bool resume = false;
  std::optional<std::string> json_path;
  std::optional<std::string> csv_path;
  bool quiet = false;
  std::string format;
};

struct VerifyOptions {
  std::string corpus;
  std::string format;
};

struct EstimateOptions {
  double prime = 0;
  int k = 0;
  std::optional<double> n;
  std::optional<double> confidence;
  std::string format;
};

int cmd_focal(const FocalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_tangent(const TangentCommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_census(const CensusOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_estimate_m(const EstimateOptions& opts, std::ostream& out, std::ostream& err);

/// Worker count from FOCAL_WORKERS, else the hardware concurrency.
/// Throws ConfigError for a malformed value.
unsigned default_workers();

/// --corpus, then FOCAL_CORPUS, then the installed copy, then the source tree.
std::string default_corpus();

}  // namespace focal::cli
