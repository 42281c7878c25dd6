#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invkit/io.hpp"

namespace invkit::cli {

/// Exit statuses of a job.
enum ExitCode : int { kOk = 0, kRefuted = 1, kInvalidInput = 2 };

struct JobConfig {
  std::string command;
  /// Path to a group JSON file, or a classical kind name (Sl, Sp, O, SO) for its standard form.
  std::optional<std::string> group;
  std::optional<std::string> presentation;  // path to a presentation JSON file
  std::optional<std::string> matrix;        // inline JSON matrix for semistable / plucker
  std::optional<int> m, n, t, max_degree, exponent, dmax;
  Field field;
  unsigned threads = 1;
  std::string route = "automatic";  // pgg route: automatic | presentation | literal
};

struct JobResult {
  int exit_code = kOk;
  io::Json output;  // always carries "schema_version" and "command"
};

const std::vector<std::string>& commands();

/// Runs one subcommand. Invalid input yields kInvalidInput with an "error" field.
JobResult run(const JobConfig& config);

}  // namespace invkit::cli
