#pragma once

#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace snccoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

struct Options {
  bool json = false;
  std::optional<std::size_t> degree_bound;
  std::optional<std::size_t> form_degree;
  std::size_t max_page = 2;
  std::string field = "rational";
};

struct Outcome {
  int exit_code = kExitOk;
  json report;
};

const std::vector<std::string>& command_names();

/// Runs one command on a parsed document. Throws SchemaError or
/// snccoh::Error on bad input; verification failures come back as exit 2.
Outcome run(const std::string& command, const json& document, const std::string& input_name, const Options& options);

/// Aligned plain-text rendering of a report.
std::string render_text(const json& report);

}  // namespace snccoh::cli
