// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LLSCOND_TOOLS_CLI_SUPPORT_HPP
#define LLSCOND_TOOLS_CLI_SUPPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "llscond/llscond.h"

namespace llscond::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view s);

struct Scales {
  bool use_default = true;
  double phi_A = 1.0;
  double phi_B = 1.0;
  double phi_X = 1.0;
};

/// "default" or "A,B,X" with positive finite entries.
Scales parse_scales(std::string_view s);
/// "default" or "a,b".
std::pair<double, double> parse_pair(std::string_view s, std::string_view what);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

int exit_code_for(llscond_status s);

/// Thrown by the CLI layer; carries the status reported by the C API.
struct CliError {
  llscond_status status;
  std::string message;
};

/// Throws CliError if s != LLSCOND_OK.
void check(llscond_status s);

Json problem_json(const llscond_problem* p, std::string_view source);
Json analysis_json(const llscond_problem* p, const llscond_report* r, bool include_catalog);
Json catalog_json(const llscond_report* r);
Json trial_json(const llscond_trial_summary& t);
Json example_json(const llscond_example_spec& spec, const llscond_example_info& info);
Json error_json(llscond_status s, std::string_view message);

/// JSON with every double written to 17 significant digits.
std::string dump_json(const Json& doc);
/// Indented key/value text; doubles to 6 significant digits.
std::string dump_text(const Json& doc);
/// RFC-4180 "key,value" rows with dotted keys; doubles to 17 significant digits.
std::string dump_csv(const Json& doc);

std::string render(const Json& doc, Format f);

}  // namespace llscond::cli

#endif  // LLSCOND_TOOLS_CLI_SUPPORT_HPP
