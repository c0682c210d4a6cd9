// Copyright 2026 The EJM Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Command-line front end: argument handling, report assembly and export.
 *
 * Exit codes: 0 success, 1 a verification failed, 2 invalid arguments.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ejm/optimize.hpp"

namespace ejm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv };

/// A command's result. `body` always carries "schema" and "version";
/// `table` is present only for sweeps and enables CSV export.
struct Report {
    nlohmann::ordered_json body;
    std::optional<std::vector<optimize::SweepSample>> table;
};

/// JSON: pretty-printed body plus a trailing newline. CSV: header
/// "value,S" and one row per sample with 17 significant digits. Throws
/// ArgumentError when CSV is requested for a report without a table.
std::string export_report(const Report &report, Format format);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ejm::cli
