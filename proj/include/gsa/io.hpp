#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gsa/config.hpp"
#include "gsa/experiments.hpp"

namespace gsa {

/// Decimal text with 6 significant digits, '.' separator, no locale
/// dependence; identical doubles always produce identical bytes.
std::string format_number(double value);

/// Runs one CLI command and writes its artifacts under config.out_dir:
/// a CSV per result table, two-column plot data files per figure panel, and
/// a manifest.json listing the configuration echo, seed and every file.
/// Commands: indices, sweep, conditional, convergence, timing.
/// Returns the list of files written (relative to out_dir).
std::vector<std::string> dispatch(const std::string& command, const RunConfig& config);

}  // namespace gsa
