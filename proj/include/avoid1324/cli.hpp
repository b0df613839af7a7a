#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "avoid1324/bounds.hpp"

namespace avoid1324::cli {

enum ExitCode : int { kSuccess = 0, kAssertionFailed = 1, kUsageError = 2 };

/// Runs one command line (args excludes the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const CountReport& report);

/// Header row of `verify --format csv`.
inline constexpr const char* kReportCsvHeader =
    "n,s_n,h_prev_sq,bound_16,headline,corollary_holds,below_16,below_headline,"
    "h_prev_sq_below_headline";

std::string to_csv_row(const CountReport& report);

}  // namespace avoid1324::cli
