#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dendra/suites.hpp"

namespace dendra {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Returns 0 when
/// every check passes, 1 when a counterexample was found, 2 on a usage or
/// configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The report as one JSON object: suite, structure, params, status, checks,
/// counterexample (null or {label, lhs, rhs, diff}), elapsed_ms.
std::string report_json(const SuiteReport& report);

std::string report_text(const SuiteReport& report);

}  // namespace dendra
