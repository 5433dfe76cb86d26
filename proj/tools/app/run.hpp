#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"

namespace wgm::app {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Executes a validated config. Progress goes to `log`.
Table execute(const RunConfig& cfg, std::ostream& log);

std::string format_csv(const Table& t);
std::string format_json(const Table& t);

enum ExitCode : int { kOk = 0, kFailure = 1, kConfigError = 2, kNonConvergence = 3, kDomainError = 4 };

/// Maps the exception in flight to an exit code; call inside a catch block.
int exit_code_for_current_exception();

}  // namespace wgm::app
