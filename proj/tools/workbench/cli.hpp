#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rspec::workbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs the workbench with `args` (program name excluded). CSV goes to
/// --out when given, else to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rspec::workbench
