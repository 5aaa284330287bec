#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigmoment::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // unschedulable or disagreement
inline constexpr int kUsage = 2;     // bad command line or input

/// Runs one command. `args` excludes the program name; `in` backs the "-"
/// input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sigmoment::cli
