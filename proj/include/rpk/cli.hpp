#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rpk {

namespace exit_code {
inline constexpr int kFound = 0;         // kernel found / set valid
inline constexpr int kAbsent = 1;        // proven absent / set invalid
inline constexpr int kInputError = 2;    // unreadable input, bad arguments
inline constexpr int kUnknown = 3;       // beyond the brute-force bound
inline constexpr int kPrecondition = 4;  // hypothesis of the chosen method fails
inline constexpr int kInternal = 5;      // a construction failed its own validation
}  // namespace exit_code

/// The rpk command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpk
