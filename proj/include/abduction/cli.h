// Command-line surface: solve, oracle, reduce, check.

#ifndef ABDUCTION_CLI_H_
#define ABDUCTION_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace abduction {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCheckFailed = 3;
inline constexpr int kExitCap = 4;
inline constexpr int kExitYes = 10;
inline constexpr int kExitNo = 20;

// args[0] is the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abduction

#endif  // ABDUCTION_CLI_H_
