// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it in-process.

#ifndef KRIPKE_CLI_HPP
#define KRIPKE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kripke::cli {

/// Exit codes: 0 positive verdict, 1 negative verdict or counterexample,
/// 2 usage, input or resource error.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kFailure = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kripke::cli

#endif  // KRIPKE_CLI_HPP
