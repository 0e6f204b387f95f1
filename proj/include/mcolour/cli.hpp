#pragma once

#include <iosfwd>

namespace mcolour::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,       // verification failed or no colouring found
  kPrecondition = 2,  // bad arguments, unreadable input, violated preconditions
  kInternal = 3,      // self-verification failed or an invariant broke
};

/// Default seed for every randomized subcommand.
inline constexpr unsigned long long kDefaultSeed = 20240917ULL;

/// Runs one command line (argv[0] is the program name). Primary output goes to
/// the `-o` file or `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcolour::cli
