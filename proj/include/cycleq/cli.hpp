#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cycleq::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    /// Not equal, not found, or a protocol violation.
    kNegative = 1,
    kUsage = 2,
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Raised by the SIGINT handler installed in main; long searches poll it.
std::atomic<bool>& interrupt_flag();

}  // namespace cycleq::cli
