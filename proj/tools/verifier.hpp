#pragma once

#include <iosfwd>
#include <stdexcept>

namespace fraclog::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kDomain = 3 };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses argv (argv[0] is the program name), runs one subcommand, returns an ExitCode.
/// Tables go to files or `out`; summaries and diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fraclog::cli
