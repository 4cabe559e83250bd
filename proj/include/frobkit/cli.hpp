#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobkit {

/// Runs the command-line interface. `args` is argv without the program name.
/// Exit codes: 0 success, 1 validation/usage error, 2 verification mismatch.
/// Results go to `out` (deterministic for identical args), diagnostics and
/// timings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace frobkit
