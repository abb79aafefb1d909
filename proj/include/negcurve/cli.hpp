#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace negcurve {

enum ExitCode : int { ExitOk = 0, ExitVerificationFailed = 1, ExitUsage = 2 };

/// Runs one invocation; args excludes the program name. Results go to `out`
/// (or to --out FILE, written atomically), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negcurve
