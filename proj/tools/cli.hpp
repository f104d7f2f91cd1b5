#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unicyclic::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kClaimFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace unicyclic::cli
