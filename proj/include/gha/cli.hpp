#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gha::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitSyntaxError = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on domain errors (a
/// precondition such as deg f > 1 failed), 2 on syntax or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gha::cli
