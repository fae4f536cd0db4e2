#ifndef CELLFORMS_CLI_HPP
#define CELLFORMS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cellforms::cli {

// Exit codes: 0 success, 1 failed verification or internal error,
// 2 domain error or malformed input, 3 quadrature did not converge.
enum ExitCode : int { kOk = 0, kFailure = 1, kDomain = 2, kNoConvergence = 3 };

// args excludes the program name. JSON goes to `out`, help text to `out` too.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace cellforms::cli

#endif  // CELLFORMS_CLI_HPP
