#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacobi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,    // bad flags, unreadable or malformed input
  kDegenerate = 2,    // no finite transversal, attachment stalls, ...
  kOracleMismatch = 3,
};

// Runs the `jacobi` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hex SHA-256 of the bytes, prefixed "sha256:".
std::string digest(const std::string& bytes);

}  // namespace jacobi::cli
