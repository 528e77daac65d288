#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sixj::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kDomain = 3,      // regime, realizability, label range, integrality
  kIo = 4,
  kParse = 5,       // malformed triangulation file
  kValidation = 6,  // triangulation is not a closed complex
  kDegenerate = 7,  // flat tetrahedron
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sixj::cli
