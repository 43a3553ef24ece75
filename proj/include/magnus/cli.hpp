#pragma once

// magnus-kit command line front end.

#include <iosfwd>
#include <string>
#include <vector>

namespace magnus::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBadPresentation = 2,
  kIterationCap = 3,
  kResourceCap = 4,
};

// args excludes the program name.
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace magnus::cli
