#pragma once

#include <string>
#include <vector>

namespace clustexp::cli {

struct Outcome {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage error
  std::string out;
  std::string err;
};

// args excludes the program name: {"expand", "--surface", "a.srf", ...}.
Outcome run(const std::vector<std::string>& args);

}  // namespace clustexp::cli
