#pragma once

#include <stdexcept>
#include <string>

namespace clustexp {

// Domain error carrying a module-qualified code such as "surface.flip_boundary".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Execution policy for kernels that have both a serial reference and an
// OpenMP implementation. Both produce identical, deterministically ordered
// results.
enum class Exec { serial, parallel };

}  // namespace clustexp
