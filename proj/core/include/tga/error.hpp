#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tga {

// All recoverable failures carry a stable machine-readable code next to the
// human-readable message; the CLI maps codes to exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

}  // namespace tga
