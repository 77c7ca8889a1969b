#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

/// Error with a stable machine-readable code ("NotPrime", "TooLarge", ...).
/// The CLI surfaces the code verbatim in its JSON error record.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace cgt
