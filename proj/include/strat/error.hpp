#pragma once

#include <stdexcept>
#include <string>

namespace strat {

// All library failures carry a stable machine-readable code ("NotDivisible",
// "MixedRings", ...) plus a human message. CLI maps codes to exit status 2.
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

inline void require(bool ok, const std::string& code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace strat
