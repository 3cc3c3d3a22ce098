#pragma once

#include <stdexcept>
#include <string>

namespace phasedyn {

/// Library error. `kind()` is a short stable tag ("shape", "bad spin",
/// "negative norm", ...) that callers and the CLI match on.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

} // namespace phasedyn
