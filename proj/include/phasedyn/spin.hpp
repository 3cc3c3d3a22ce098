#pragma once

#include <string>
#include <string_view>

#include "phasedyn/operator.hpp"

namespace phasedyn {

/// Half-integer spin j >= 1/2, stored exactly as the integer 2j.
class Spin {
public:
  static Spin from_twice(int twice_j);
  /// Accepts "p/q" fractions ("5/2"), integers ("3") and decimals ("2.5").
  static Spin parse(std::string_view text);
  static Spin from_value(double j);

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }
  Index dim() const { return twice_ + 1; }
  /// Magnetic quantum number of basis index i (ascending, i = m + j).
  double m(Index i) const { return static_cast<double>(i) - value(); }
  /// Casimir eigenvalue j(j+1).
  double casimir_value() const { return value() * (value() + 1.0); }
  std::string str() const;

  friend bool operator==(Spin, Spin) = default;

private:
  explicit Spin(int twice) : twice_(twice) {}
  int twice_;
};

} // namespace phasedyn
