#include "phasedyn/spin.hpp"

#include <charconv>
#include <cmath>

namespace phasedyn {

namespace {

double parse_number(std::string_view text) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error("bad spin", "cannot parse '" + s + "'");
  }
  if (used != s.size()) throw Error("bad spin", "cannot parse '" + s + "'");
  return v;
}

} // namespace

Spin Spin::from_twice(int twice_j) {
  if (twice_j <= 0) throw Error("bad spin", "j must be positive");
  return Spin(twice_j);
}

Spin Spin::from_value(double j) {
  if (!std::isfinite(j)) throw Error("bad spin", "j must be finite");
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-9) {
    throw Error("bad spin", "j = " + std::to_string(j) + " is not a half-integer");
  }
  return from_twice(static_cast<int>(rounded));
}

Spin Spin::parse(std::string_view text) {
  if (text.empty()) throw Error("bad spin", "empty spin");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_number(text.substr(0, slash));
    const double den = parse_number(text.substr(slash + 1));
    if (den == 0.0) throw Error("bad spin", "zero denominator");
    return from_value(num / den);
  }
  return from_value(parse_number(text));
}

std::string Spin::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

} // namespace phasedyn
