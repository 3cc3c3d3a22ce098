#include "phasedyn/report.hpp"

#include <algorithm>
#include <cmath>

namespace phasedyn {

void CheckReport::add(std::string name, double residual, double tol, std::string detail) {
  const bool pass = std::isfinite(residual) && residual < tol;
  checks_.push_back({std::move(name), residual, tol, pass, std::move(detail)});
}

void CheckReport::add_at_least(std::string name, double residual, double threshold,
                               std::string detail) {
  const bool pass = std::isfinite(residual) && residual >= threshold;
  checks_.push_back({std::move(name), residual, threshold, pass, std::move(detail)});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

bool CheckReport::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

const Check* CheckReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

} // namespace phasedyn
