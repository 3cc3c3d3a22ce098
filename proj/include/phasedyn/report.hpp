#pragma once

#include <string>
#include <vector>

namespace phasedyn {

struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string detail;
};

/// Ordered list of named residual checks.
class CheckReport {
public:
  /// Passes when residual < tol.
  void add(std::string name, double residual, double tol, std::string detail = {});
  /// Passes when residual >= threshold (negative controls).
  void add_at_least(std::string name, double residual, double threshold, std::string detail = {});
  void add_check(Check c) { checks_.push_back(std::move(c)); }
  void append(const CheckReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;
  const Check* find(const std::string& name) const;
  std::size_t size() const { return checks_.size(); }

private:
  std::vector<Check> checks_;
};

} // namespace phasedyn
