#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phasedyn/scenario.hpp"

namespace phasedyn {

struct SweepAxis {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int count = 2;

  /// "name:start:stop:count"; Error("usage") when malformed or count < 2.
  static SweepAxis parse(std::string_view text);
  std::vector<double> values() const;
};

struct SweepSpec {
  Scenario base;
  std::vector<SweepAxis> axes; // one or two
  int jobs = 1;
  bool timing = false;

  void validate() const;
};

/// Categories reported per sweep point, in CSV column order.
const std::vector<std::string>& sweep_categories();

/// Runs verify at every grid point (up to `jobs` concurrently) and writes
///   <axes...>,status,<max residual per category...>,all_pass[,seconds]
/// with rows in grid order. Points outside the family domain are listed
/// with status "invalid" and left out of the verdict. Returns true iff every
/// remaining point passed and at least one point was valid.
bool run_sweep(const SweepSpec& spec, std::ostream& csv);

} // namespace phasedyn
