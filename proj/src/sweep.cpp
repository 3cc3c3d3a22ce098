#include "phasedyn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "phasedyn/dynamics.hpp"
#include "phasedyn/suite.hpp"

namespace phasedyn {

namespace {

struct PointResult {
  std::vector<double> coords;
  std::string status = "ok";
  std::vector<double> max_residual; // NaN = category absent
  bool all_pass = false;
  double seconds = 0.0;
};

double parse_double(std::string_view s, std::string_view what) {
  const std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != str.size()) {
    throw Error("usage", "bad " + std::string(what) + " '" + str + "' in sweep axis");
  }
  return v;
}

PointResult run_point(const SweepSpec& spec, std::vector<double> coords) {
  PointResult res;
  res.coords = std::move(coords);
  const auto& cats = sweep_categories();
  res.max_residual.assign(cats.size(), std::nan(""));
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Scenario sc = spec.base;
    for (std::size_t k = 0; k < spec.axes.size(); ++k) sc.set_param(spec.axes[k].param, res.coords[k]);
    const CheckReport report = run_verify(sc);
    res.all_pass = report.all_pass();
    for (const auto& c : report.checks()) {
      const auto slash = c.name.find('/');
      const std::string cat = c.name.substr(0, slash);
      const auto it = std::find(cats.begin(), cats.end(), cat);
      if (it == cats.end()) continue;
      double& slot = res.max_residual[static_cast<std::size_t>(it - cats.begin())];
      slot = std::isnan(slot) ? c.residual : std::max(slot, c.residual);
      if (!c.pass && c.name == "algebra/construction") res.status = "error";
    }
    if (!res.all_pass && res.status == "ok") res.status = "fail";
  } catch (const Error&) {
    res.status = "invalid";
    res.all_pass = false;
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

} // namespace

SweepAxis SweepAxis::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(':', pos);
    parts.push_back(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (parts.size() != 4 || parts[0].empty()) {
    throw Error("usage", "sweep axis must be name:start:stop:count");
  }
  SweepAxis ax;
  ax.param = std::string(parts[0]);
  ax.start = parse_double(parts[1], "start");
  ax.stop = parse_double(parts[2], "stop");
  const double count = parse_double(parts[3], "count");
  if (count != std::floor(count) || count < 2) throw Error("usage", "sweep count must be >= 2");
  ax.count = static_cast<int>(count);
  return ax;
}

std::vector<double> SweepAxis::values() const { return linspace(start, stop, count); }

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) throw Error("usage", "sweep takes one or two axes");
  if (jobs < 1) throw Error("usage", "jobs must be >= 1");
  if (axes.size() == 2 && axes[0].param == axes[1].param) {
    throw Error("usage", "sweep axes must differ");
  }
  for (const auto& ax : axes) {
    if (ax.count < 2) throw Error("usage", "sweep count must be >= 2");
    Scenario probe = base;
    probe.set_param(ax.param, ax.start); // rejects unknown names
  }
}

const std::vector<std::string>& sweep_categories() {
  static const std::vector<std::string> cats{"algebra",  "casimir",    "phase",
                                             "dynamics", "derivation", "control"};
  return cats;
}

bool run_sweep(const SweepSpec& spec, std::ostream& csv) {
  spec.validate();
  std::vector<std::vector<double>> grid;
  for (const double v0 : spec.axes[0].values()) {
    if (spec.axes.size() == 1) {
      grid.push_back({v0});
    } else {
      for (const double v1 : spec.axes[1].values()) grid.push_back({v0, v1});
    }
  }

  std::vector<PointResult> results(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) results[i] = run_point(spec, grid[i]);
  };
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), grid.size());
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& ax : spec.axes) csv << ax.param << ',';
  csv << "status";
  for (const auto& c : sweep_categories()) csv << ',' << c;
  csv << ",all_pass";
  if (spec.timing) csv << ",seconds";
  csv << '\n';

  bool all = true;
  bool any_valid = false;
  for (const auto& r : results) {
    for (const double c : r.coords) csv << format_double(c) << ',';
    csv << r.status;
    for (const double v : r.max_residual) {
      csv << ',';
      if (!std::isnan(v)) csv << format_double(v);
    }
    // Points outside the family's domain (r = 1, j not half-integer, ...)
    // are listed but excluded from the verdict.
    const bool invalid = r.status == "invalid";
    csv << ',' << (invalid ? "" : (r.all_pass ? "1" : "0"));
    if (spec.timing) csv << ',' << format_double(r.seconds);
    csv << '\n';
    all = all && (invalid || r.all_pass);
    any_valid = any_valid || !invalid;
  }
  return all && any_valid;
}

} // namespace phasedyn
