// phasedyn: build, verify, evolve and sweep deformed SU(2) ladder families.
//
// Exit codes: 0 all checks pass, 1 a check (or construction) failed,
// 2 usage or validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phasedyn/dynamics.hpp"
#include "phasedyn/scenario.hpp"
#include "phasedyn/serialize.hpp"
#include "phasedyn/suite.hpp"
#include "phasedyn/sweep.hpp"

using namespace phasedyn;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string scenario_path;
  std::string family;
  std::string j;
  int s = 0;
  double q = 0, r = 0, theta0 = 0, phi0 = 0, muB = 0, omega = 0, omega1 = 0, omega2 = 0;
  double tol = 0, f_eps = 0;
  int q_phase = 0;
  std::string split, f;
  std::string report, out;
  double t_max = 2.0 * 3.14159265358979323846;
  int steps = 101;
  std::vector<std::string> elements;
  std::vector<std::string> sweep;
  int jobs = 1;
  bool timing = false;
};

// Numeric scenario flags and the Scenario parameter each one sets.
const std::pair<const char*, const char*> kNumericFlags[] = {
    {"--s", "s"},           {"--q", "q"},           {"--q-phase", "q-phase"},
    {"--r", "r"},           {"--f-eps", "f-eps"},   {"--theta0", "theta0"},
    {"--phi0", "phi0"},     {"--muB", "muB"},       {"--omega", "omega"},
    {"--omega1", "omega1"}, {"--omega2", "omega2"}, {"--tol", "tol"},
};

bool given(const CLI::App* app, const std::string& flag) {
  return app->get_option(flag)->count() > 0;
}

void add_scenario_options(CLI::App* app, Options& o) {
  app->add_option("--scenario", o.scenario_path, "JSON scenario file; flags override it");
  app->add_option("--family", o.family,
                  "su2|suq2|witten|ab_map|f_deform|hermitian_f|oscillator|"
                  "q_oscillator|jordan_schwinger");
  app->add_option("--j", o.j, "spin, e.g. 1/2, 3, 2.5");
  auto num = [&](const char* flag, auto& target, const char* help) {
    app->add_option(flag, target, help);
  };
  num("--s", o.s, "oscillator truncation (dimension s+1)");
  num("--q", o.q, "real deformation parameter q > 0");
  num("--q-phase", o.q_phase, "phase deformation q = exp(2 pi i / n)");
  num("--r", o.r, "Witten parameter r > 0, r != 1");
  num("--f-eps", o.f_eps, "F(C, m) = 1 + f_eps m for f_deform");
  num("--theta0", o.theta0, "reference angle of the spin phase operator");
  num("--phi0", o.phi0, "reference angle of the oscillator phase operator");
  num("--muB", o.muB, "product mu B in H = -mu B J0");
  num("--omega", o.omega, "oscillator frequency");
  num("--omega1", o.omega1, "mode A frequency");
  num("--omega2", o.omega2, "mode B frequency");
  num("--tol", o.tol, "absolute tolerance (scaled by dimension)");
  app->add_option("--split", o.split, "ab_map split: left|symmetric");
  app->add_option("--f", o.f, "structure function: linear|qbracket");
}

/// Scenario file first, then explicit flags. Sweeps validate per grid point.
Scenario resolve(const Options& o, const CLI::App* app, bool validate = true) {
  Scenario sc;
  if (!o.scenario_path.empty()) {
    std::ifstream in(o.scenario_path);
    if (!in) throw Error("usage", "cannot open scenario file " + o.scenario_path);
    Json js;
    try {
      js = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error("usage", std::string("scenario file: ") + e.what());
    }
    sc = Scenario::from_json(js);
  } else if (!given(app, "--family")) {
    throw Error("usage", "--family or --scenario is required");
  }
  if (given(app, "--family")) sc.family = parse_family(o.family);
  if (given(app, "--j")) {
    try {
      sc.j = Spin::parse(o.j);
    } catch (const Error& e) {
      throw Error("usage", e.what());
    }
  }
  for (const auto& [flag, name] : kNumericFlags) {
    const CLI::Option* opt = app->get_option(flag);
    if (opt->count() == 0) continue;
    sc.set_param(name, std::stod(opt->as<std::string>()));
  }
  if (given(app, "--split")) sc.split = o.split;
  if (given(app, "--f")) sc.f = o.f;
  if (validate) sc.validate();
  return sc;
}

/// Writes to path, or stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("usage", "cannot write " + path);
  out << text;
}

int cmd_build(const Options& o, const CLI::App* app) {
  const Scenario sc = resolve(o, app);
  const Model model = build_model(sc);
  emit(o.out, dump_json(model.document));
  return 0;
}

int cmd_verify(const Options& o, const CLI::App* app) {
  const Scenario sc = resolve(o, app);
  const CheckReport report = run_verify(sc);
  if (!o.report.empty()) emit(o.report, dump_json(verify_document(sc, report)));
  for (const auto& c : report.checks()) {
    std::printf("%s  %-45s residual=%-12.4g tol=%-10.3g %s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.residual, c.tol, c.detail.c_str());
  }
  std::printf("%zu checks, %s\n", report.size(), report.all_pass() ? "all pass" : "FAILURES");
  return report.all_pass() ? 0 : kExitFail;
}

int cmd_evolve(const Options& o, const CLI::App* app) {
  const Scenario sc = resolve(o, app);
  if (!(o.t_max > 0.0)) throw Error("usage", "--t-max must be positive");
  if (o.steps < 2) throw Error("usage", "--steps must be >= 2");
  const Model model = build_model(sc);

  std::vector<std::pair<Index, Index>> elements;
  for (const auto& e : o.elements) {
    long r = 0, c = 0;
    char tail = 0;
    if (std::sscanf(e.c_str(), "%ld,%ld%c", &r, &c, &tail) != 2) {
      throw Error("usage", "element must be row,col: '" + e + "'");
    }
    if (r < 0 || c < 0 || r >= model.ladder.dim() || c >= model.ladder.dim()) {
      throw Error("usage", "element " + e + " outside the operator");
    }
    elements.emplace_back(r, c);
  }
  if (elements.empty()) elements = nonzero_elements(model.ladder);

  const auto grid = linspace(0.0, o.t_max, o.steps);
  const auto tr = trajectory(model.ladder, model.H, grid, elements);
  std::ostringstream csv;
  write_trajectory_csv(csv, tr);
  emit(o.out, csv.str());
  return 0;
}

int cmd_sweep(const Options& o, const CLI::App* app) {
  SweepSpec spec;
  spec.base = resolve(o, app, false);
  for (const auto& ax : o.sweep) spec.axes.push_back(SweepAxis::parse(ax));
  spec.jobs = o.jobs;
  spec.timing = o.timing;
  std::ostringstream csv;
  const bool ok = run_sweep(spec, csv);
  emit(o.out, csv.str());
  return ok ? 0 : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed SU(2) ladder operators, unitary phase operators and their dynamics"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options o;
  auto* build = app.add_subcommand("build", "write the family's operators as JSON");
  add_scenario_options(build, o);
  build->add_option("--out", o.out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run every identity for the family");
  add_scenario_options(verify, o);
  verify->add_option("--report", o.report, "CheckReport JSON path");

  auto* evolve = app.add_subcommand("evolve", "Heisenberg trajectory of the ladder operator as CSV");
  add_scenario_options(evolve, o);
  evolve->add_option("--t-max", o.t_max, "final time");
  evolve->add_option("--steps", o.steps, "number of time samples, endpoints included");
  evolve->add_option("--elements", o.elements, "matrix elements row,col (default: nonzero ones)");
  evolve->add_option("--out", o.out, "output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "verify over a parameter grid, CSV of max residuals");
  add_scenario_options(sweep, o);
  sweep->add_option("--sweep", o.sweep, "name:start:stop:count (one or two)")->required();
  sweep->add_option("--jobs", o.jobs, "concurrent grid points");
  sweep->add_flag("--timing", o.timing, "add a wall-clock seconds column");
  sweep->add_option("--out", o.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(o, build);
    if (*verify) return cmd_verify(o, verify);
    if (*evolve) return cmd_evolve(o, evolve);
    if (*sweep) return cmd_sweep(o, sweep);
  } catch (const Error& e) {
    std::cerr << "phasedyn: " << e.what() << '\n';
    return e.kind() == "usage" ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "phasedyn: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
