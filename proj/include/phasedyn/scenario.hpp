#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasedyn/operator.hpp"
#include "phasedyn/serialize.hpp"
#include "phasedyn/spin.hpp"

namespace phasedyn {

enum class Family {
  su2,
  suq2,
  witten,
  ab_map,
  f_deform,
  hermitian_f,
  oscillator,
  q_oscillator,
  jordan_schwinger,
};

Family parse_family(std::string_view name);
std::string family_name(Family f);
bool is_spin_family(Family f);

/// Resolved run configuration shared by the CLI subcommands. Field names
/// mirror the command-line flags; scenario files use the same keys.
struct Scenario {
  Family family = Family::su2;
  std::optional<Spin> j;
  std::optional<int> s;
  std::optional<double> q;
  std::optional<int> q_phase; // hermitian_f: q = exp(2 pi i / q_phase)
  std::optional<double> r;
  std::optional<double> f_eps; // f_deform: F(C, m) = 1 + f_eps m
  std::string split = "left";   // ab_map: left | symmetric
  std::string f = "auto";       // ab_map / hermitian_f: linear | qbracket | auto
  double theta0 = 0.0;
  double phi0 = 0.0;
  std::optional<double> muB;
  double omega = 1.0;
  double omega1 = 1.0;
  double omega2 = 2.0;
  std::optional<double> tol;

  /// Explicit --tol, else PHASEDYN_TOL from the environment, else 1e-12.
  Tolerance tolerance() const;
  /// muB as given, or omega2 - omega1 for jordan_schwinger, or 1.
  double effective_muB() const;
  /// Throws Error("usage") when parameters do not fit the family.
  void validate() const;

  /// Sets a numeric parameter by flag name; Error("usage") if unknown.
  void set_param(const std::string& name, double value);

  Json to_json() const;
  static Scenario from_json(const Json& j);
};

/// Default tolerance honouring the PHASEDYN_TOL environment variable.
double default_abs_tol();

} // namespace phasedyn
