#include "phasedyn/scenario.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace phasedyn {

namespace {

constexpr std::array<std::pair<Family, const char*>, 9> kFamilies{{
    {Family::su2, "su2"},
    {Family::suq2, "suq2"},
    {Family::witten, "witten"},
    {Family::ab_map, "ab_map"},
    {Family::f_deform, "f_deform"},
    {Family::hermitian_f, "hermitian_f"},
    {Family::oscillator, "oscillator"},
    {Family::q_oscillator, "q_oscillator"},
    {Family::jordan_schwinger, "jordan_schwinger"},
}};

[[noreturn]] void usage(const std::string& msg) { throw Error("usage", msg); }

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) usage(std::string(name) + " must be finite");
}

int to_int(double v, const char* name) {
  if (!std::isfinite(v) || std::abs(v - std::round(v)) > 1e-9) {
    usage(std::string(name) + " must be an integer");
  }
  return static_cast<int>(std::round(v));
}

} // namespace

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilies)
    if (name == n) return f;
  usage("unknown family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  for (const auto& [ff, n] : kFamilies)
    if (ff == f) return n;
  return "?";
}

bool is_spin_family(Family f) {
  return f != Family::oscillator && f != Family::q_oscillator && f != Family::jordan_schwinger;
}

double default_abs_tol() {
  if (const char* env = std::getenv("PHASEDYN_TOL"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end && *end == '\0' && std::isfinite(v) && v >= 0.0) return v;
    usage("PHASEDYN_TOL is not a nonnegative number");
  }
  return 1e-12;
}

Tolerance Scenario::tolerance() const { return Tolerance(tol.value_or(default_abs_tol())); }

double Scenario::effective_muB() const {
  if (muB) return *muB;
  if (family == Family::jordan_schwinger) return omega2 - omega1;
  return 1.0;
}

void Scenario::validate() const {
  if (tol && !(*tol >= 0.0)) usage("tol must be nonnegative");
  for (const auto& [v, n] : {std::pair{theta0, "theta0"}, {phi0, "phi0"}, {omega, "omega"},
                             {omega1, "omega1"}, {omega2, "omega2"}}) {
    require_finite(v, n);
  }
  if (muB) require_finite(*muB, "muB");

  if (is_spin_family(family)) {
    if (!j) usage(family_name(family) + " needs --j");
    if (s) usage(family_name(family) + " takes --j, not --s");
  } else {
    if (!s) usage(family_name(family) + " needs --s");
    if (j) usage(family_name(family) + " takes --s, not --j");
    if (*s < 1) usage("s must be a positive integer");
  }

  if (q && !(*q > 0.0 && std::isfinite(*q))) usage("q must be a positive real");
  if (q_phase && *q_phase < 2) usage("q-phase must be an integer >= 2");
  if (r && !(*r > 0.0 && std::isfinite(*r) && *r != 1.0)) usage("r must be positive and != 1");
  if (f_eps) require_finite(*f_eps, "f-eps");
  if (split != "left" && split != "symmetric") usage("split must be left or symmetric");
  if (f != "auto" && f != "linear" && f != "qbracket") usage("f must be linear or qbracket");

  switch (family) {
  case Family::suq2:
    if (!q) usage("suq2 needs --q");
    break;
  case Family::witten:
    if (!r) usage("witten needs --r");
    break;
  case Family::hermitian_f:
    if (q && q_phase) usage("give --q or --q-phase, not both");
    if (f == "qbracket" && !q && !q_phase) usage("f = qbracket needs --q or --q-phase");
    break;
  case Family::ab_map:
    if (q_phase) usage("ab_map takes a real --q");
    if (f == "qbracket" && !q) usage("f = qbracket needs --q");
    break;
  default:
    break;
  }
}

void Scenario::set_param(const std::string& name, double v) {
  if (name == "j") {
    try {
      j = Spin::from_value(v);
    } catch (const Error& e) {
      usage(e.what());
    }
  } else if (name == "s") {
    s = to_int(v, "s");
  } else if (name == "q") {
    q = v;
  } else if (name == "q-phase") {
    q_phase = to_int(v, "q-phase");
  } else if (name == "r") {
    r = v;
  } else if (name == "f-eps") {
    f_eps = v;
  } else if (name == "theta0") {
    theta0 = v;
  } else if (name == "phi0") {
    phi0 = v;
  } else if (name == "muB") {
    muB = v;
  } else if (name == "omega") {
    omega = v;
  } else if (name == "omega1") {
    omega1 = v;
  } else if (name == "omega2") {
    omega2 = v;
  } else if (name == "tol") {
    tol = v;
  } else {
    usage("unknown parameter '" + name + "'");
  }
}

Json Scenario::to_json() const {
  Json out;
  out["family"] = family_name(family);
  if (j) out["j"] = j->str();
  if (s) out["s"] = *s;
  if (q) out["q"] = *q;
  if (q_phase) out["q-phase"] = *q_phase;
  if (r) out["r"] = *r;
  if (f_eps) out["f-eps"] = *f_eps;
  if (family == Family::ab_map) out["split"] = split;
  if (family == Family::ab_map || family == Family::hermitian_f) out["f"] = f;
  out["theta0"] = theta0;
  out["phi0"] = phi0;
  out["muB"] = effective_muB();
  out["omega"] = omega;
  out["omega1"] = omega1;
  out["omega2"] = omega2;
  out["tol"] = tolerance().abs_tol;
  return out;
}

Scenario Scenario::from_json(const Json& js) {
  if (!js.is_object()) usage("scenario must be a JSON object");
  Scenario sc;
  for (auto it = js.begin(); it != js.end(); ++it) {
    const std::string& key = it.key();
    const Json& v = it.value();
    if (key == "family") {
      if (!v.is_string()) usage("family must be a string");
      sc.family = parse_family(v.get<std::string>());
    } else if (key == "j") {
      try {
        sc.j = v.is_string() ? Spin::parse(v.get<std::string>()) : Spin::from_value(v.get<double>());
      } catch (const Error& e) {
        usage(e.what());
      } catch (const nlohmann::json::exception&) {
        usage("j must be a number or fraction string");
      }
    } else if (key == "split" || key == "f") {
      if (!v.is_string()) usage(key + " must be a string");
      (key == "split" ? sc.split : sc.f) = v.get<std::string>();
    } else {
      if (!v.is_number()) usage(key + " must be a number");
      sc.set_param(key, v.get<double>());
    }
  }
  return sc;
}

} // namespace phasedyn
