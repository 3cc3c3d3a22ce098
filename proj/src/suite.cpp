#include "phasedyn/suite.hpp"

#include <cmath>
#include <numbers>

#include "phasedyn/deform.hpp"
#include "phasedyn/oscillator.hpp"
#include "phasedyn/phase.hpp"
#include "phasedyn/su2.hpp"

namespace phasedyn {

namespace {

const cplx kI(0.0, 1.0);

Json header(const Scenario& sc) {
  Json doc;
  doc["version"] = kVersion;
  doc["scenario"] = sc.to_json();
  return doc;
}

FSpec structure_function(const Scenario& sc) {
  const bool want_q = sc.f == "qbracket" || (sc.f == "auto" && (sc.q || sc.q_phase));
  if (!want_q) return FSpec::linear();
  if (sc.q_phase) return FSpec::q_bracket_2x(QParam::root_of_unity(*sc.q_phase));
  return FSpec::q_bracket_2x(QParam::real(*sc.q));
}

CasimirFunction linear_F(double eps) {
  return [eps](double, double m) { return 1.0 + eps * m; };
}

/// A spin-family scenario after construction.
struct SpinSetup {
  Su2Rep rep;
  DeformedTriple triple;
  std::optional<WittenGenerators> witten;
  std::optional<GSolution> g;
  std::optional<FSpec> f;
};

SpinSetup build_spin(const Scenario& sc) {
  const Tolerance tol = sc.tolerance();
  SpinSetup st{build_su2(*sc.j), {}, {}, {}, {}};
  const Su2Rep& rep = st.rep;
  switch (sc.family) {
  case Family::su2:
    st.triple = {rep.Jp, rep.Jm, rep.J0, {"su2", {{"j", rep.j.value()}}}, true};
    st.f = FSpec::linear();
    st.g = GSolution::from_function(rep.j, [](double x) { return x * (x + 1.0); },
                                    rep.j.casimir_value());
    break;
  case Family::suq2: {
    st.triple = build_suq2(rep.j, *sc.q, tol);
    const QParam q = QParam::real(*sc.q);
    st.f = FSpec::q_bracket_2x(q);
    st.g = GSolution::from_function(
        rep.j, [q](double x) { return q_number(x, q) * q_number(x + 1.0, q); });
    st.g->periodic = (*st.g)(rep.j.value());
    break;
  }
  case Family::witten:
    st.witten = build_witten(rep.j, *sc.r, tol);
    st.triple = st.witten->as_triple();
    break;
  case Family::ab_map: {
    st.f = structure_function(sc);
    st.g = solve_g(*st.f, rep.j, 0.0);
    const auto split = sc.split == "symmetric" ? ABSplit::symmetric() : ABSplit::left();
    st.triple = build_AB_map(rep, *st.g, split, tol);
    break;
  }
  case Family::f_deform:
    st.triple = build_F_deformation(rep, linear_F(sc.f_eps.value_or(0.1)), tol);
    st.triple.provenance.params["f_eps"] = sc.f_eps.value_or(0.1);
    break;
  case Family::hermitian_f:
    st.f = structure_function(sc);
    st.triple = build_hermitian_deformed(rep.j, *st.f, tol);
    st.g = solve_g(*st.f, rep.j, 0.0);
    break;
  default:
    throw Error("usage", "not a spin family");
  }
  return st;
}

void spin_base_checks(const Su2Rep& rep, double theta0, const Tolerance& tol, CheckReport& out) {
  const Index d = rep.dim();
  const double t = tol.effective(d);
  const auto id = Operator::identity(d);
  const double cval = rep.j.casimir_value();

  out.add("algebra/su2_J0_Jp", residual(commutator(rep.J0, rep.Jp), rep.Jp), t, "[J0, J+] = J+");
  out.add("algebra/su2_J0_Jm", residual(commutator(rep.J0, rep.Jm), -rep.Jm), t, "[J0, J-] = -J-");
  out.add("algebra/su2_Jp_Jm", residual(commutator(rep.Jp, rep.Jm), 2.0 * rep.J0), t,
          "[J+, J-] = 2 J0");
  const Operator c1 = rep.Jm * rep.Jp + rep.J0 * (rep.J0 + id);
  const Operator c2 = rep.Jp * rep.Jm + rep.J0 * (rep.J0 - id);
  out.add("casimir/su2_lower_first", residual(c1, cval * id), t, "J-J+ + J0(J0+1) = j(j+1)");
  out.add("casimir/su2_raise_first", residual(c2, cval * id), t, "J+J- + J0(J0-1) = j(j+1)");
  out.add("casimir/su2_central",
          std::max({frobenius_norm(commutator(c1, rep.Jp)), frobenius_norm(commutator(c1, rep.Jm)),
                    frobenius_norm(commutator(c1, rep.J0))}),
          t, "[C, X] = 0");

  const auto u = build_phase_operator(rep.j, theta0);
  out.add("phase/unitarity",
          std::max(residual(u.U * u.U.adjoint(), id), residual(u.U.adjoint() * u.U, id)), t,
          "U U^dag = U^dag U = 1");
  const PolarFactors pf{psd_sqrt(rep.Jp * rep.Jm, tol), psd_sqrt(rep.Jm * rep.Jp, tol), u};
  out.append(polar_reconstruction_report(rep, pf, tol), "phase/");
  out.add("phase/number_commutator", phase_number_commutator_residual(rep.j, theta0), t,
          "[e^{+-i phi}, J0] with the (2j+1) corner term");
  const auto other = build_phase_operator(rep.j, theta0 + 1.1);
  out.add("phase/theta0_independence", residual(pf.modP * u.U, pf.modP * other.U), t,
          "J+ rebuilt at theta0 and theta0 + 1.1 agree");
  out.append(phase_ambiguity_demo(rep.j, theta0, tol), "phase/ambiguity_");
}

void spin_dynamics_checks(const SpinSetup& st, const Scenario& sc, const Tolerance& tol,
                          CheckReport& out) {
  const double muB = sc.effective_muB();
  const auto h = Hamiltonian::dipole(st.rep.J0, muB);
  const cplx lambda = -kI * muB;
  const double t = tol.effective(st.rep.dim()) * std::max(1.0, std::abs(muB));
  const DeformedTriple& tr = st.triple;

  out.add("dynamics/ladder_plus", eigenoperator_residual(tr.Jp, h, lambda), t,
          "dJ+~/dt = -i muB J+~");
  out.add("dynamics/ladder_minus", eigenoperator_residual(tr.Jm, h, std::conj(lambda)), t,
          "dJ-~/dt = +i muB J-~");
  out.add("dynamics/conserved", eigenoperator_residual(tr.J0, h, 0.0), t,
          st.witten ? "dW0/dt = 0" : "dJ0~/dt = 0");
  out.add("dynamics/evolve_phase_law", residual(evolve(tr.Jp, h, 1.0), std::exp(lambda) * tr.Jp),
          t, "J+~(t=1) = exp(-i muB) J+~");

  out.append(derive_ladder_dynamics_from_phase(st.rep, &tr, sc.theta0, h, tol), "derivation/");
  out.append(phase_boundary_control(build_phase_operator(st.rep.j, sc.theta0), h, lambda, tr.Jp),
             "control/");
}

void spin_family_checks(const SpinSetup& st, const Scenario& sc, const Tolerance& tol,
                        CheckReport& out) {
  const Su2Rep& rep = st.rep;
  const DeformedTriple& tr = st.triple;
  const double t = tol.effective(rep.dim());

  if (sc.family != Family::witten) {
    out.add("algebra/deformed_J0_ladder", ladder_residual(tr, rep.J0), t, "[J0, J+-~] = +-J+-~");
  }
  if (st.f) {
    out.add("algebra/structure", structure_residual(tr, *st.f, tol), t,
            "[J+~, J-~] = f(J0~), " + st.f->description);
  }
  if (tr.hermitian_pair || sc.family == Family::suq2 || sc.family == Family::hermitian_f) {
    out.add("algebra/hermitian_pair", residual(tr.Jm, tr.Jp.adjoint()), t, "J-~ = (J+~)^dag");
  }
  if (st.g && sc.family != Family::su2) out.append(deformed_casimir_report(tr, *st.g, tol), "casimir/");

  switch (sc.family) {
  case Family::suq2:
    out.add("algebra/hermitian_map_equivalence",
            residual(build_hermitian_deformed(rep.j, *st.f, tol).Jp, tr.Jp), t,
            "hermitian map with f = [2x]_q equals the SU_q(2) irrep");
    break;
  case Family::witten:
    out.append(witten_relations(*st.witten, tol), "algebra/");
    out.add("algebra/witten_J0_ladder", ladder_residual(tr, rep.J0), t, "[J0, W+-] = +-W+-");
    break;
  case Family::f_deform: {
    const auto F = linear_F(sc.f_eps.value_or(0.1));
    out.append(f_deformation_relations(rep, tr, F, tol), "algebra/");
    const auto ab = build_weighted_ladders(
        rep, F, [&](double c, double m) { return F(c, m + 1.0); }, {"ab_map", {}}, tol);
    out.add("algebra/f_as_ab_map", residual(commutator(ab.Jp, ab.Jm), commutator(tr.Jp, tr.Jm)), t,
            "A = F(C,J0), B = F(C,J0+1) gives the same [J+~, J-~]");
    break;
  }
  case Family::ab_map:
    out.add("algebra/hermitian_flag",
            sc.split == "symmetric" && !tr.hermitian_pair ? 1.0 : 0.0, 0.5,
            tr.hermitian_pair ? "J-~ = (J+~)^dag" : "J-~ != (J+~)^dag");
    break;
  default:
    break;
  }
}

Operator truncated_annihilation(int s, const std::vector<double>& squared) {
  Operator::Matrix m = Operator::Matrix::Zero(s + 1, s + 1);
  for (int n = 1; n <= s; ++n) m(n - 1, n) = std::sqrt(squared[static_cast<std::size_t>(n)]);
  return Operator(std::move(m));
}

void oscillator_checks(const PhaseOperator& u, const Operator& n, const Operator& a,
                       const Operator& adag, const Operator& reference, double omega,
                       const Tolerance& tol, CheckReport& out) {
  const Index d = n.dim();
  const double t = tol.effective(d);
  const double td = t * std::max(1.0, std::abs(omega));
  const auto id = Operator::identity(d);
  const auto h = Hamiltonian::oscillator(n, omega);
  const cplx lambda = -kI * omega;

  out.add("algebra/a_N", residual(commutator(a, n), a), t, "[a, N] = a");
  out.add("algebra/adag_N", residual(commutator(adag, n), -adag), t, "[a^dag, N] = -a^dag");
  out.add("phase/unitarity",
          std::max(residual(u.U * u.U.adjoint(), id), residual(u.U.adjoint() * u.U, id)), t,
          "U U^dag = U^dag U = 1");
  out.add("phase/polar", residual(a, reference), t, "exp(i Phi) sqrt(.) equals the ladder elements");
  out.add("phase/boundary_annihilated", frobenius_norm(u.boundary_term() * (u.U.adjoint() * a)), t,
          "|s><0| times the modulus vanishes");
  out.add("dynamics/a", eigenoperator_residual(a, h, lambda), td, "da/dt = -i omega a");
  out.add("dynamics/adag", eigenoperator_residual(adag, h, std::conj(lambda)), td,
          "da^dag/dt = +i omega a^dag");
  out.add("dynamics/conserved", eigenoperator_residual(n, h, 0.0), td, "dN/dt = 0");
  out.append(derive_from_phase(u, h, lambda, a, adag, tol), "derivation/");
  out.append(phase_boundary_control(u, h, lambda, a), "control/");
}

CheckReport verify_checks(const Scenario& sc) {
  const Tolerance tol = sc.tolerance();
  CheckReport out;
  if (is_spin_family(sc.family)) {
    const SpinSetup st = build_spin(sc);
    spin_base_checks(st.rep, sc.theta0, tol, out);
    spin_family_checks(st, sc, tol, out);
    spin_dynamics_checks(st, sc, tol, out);
    return out;
  }

  const int s = *sc.s;
  switch (sc.family) {
  case Family::oscillator: {
    const auto osc = build_finite_oscillator(s, sc.phi0, tol);
    std::vector<double> levels(static_cast<std::size_t>(s + 1));
    for (int n = 0; n <= s; ++n) levels[static_cast<std::size_t>(n)] = n;
    oscillator_checks(osc.U, osc.N, osc.a, osc.adag, truncated_annihilation(s, levels), sc.omega,
                      tol, out);
    break;
  }
  case Family::q_oscillator: {
    const auto qo = build_q_oscillator(s, sc.phi0, tol);
    double min_rad = qo.radicands.size() > 1 ? qo.radicands[1] : 0.0;
    for (std::size_t n = 1; n < qo.radicands.size(); ++n) min_rad = std::min(min_rad, qo.radicands[n]);
    out.add("algebra/positivity", std::max(0.0, -min_rad), tol.effective(qo.dim()),
            "min radicand over n = 1..s is " + format_double(min_rad));
    out.add("algebra/Nprime",
            residual(qo.Nprime, qo.N - qo.n0 * Operator::identity(qo.dim())),
            tol.effective(qo.dim()), "N' = N - n0");
    oscillator_checks(qo.U, qo.N, qo.a_q, qo.a_qdag, truncated_annihilation(s, qo.radicands),
                      sc.omega, tol, out);
    break;
  }
  case Family::jordan_schwinger: {
    const auto qa = build_q_oscillator(s, sc.phi0, tol);
    const auto qb = build_q_oscillator(s, sc.phi0, tol);
    const auto js = jordan_schwinger(qa, qb, tol);
    const DeformedTriple& tr = js.triple;
    const Index d = tr.dim();
    const double t = tol.effective(d);
    const double muB = sc.effective_muB();
    const double td = t * std::max({1.0, std::abs(muB), std::abs(sc.omega1), std::abs(sc.omega2)});
    const auto h = Hamiltonian::two_mode(js.N1, js.N2, sc.omega1, sc.omega2);
    const cplx lambda = -kI * muB;

    out.add("algebra/J0_ladder", ladder_residual(tr, tr.J0), t, "[J0, J+-~] = +-J+-~");
    out.add("algebra/hermitian_pair", residual(tr.Jm, tr.Jp.adjoint()), t, "J-~ = (J+~)^dag");
    out.add("algebra/vacuum_annihilated", tr.Jp.matrix().col(0).norm(), t, "J+~ |0,0> = 0");
    out.add("dynamics/ladder_plus", eigenoperator_residual(tr.Jp, h, lambda), td,
            "dJ+~/dt = -i muB J+~ with muB = omega2 - omega1");
    out.add("dynamics/ladder_minus", eigenoperator_residual(tr.Jm, h, std::conj(lambda)), td,
            "dJ-~/dt = +i muB J-~");
    out.add("dynamics/conserved", eigenoperator_residual(tr.J0, h, 0.0), td, "dJ0/dt = 0");
    const auto ha = Hamiltonian::oscillator(qa.N, sc.omega1);
    const auto hb = Hamiltonian::oscillator(qb.N, sc.omega2);
    out.append(derive_from_phase(qa.U, ha, -kI * sc.omega1, qa.a_q, qa.a_qdag, tol),
               "derivation/mode_a_");
    out.append(derive_from_phase(qb.U, hb, -kI * sc.omega2, qb.a_q, qb.a_qdag, tol),
               "derivation/mode_b_");
    out.append(phase_boundary_control(qa.U, ha, -kI * sc.omega1, qa.a_q), "control/mode_a_");
    break;
  }
  default:
    break;
  }
  return out;
}

Json spin_document(const Scenario& sc, const SpinSetup& st) {
  Json doc = header(sc);
  doc["basis"] = kSpinBasis;
  if (sc.family == Family::su2) {
    doc["operators"] = {{"Jp", to_json(st.rep.Jp)}, {"Jm", to_json(st.rep.Jm)},
                        {"J0", to_json(st.rep.J0)}};
  } else {
    doc["triple"] = to_json(st.triple);
  }
  doc["phase"] = to_json(build_phase_operator(st.rep.j, sc.theta0).U);
  doc["theta0"] = sc.theta0;
  return doc;
}

} // namespace

Model build_model(const Scenario& sc) {
  sc.validate();
  const Tolerance tol = sc.tolerance();
  if (is_spin_family(sc.family)) {
    const SpinSetup st = build_spin(sc);
    const double muB = sc.effective_muB();
    return {st.triple.Jp, st.triple.Jm, st.triple.J0, Hamiltonian::dipole(st.rep.J0, muB),
            -kI * muB, spin_document(sc, st)};
  }
  const int s = *sc.s;
  Json doc = header(sc);
  switch (sc.family) {
  case Family::oscillator: {
    const auto osc = build_finite_oscillator(s, sc.phi0, tol);
    doc["basis"] = kOscillatorBasis;
    doc["metadata"] = {{"s", s}, {"phi0", sc.phi0}};
    doc["operators"] = {{"N", to_json(osc.N)}, {"a", to_json(osc.a)},
                        {"adag", to_json(osc.adag)}, {"U", to_json(osc.U.U)}};
    return {osc.a, osc.adag, osc.N, Hamiltonian::oscillator(osc.N, sc.omega), -kI * sc.omega,
            std::move(doc)};
  }
  case Family::q_oscillator: {
    const auto qo = build_q_oscillator(s, sc.phi0, tol);
    doc["basis"] = kOscillatorBasis;
    doc["metadata"] = {{"s", s},
                       {"n0", qo.n0},
                       {"q_arg", 2.0 * std::numbers::pi / (s + 1)},
                       {"phi0", sc.phi0},
                       {"radicands", qo.radicands},
                       {"positive_norm", true}};
    doc["operators"] = {{"a_q", to_json(qo.a_q)}, {"a_qdag", to_json(qo.a_qdag)},
                        {"Nprime", to_json(qo.Nprime)}, {"U", to_json(qo.U.U)}};
    return {qo.a_q, qo.a_qdag, qo.N, Hamiltonian::oscillator(qo.N, sc.omega), -kI * sc.omega,
            std::move(doc)};
  }
  case Family::jordan_schwinger: {
    const auto qa = build_q_oscillator(s, sc.phi0, tol);
    const auto js = jordan_schwinger(qa, qa, tol);
    doc["basis"] = kTwoModeBasis;
    doc["metadata"] = {{"s", s},
                       {"n0", qa.n0},
                       {"q_arg", 2.0 * std::numbers::pi / (s + 1)},
                       {"omega1", sc.omega1},
                       {"omega2", sc.omega2}};
    doc["triple"] = to_json(js.triple);
    doc["operators"] = {{"N1", to_json(js.N1)}, {"N2", to_json(js.N2)}};
    const double muB = sc.effective_muB();
    return {js.triple.Jp, js.triple.Jm, js.triple.J0,
            Hamiltonian::two_mode(js.N1, js.N2, sc.omega1, sc.omega2), -kI * muB, std::move(doc)};
  }
  default:
    throw Error("usage", "unhandled family");
  }
}

CheckReport run_verify(const Scenario& sc) {
  sc.validate();
  try {
    return verify_checks(sc);
  } catch (const Error& e) {
    if (e.kind() == "usage") throw;
    CheckReport r;
    r.add_check({"algebra/construction", 1.0, 0.0, false, e.what()});
    return r;
  }
}

Json verify_document(const Scenario& sc, const CheckReport& report) {
  Json doc = header(sc);
  doc["all_pass"] = report.all_pass();
  doc["checks"] = to_json(report);
  return doc;
}

} // namespace phasedyn
