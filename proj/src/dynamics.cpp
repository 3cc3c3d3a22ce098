#include "phasedyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace phasedyn {

namespace {

const cplx kI(0.0, 1.0);

double offdiag_norm(const Operator& o) {
  Operator::Matrix m = o.matrix();
  m.diagonal().setZero();
  return m.norm();
}

} // namespace

Hamiltonian Hamiltonian::from_operator(Operator h, std::map<std::string, double> params,
                                       const Tolerance& tol) {
  const double t = tol.effective(h.dim());
  if (residual(h, h.adjoint()) >= t) throw Error("not hermitian", "Hamiltonian is not hermitian");
  if (!h.is_diagonal(t)) throw Error("not diagonal", "Hamiltonian must be diagonal");
  return {h.with_label("H"), std::move(params)};
}

Hamiltonian Hamiltonian::dipole(const Operator& j0, double muB) {
  return from_operator(-muB * j0, {{"muB", muB}});
}

Hamiltonian Hamiltonian::oscillator(const Operator& n, double omega) {
  return from_operator(omega * n, {{"omega", omega}});
}

Hamiltonian Hamiltonian::two_mode(const Operator& n1, const Operator& n2, double omega1,
                                  double omega2) {
  return from_operator(omega1 * n1 + omega2 * n2, {{"omega1", omega1}, {"omega2", omega2}});
}

std::vector<double> Hamiltonian::energies() const {
  std::vector<double> e(static_cast<std::size_t>(dim()));
  for (Index i = 0; i < dim(); ++i) e[static_cast<std::size_t>(i)] = H(i, i).real();
  return e;
}

double Hamiltonian::param(const std::string& name) const {
  const auto it = params.find(name);
  if (it == params.end()) throw Error("parameter", "Hamiltonian has no parameter " + name);
  return it->second;
}

Operator heisenberg_derivative(const Operator& o, const Hamiltonian& h) {
  return -kI * commutator(o, h.H);
}

double eigenoperator_residual(const Operator& o, const Hamiltonian& h, cplx lambda) {
  return residual(heisenberg_derivative(o, h), lambda * o);
}

Operator evolve(const Operator& o, const Hamiltonian& h, double t) {
  require_same_dim(o, h.H);
  const auto e = h.energies();
  Operator::Matrix m = o.matrix();
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index r = 0; r < m.rows(); ++r) {
      const double w = e[static_cast<std::size_t>(r)] - e[static_cast<std::size_t>(c)];
      m(r, c) *= std::polar(1.0, w * t);
    }
  }
  return Operator(std::move(m), o.label());
}

Trajectory trajectory(const Operator& o, const Hamiltonian& h, std::span<const double> t_grid,
                      const std::vector<std::pair<Index, Index>>& elements) {
  if (t_grid.empty()) throw Error("parameter", "empty time grid");
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) {
    throw Error("parameter", "time grid must be ascending");
  }
  Trajectory tr;
  tr.times.assign(t_grid.begin(), t_grid.end());
  tr.operator_label = o.label();
  for (const auto& [r, c] : elements) {
    if (r < 0 || c < 0 || r >= o.dim() || c >= o.dim()) {
      throw Error("shape", "element (" + std::to_string(r) + "," + std::to_string(c) +
                               ") outside operator");
    }
    tr.tracks.push_back({r, c, {}});
  }
  for (const double t : tr.times) {
    const Operator ot = evolve(o, h, t);
    for (auto& track : tr.tracks) track.values.push_back(ot(track.row, track.col));
  }
  return tr;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw Error("parameter", "linspace needs n >= 1");
  if (n == 1) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = a + (b - a) * k / (n - 1);
  out.back() = b;
  return out;
}

std::vector<std::pair<Index, Index>> nonzero_elements(const Operator& o, double tol) {
  std::vector<std::pair<Index, Index>> out;
  for (Index c = 0; c < o.dim(); ++c)
    for (Index r = 0; r < o.dim(); ++r)
      if (std::abs(o(r, c)) > tol) out.emplace_back(r, c);
  return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,row,col,re,im\n";
  char buf[160];
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    for (const auto& track : tr.tracks) {
      const cplx v = track.values[k];
      std::snprintf(buf, sizeof buf, "%.17g,%ld,%ld,%.17g,%.17g\n", tr.times[k],
                    static_cast<long>(track.row), static_cast<long>(track.col), v.real(),
                    v.imag());
      os << buf;
    }
  }
}

double finite_difference_residual(const Operator& o, const Hamiltonian& h, double t, double dt) {
  const Operator central = (1.0 / (2.0 * dt)) * (evolve(o, h, t + dt) - evolve(o, h, t - dt));
  return residual(central, heisenberg_derivative(evolve(o, h, t), h));
}

CheckReport derive_from_phase(const PhaseOperator& u, const Hamiltonian& h, cplx lambda,
                              const Operator& ladder, const Operator& partner,
                              const Tolerance& tol) {
  require_same_dim(u.U, h.H);
  require_same_dim(ladder, h.H);
  require_same_dim(partner, h.H);
  const double t = tol.effective(h.dim()) * std::max(1.0, std::abs(lambda));
  const Operator ud = u.U.adjoint();
  const Operator boundary = u.boundary_term();

  const Operator g = ud * ladder;   // ladder = U G
  const Operator k = partner * u.U; // partner = K U^dag

  CheckReport r;
  r.add("weights_diagonal", std::max(offdiag_norm(g), offdiag_norm(k)), t,
        "G = U^dag X and K = Y U are functions of the number-like generator");
  r.add("weights_commute_H",
        std::max(frobenius_norm(commutator(g, h.H)), frobenius_norm(commutator(k, h.H))), t,
        "[G, H] = [K, H] = 0");

  const Operator rhs_plus = lambda * (u.U - boundary);
  const Operator rhs_minus = std::conj(lambda) * (ud - boundary.adjoint());
  r.add("phase_eom_plus", residual(heisenberg_derivative(u.U, h), rhs_plus), t,
        "dU/dt = lambda (U - dim e^{i dim theta0} |corner>)");
  r.add("ladder_plus_from_phase",
        std::max(residual(rhs_plus * g, heisenberg_derivative(ladder, h)),
                 residual(rhs_plus * g, lambda * ladder)),
        t, "(dU/dt) G = dX/dt = lambda X; boundary term annihilated by G");
  r.add("phase_eom_minus", residual(heisenberg_derivative(ud, h), rhs_minus), t,
        "dU^dag/dt = conj(lambda) (U^dag - B^dag)");
  r.add("ladder_minus_from_phase",
        std::max(residual(k * rhs_minus, heisenberg_derivative(partner, h)),
                 residual(k * rhs_minus, std::conj(lambda) * partner)),
        t, "K (dU^dag/dt) = dY/dt = conj(lambda) Y");
  return r;
}

double boundary_free_residual(const PhaseOperator& u, const Hamiltonian& h, cplx lambda,
                              const Operator& ladder) {
  const Operator g = u.U.adjoint() * ladder;
  const Operator rhs = lambda * u.U;
  return std::max(residual(heisenberg_derivative(u.U, h), rhs),
                  residual(rhs * g, heisenberg_derivative(ladder, h)));
}

CheckReport phase_boundary_control(const PhaseOperator& u, const Hamiltonian& h, cplx lambda,
                                   const Operator& ladder) {
  const double expected = std::abs(lambda) * static_cast<double>(u.dim());
  CheckReport r;
  r.add_at_least("boundary_term_removed", boundary_free_residual(u, h, lambda, ladder),
                 0.5 * expected,
                 "dropping the boundary term from the phase equation must break it");
  return r;
}

CheckReport derive_ladder_dynamics_from_phase(const Su2Rep& rep, const DeformedTriple* t,
                                              double theta0, const Hamiltonian& h,
                                              const Tolerance& tol) {
  require_same_dim(rep.J0, h.H);
  const double muB = h.param("muB");
  const auto u = build_phase_operator(rep.j, theta0);
  const Operator& plus = t ? t->Jp : rep.Jp;
  const Operator& minus = t ? t->Jm : rep.Jm;
  if (plus.dim() != rep.dim()) throw Error("shape", "triple built over a different rep");
  return derive_from_phase(u, h, -kI * muB, plus, minus, tol);
}

} // namespace phasedyn
