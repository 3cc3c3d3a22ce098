#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phasedyn/deform.hpp"
#include "phasedyn/phase.hpp"
#include "phasedyn/report.hpp"

namespace phasedyn {

/// Hermitian Hamiltonian, diagonal in the working basis. hbar = 1.
struct Hamiltonian {
  Operator H;
  std::map<std::string, double> params;

  /// Validates hermiticity and diagonality (Error("not hermitian"),
  /// Error("not diagonal")).
  static Hamiltonian from_operator(Operator h, std::map<std::string, double> params = {},
                                   const Tolerance& tol = {});
  /// H = -muB J0 for a dipole precessing about the field axis.
  static Hamiltonian dipole(const Operator& j0, double muB);
  /// H = omega N.
  static Hamiltonian oscillator(const Operator& n, double omega);
  /// H = omega1 N1 + omega2 N2.
  static Hamiltonian two_mode(const Operator& n1, const Operator& n2, double omega1, double omega2);

  Index dim() const { return H.dim(); }
  std::vector<double> energies() const;
  double param(const std::string& name) const;
};

/// dO/dt = (1/i)[O, H].
Operator heisenberg_derivative(const Operator& o, const Hamiltonian& h);

/// residual((1/i)[O, H], lambda O).
double eigenoperator_residual(const Operator& o, const Hamiltonian& h, cplx lambda);

/// exp(iHt) O exp(-iHt), by phase conjugation with the diagonal of H.
Operator evolve(const Operator& o, const Hamiltonian& h, double t);

struct ElementTrack {
  Index row = 0;
  Index col = 0;
  std::vector<cplx> values;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<ElementTrack> tracks;
  std::string operator_label;
};

/// Samples evolve(O, H, t) on t_grid for the listed (row, col) elements.
/// Error("parameter") for an empty or non-ascending grid; Error("shape")
/// for an element outside the operator.
Trajectory trajectory(const Operator& o, const Hamiltonian& h, std::span<const double> t_grid,
                      const std::vector<std::pair<Index, Index>>& elements);

/// n evenly spaced points from a to b inclusive (n >= 2); n == 1 gives {a}.
std::vector<double> linspace(double a, double b, int n);

/// (row, col) of entries with modulus above tol, column-major order.
std::vector<std::pair<Index, Index>> nonzero_elements(const Operator& o, double tol = 1e-14);

/// CSV with header `t,row,col,re,im`, one line per (time, element).
void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

/// residual of the central difference (O(t+dt) - O(t-dt)) / 2dt against
/// (1/i)[O(t), H].
double finite_difference_residual(const Operator& o, const Hamiltonian& h, double t, double dt);

/// Checks that the ladder dynamics follows from the phase-operator equation
///   dU/dt = lambda (U - B),   B = U.boundary_term(),
/// for ladder = U G and partner = K U^dag with G, K diagonal:
///   weights: G, K diagonal and commuting with H;
///   phase_eom_plus / minus: the phase equation (and its adjoint) hold;
///   ladder_plus / minus_from_phase: (dU/dt) G and K (dU^dag/dt) equal the
///   Heisenberg derivatives of ladder and partner and lambda-multiples of them.
/// Tolerances scale with max(1, |lambda|).
CheckReport derive_from_phase(const PhaseOperator& u, const Hamiltonian& h, cplx lambda,
                              const Operator& ladder, const Operator& partner,
                              const Tolerance& tol = {});

/// Same derivation with B dropped from the phase equation. Returns the
/// combined residual of the phase equation and the right-multiplied ladder
/// equation; it equals |lambda| * dim when the derivation is otherwise exact.
double boundary_free_residual(const PhaseOperator& u, const Hamiltonian& h, cplx lambda,
                              const Operator& ladder);

/// Spin case: H must carry "muB" (H = -muB J0), lambda = -i muB. A null
/// triple means the undeformed ladders.
CheckReport derive_ladder_dynamics_from_phase(const Su2Rep& rep, const DeformedTriple* t,
                                              double theta0, const Hamiltonian& h,
                                              const Tolerance& tol = {});

/// Negative control: passes when dropping the boundary term breaks the
/// derivation by at least half of |lambda| * dim.
CheckReport phase_boundary_control(const PhaseOperator& u, const Hamiltonian& h, cplx lambda,
                                   const Operator& ladder);

} // namespace phasedyn
