#pragma once

#include "phasedyn/operator.hpp"
#include "phasedyn/report.hpp"
#include "phasedyn/su2.hpp"

namespace phasedyn {

/// Unitary shift-with-corner operator exp(i phi) (spin) or exp(i Phi)
/// (finite oscillator). All entries are on the shift band except one corner
/// element of modulus one whose phase is dim * reference_angle.
struct PhaseOperator {
  Operator U;
  double reference_angle = 0.0;
  Index corner_row = 0;
  Index corner_col = 0;

  Index dim() const { return U.dim(); }
  cplx corner() const { return U(corner_row, corner_col); }
  /// dim * corner * |corner_row><corner_col|: the term by which the
  /// commutator with the number-like generator departs from +-U.
  Operator boundary_term() const;
};

/// exp(i phi) = sum_m |j,m+1><j,m| + exp(i(2j+1) theta0) |j,-j><j,j|.
PhaseOperator build_phase_operator(Spin j, double theta0);

struct PolarFactors {
  Operator modP; // sqrt(J+ J-)
  Operator modM; // sqrt(J- J+)
  PhaseOperator phase;
};

/// Polar decomposition of the ladder pair. Throws Error("postcondition") if
/// any of the four reconstructions exceeds tol.
PolarFactors polar_decompose(const Su2Rep& rep, double theta0, const Tolerance& tol = {});

/// Residuals of the four reconstructions J+ = modP U = U modM,
/// J- = modM U^dag = U^dag modP.
CheckReport polar_reconstruction_report(const Su2Rep& rep, const PolarFactors& f,
                                        const Tolerance& tol = {});

/// Max residual of [exp(+-i phi), J0] against
/// +-{ -exp(+-i phi) + (2j+1) exp(+-i(2j+1)theta0) |+-(-j)><+-j| }.
double phase_number_commutator_residual(Spin j, double theta0);

/// Candidate phase pinv(sqrt(J+J-)) J+ versus the true exp(i phi): they
/// differ exactly at the corner (row -j, col +j), the one element the
/// ladder operator cannot fix.
CheckReport phase_ambiguity_demo(Spin j, double theta0, const Tolerance& tol = {});

} // namespace phasedyn
