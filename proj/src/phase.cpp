#include "phasedyn/phase.hpp"

#include <cmath>
#include <sstream>

namespace phasedyn {

Operator PhaseOperator::boundary_term() const {
  return (static_cast<double>(dim()) * corner()) * Operator::unit(dim(), corner_row, corner_col);
}

PhaseOperator build_phase_operator(Spin j, double theta0) {
  const Index d = j.dim();
  Operator::Matrix u = Operator::Matrix::Zero(d, d);
  for (Index i = 0; i + 1 < d; ++i) u(i + 1, i) = 1.0;
  u(0, d - 1) = std::polar(1.0, static_cast<double>(d) * theta0);
  return {Operator(std::move(u), "exp(i phi)"), theta0, 0, d - 1};
}

CheckReport polar_reconstruction_report(const Su2Rep& rep, const PolarFactors& f,
                                        const Tolerance& tol) {
  const double t = tol.effective(rep.dim());
  const Operator& u = f.phase.U;
  const Operator ud = u.adjoint();
  CheckReport r;
  r.add("polar_plus_left", residual(f.modP * u, rep.Jp), t, "J+ = sqrt(J+J-) exp(i phi)");
  r.add("polar_plus_right", residual(u * f.modM, rep.Jp), t, "J+ = exp(i phi) sqrt(J-J+)");
  r.add("polar_minus_left", residual(f.modM * ud, rep.Jm), t, "J- = sqrt(J-J+) exp(-i phi)");
  r.add("polar_minus_right", residual(ud * f.modP, rep.Jm), t, "J- = exp(-i phi) sqrt(J+J-)");
  return r;
}

PolarFactors polar_decompose(const Su2Rep& rep, double theta0, const Tolerance& tol) {
  PolarFactors f{psd_sqrt(rep.Jp * rep.Jm, tol).with_label("sqrt(J+J-)"),
                 psd_sqrt(rep.Jm * rep.Jp, tol).with_label("sqrt(J-J+)"),
                 build_phase_operator(rep.j, theta0)};
  const auto report = polar_reconstruction_report(rep, f, tol);
  if (!report.all_pass()) throw Error("postcondition", "polar reconstruction failed");
  return f;
}

double phase_number_commutator_residual(Spin j, double theta0) {
  const auto rep = build_su2(j);
  const auto phase = build_phase_operator(j, theta0);
  const Index d = j.dim();
  const double dd = static_cast<double>(d);
  const Operator& u = phase.U;
  const Operator ud = u.adjoint();

  const Operator rhs_plus =
      -u + (dd * std::polar(1.0, dd * theta0)) * Operator::unit(d, 0, d - 1);
  const Operator rhs_minus =
      -1.0 * (-ud + (dd * std::polar(1.0, -dd * theta0)) * Operator::unit(d, d - 1, 0));

  return std::max(residual(commutator(u, rep.J0), rhs_plus),
                  residual(commutator(ud, rep.J0), rhs_minus));
}

CheckReport phase_ambiguity_demo(Spin j, double theta0, const Tolerance& tol) {
  const auto rep = build_su2(j);
  const auto phase = build_phase_operator(j, theta0);
  const Operator modulus = psd_sqrt(rep.Jp * rep.Jm, tol);
  const Operator candidate = hermitian_pinv(modulus, tol) * rep.Jp;

  const Index d = j.dim();
  const double t = tol.effective(d);
  Index differing = 0;
  Index row = -1;
  Index col = -1;
  for (Index c = 0; c < d; ++c) {
    for (Index r = 0; r < d; ++r) {
      if (std::abs(candidate(r, c) - phase.U(r, c)) > t) {
        ++differing;
        row = r;
        col = c;
      }
    }
  }

  CheckReport report;
  std::ostringstream detail;
  detail << differing << " element(s) undetermined by the ladder operator";
  report.add("undetermined_count", std::abs(static_cast<double>(differing) - 1.0), 0.5,
             detail.str());

  const bool at_corner = differing == 1 && row == phase.corner_row && col == phase.corner_col;
  std::ostringstream where;
  where.precision(17);
  if (at_corner) {
    const cplx missing = phase.U(row, col);
    where << "undetermined element (row m=" << j.m(row) << ", col m=" << j.m(col)
          << ") true value " << missing.real() << (missing.imag() < 0 ? "-" : "+")
          << std::abs(missing.imag()) << "i, recovered 0";
  } else {
    where << "undetermined elements not confined to the corner";
  }
  report.add("undetermined_at_corner", at_corner ? 0.0 : 1.0, 0.5, where.str());
  report.add("recovered_off_corner",
             residual(candidate + phase.corner() * Operator::unit(d, phase.corner_row,
                                                                  phase.corner_col),
                      phase.U),
             t, "pinv(sqrt(J+J-)) J+ plus the corner equals exp(i phi)");
  return report;
}

} // namespace phasedyn
