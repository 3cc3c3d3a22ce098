#include "phasedyn/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace phasedyn {

namespace {

Operator number_operator(int s, double shift = 0.0) {
  std::vector<double> d(static_cast<std::size_t>(s + 1));
  for (int n = 0; n <= s; ++n) d[static_cast<std::size_t>(n)] = n - shift;
  return Operator::diagonal(d);
}

} // namespace

PhaseOperator build_oscillator_phase(int s, double phi0) {
  if (s < 1) throw Error("parameter", "oscillator needs s >= 1");
  const Index d = s + 1;
  Operator::Matrix u = Operator::Matrix::Zero(d, d);
  for (Index n = 1; n < d; ++n) u(n - 1, n) = 1.0;
  u(d - 1, 0) = std::polar(1.0, static_cast<double>(d) * phi0);
  return {Operator(std::move(u), "exp(i Phi)"), phi0, d - 1, 0};
}

FiniteOscillator build_finite_oscillator(int s, double phi0, const Tolerance& tol) {
  auto u = build_oscillator_phase(s, phi0);
  Operator n = number_operator(s).with_label("N");
  Operator a = (u.U * psd_sqrt(n, tol)).with_label("a");
  Operator adag = a.adjoint().with_label("a+");
  return {s, phi0, std::move(n), std::move(a), std::move(adag), std::move(u)};
}

QOscillator build_q_oscillator(int s, double phi0, const Tolerance& tol) {
  if (s < 1) throw Error("parameter", "q-oscillator needs s >= 1");
  QOscillator out;
  out.s = s;
  out.phi0 = phi0;
  out.n0 = (s + 1) / 4.0;
  out.q = QParam::phase(2.0 * std::numbers::pi / (s + 1)); // s = 1 is q = -1: singular
  out.U = build_oscillator_phase(s, phi0);
  out.N = number_operator(s).with_label("N");
  out.Nprime = number_operator(s, out.n0).with_label("N'");

  const double t = tol.effective(out.dim());
  out.radicands.resize(static_cast<std::size_t>(s + 1));
  for (int n = 0; n <= s; ++n) {
    double v = q_number(n - out.n0, out.q) + q_number(out.n0, out.q);
    if (v < -t) {
      std::ostringstream os;
      os.precision(17);
      os << "radicand " << v << " at n = " << n;
      throw Error("negative norm", os.str());
    }
    out.radicands[static_cast<std::size_t>(n)] = std::max(0.0, v);
  }
  const Operator modulus = psd_sqrt(Operator::diagonal(out.radicands), tol);
  out.a_q = (out.U.U * modulus).with_label("a_q");
  out.a_qdag = out.a_q.adjoint().with_label("a_q+");
  return out;
}

JordanSchwinger jordan_schwinger(const QOscillator& mode_a, const QOscillator& mode_b,
                                 const Tolerance& tol) {
  if (mode_a.s != mode_b.s) throw Error("shape", "Jordan-Schwinger modes must share s");
  const auto id = Operator::identity(mode_a.dim());
  Operator n1 = kron(mode_a.N, id).with_label("N1");
  Operator n2 = kron(id, mode_b.N).with_label("N2");
  // J+~ = (a_q^dag (x) 1)(1 (x) b_q) = a_q^dag (x) b_q.
  Operator jp = kron(mode_a.a_qdag, mode_b.a_q).with_label("J+~");
  Operator jm = kron(mode_a.a_q, mode_b.a_qdag).with_label("J-~");
  Operator j0 = (0.5 * (n1 - n2)).with_label("J0");
  const bool herm = residual(jm, jp.adjoint()) < tol.effective(jp.dim());
  DeformedTriple t{std::move(jp), std::move(jm), std::move(j0),
                   {"jordan_schwinger",
                    {{"s", static_cast<double>(mode_a.s)}, {"n0", mode_a.n0},
                     {"q_arg", mode_a.q_arg()}}},
                   herm};
  return {std::move(t), std::move(n1), std::move(n2)};
}

} // namespace phasedyn
