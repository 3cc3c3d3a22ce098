#pragma once

#include <vector>

#include "phasedyn/deform.hpp"
#include "phasedyn/phase.hpp"
#include "phasedyn/qnumber.hpp"

namespace phasedyn {

/// Truncated (s+1)-level oscillator with basis |0>, ..., |s>.
struct FiniteOscillator {
  int s = 1;
  double phi0 = 0.0;
  Operator N;
  Operator a;
  Operator adag;
  PhaseOperator U; // exp(i Phi) = sum_{n=1}^{s} |n-1><n| + exp(i(s+1)phi0) |s><0|

  Index dim() const { return s + 1; }
};

/// Phase operator of the truncated oscillator; Error("parameter") for s < 1.
PhaseOperator build_oscillator_phase(int s, double phi0);

/// a = exp(i Phi) sqrt(N). Error("parameter") for s < 1.
FiniteOscillator build_finite_oscillator(int s, double phi0 = 0.0, const Tolerance& tol = {});

/// Positive-norm q-oscillator at the root of unity q = exp(2 pi i/(s+1)),
/// n0 = (s+1)/4, a_q = exp(i Phi) sqrt([N - n0]_q + [n0]_q).
struct QOscillator {
  int s = 1;
  double n0 = 0.5;
  QParam q = QParam::real(1.0);
  double phi0 = 0.0;
  std::vector<double> radicands; // [n - n0]_q + [n0]_q, n = 0..s
  Operator N;
  Operator a_q;
  Operator a_qdag;
  Operator Nprime; // N - n0
  PhaseOperator U;

  Index dim() const { return s + 1; }
  double q_arg() const { return q.log_or_angle(); }
};

/// Throws Error("singular") at s = 1 (q = -1) and Error("negative norm") if a
/// radicand falls below -tol.
QOscillator build_q_oscillator(int s, double phi0 = 0.0, const Tolerance& tol = {});

/// Two commuting q-oscillators on the product space (mode A (x) mode B,
/// index n1 (s+1) + n2) and the generators J+~ = a_q^dag b_q,
/// J-~ = b_q^dag a_q, J0 = (N1 - N2)/2.
struct JordanSchwinger {
  DeformedTriple triple;
  Operator N1;
  Operator N2;
};

/// Error("shape") if the modes differ in s.
JordanSchwinger jordan_schwinger(const QOscillator& mode_a, const QOscillator& mode_b,
                                 const Tolerance& tol = {});

inline constexpr const char* kOscillatorBasis = "number states |0> .. |s>";
inline constexpr const char* kTwoModeBasis = "mode A (x) mode B, index n1*(s+1) + n2";

} // namespace phasedyn
