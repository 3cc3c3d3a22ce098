#pragma once

#include <complex>
#include <string>

namespace phasedyn {

/// Deformation parameter q, either real positive or a unit-modulus phase
/// exp(i alpha).
class QParam {
public:
  enum class Kind { real, phase };

  /// Real q. q = -1 throws Error("singular"); other q <= 0 Error("parameter").
  static QParam real(double q);
  /// q = exp(i alpha). alpha = pi (mod 2 pi) throws Error("singular").
  static QParam phase(double alpha);
  /// Primitive n-th root of unity exp(2 pi i / n), n >= 2.
  static QParam root_of_unity(int n);
  /// Real (imag == 0) or unit-modulus complex q.
  static QParam from_complex(std::complex<double> q);

  Kind kind() const { return kind_; }
  /// ln q for real q, alpha for phase q.
  double log_or_angle() const { return v_; }
  std::complex<double> value() const;
  /// True when [x]_q == x identically.
  bool is_classical() const { return v_ == 0.0; }
  std::string str() const;

private:
  QParam(Kind k, double v) : kind_(k), v_(v) {}
  Kind kind_;
  double v_;
};

/// [x]_q = (q^x - q^-x)/(q - q^-1): sinh(x ln q)/sinh(ln q) for real q,
/// sin(alpha x)/sin(alpha) for q = exp(i alpha), and x at q = 1.
double q_number(double x, const QParam& q);

} // namespace phasedyn
