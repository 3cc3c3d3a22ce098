#include "phasedyn/qnumber.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "phasedyn/error.hpp"

namespace phasedyn {

QParam QParam::real(double q) {
  if (!std::isfinite(q)) throw Error("parameter", "q must be finite");
  if (q == -1.0) throw Error("singular", "q = -1 makes q - 1/q vanish");
  if (q <= 0.0) throw Error("parameter", "real q must be positive");
  return QParam(Kind::real, std::log(q));
}

QParam QParam::phase(double alpha) {
  if (!std::isfinite(alpha)) throw Error("parameter", "phase must be finite");
  double a = std::remainder(alpha, 2.0 * std::numbers::pi); // (-pi, pi]
  if (std::abs(a) < 1e-15) a = 0.0;
  if (std::abs(std::abs(a) - std::numbers::pi) < 1e-12) {
    throw Error("singular", "q = -1 makes q - 1/q vanish");
  }
  return QParam(Kind::phase, a);
}

QParam QParam::root_of_unity(int n) {
  if (n < 2) throw Error("parameter", "root of unity order must be >= 2");
  return phase(2.0 * std::numbers::pi / n);
}

QParam QParam::from_complex(std::complex<double> q) {
  if (q.imag() == 0.0) return real(q.real());
  if (std::abs(std::abs(q) - 1.0) > 1e-12) {
    throw Error("parameter", "complex q must have unit modulus");
  }
  return phase(std::arg(q));
}

std::complex<double> QParam::value() const {
  return kind_ == Kind::real ? std::complex<double>(std::exp(v_), 0.0) : std::polar(1.0, v_);
}

std::string QParam::str() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == Kind::real) {
    os << std::exp(v_);
  } else {
    os << "exp(i*" << v_ << ")";
  }
  return os.str();
}

double q_number(double x, const QParam& q) {
  if (q.is_classical()) return x;
  const double v = q.log_or_angle();
  if (q.kind() == QParam::Kind::real) return std::sinh(x * v) / std::sinh(v);
  return std::sin(x * v) / std::sin(v);
}

} // namespace phasedyn
