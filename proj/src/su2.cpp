#include "phasedyn/su2.hpp"

#include <cmath>

namespace phasedyn {

Su2Rep build_su2(Spin j) {
  const Index d = j.dim();
  const double jv = j.value();
  Operator::Matrix jp = Operator::Matrix::Zero(d, d);
  Operator::Matrix j0 = Operator::Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const double m = j.m(i);
    j0(i, i) = m;
    if (i + 1 < d) jp(i + 1, i) = std::sqrt((jv - m) * (jv + m + 1.0));
  }
  Operator plus(std::move(jp), "J+");
  Operator minus = plus.adjoint().with_label("J-");
  return {j, std::move(plus), std::move(minus), Operator(std::move(j0), "J0")};
}

Operator casimir(const Su2Rep& rep, const Tolerance& tol) {
  const auto id = Operator::identity(rep.dim());
  const Operator c = rep.Jm * rep.Jp + rep.J0 * (rep.J0 + id);
  const Operator other = rep.Jp * rep.Jm + rep.J0 * (rep.J0 - id);
  const double t = tol.effective(rep.dim());
  if (residual(c, other) >= t || residual(c, rep.j.casimir_value() * id) >= t) {
    throw Error("postcondition", "casimir orderings disagree");
  }
  return c.with_label("C");
}

} // namespace phasedyn
