#include "phasedyn/deform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace phasedyn {

namespace {

constexpr double kGridSnap = 1e-9;

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_pass(const CheckReport& r, const std::string& what) {
  for (const auto& c : r.checks()) {
    if (!c.pass) {
      throw Error("postcondition", what + ": " + c.name + " residual " + num(c.residual));
    }
  }
}

Operator diag_of(Index dim, const std::function<double(Index)>& fn) {
  std::vector<double> d(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) d[static_cast<std::size_t>(i)] = fn(i);
  return Operator::diagonal(d);
}

} // namespace

// ---------------------------------------------------------------- FSpec

FSpec FSpec::linear() { return {[](double x) { return 2.0 * x; }, {}, "f(x) = 2x"}; }

FSpec FSpec::q_bracket_2x(const QParam& q) {
  std::map<std::string, double> params;
  if (q.kind() == QParam::Kind::real) {
    params["q"] = q.value().real();
  } else {
    params["q_arg"] = q.log_or_angle();
  }
  return {[q](double x) { return q_number(2.0 * x, q); }, std::move(params),
          "f(x) = [2x]_q, q = " + q.str()};
}

FSpec FSpec::table(std::vector<std::pair<double, double>> points, std::string description) {
  auto f = [pts = std::move(points)](double x) {
    for (const auto& [px, v] : pts) {
      if (std::abs(px - x) < kGridSnap) return v;
    }
    throw Error("parameter", "f table has no entry at x = " + num(x));
  };
  return {std::move(f), {}, std::move(description)};
}

// ---------------------------------------------------------------- GSolution

double GSolution::operator()(double x) const {
  const double k = x - lowest();
  const double idx = std::round(k);
  if (std::abs(k - idx) > kGridSnap || idx < 0 || idx >= static_cast<double>(values.size())) {
    throw Error("parameter", "g is not tabulated at x = " + num(x));
  }
  return values[static_cast<std::size_t>(idx)];
}

GSolution GSolution::shifted(double c) const {
  GSolution out = *this;
  for (double& v : out.values) v += c;
  out.anchor_value += c;
  return out;
}

GSolution GSolution::from_function(Spin j, const std::function<double(double)>& g,
                                   double periodic) {
  GSolution out;
  out.j = j;
  out.periodic = periodic;
  out.values.resize(static_cast<std::size_t>(j.dim() + 1));
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    out.values[k] = g(out.lowest() + static_cast<double>(k));
  }
  out.anchor_point = out.lowest();
  out.anchor_value = out.values.front();
  return out;
}

GSolution solve_g(const FSpec& f, Spin j, double anchor_value, std::optional<double> anchor_point) {
  GSolution out;
  out.j = j;
  const std::size_t n = static_cast<std::size_t>(j.dim() + 1);
  out.values.assign(n, 0.0);

  const double point = anchor_point.value_or(out.lowest());
  const double k = point - out.lowest();
  const double kr = std::round(k);
  if (std::abs(k - kr) > kGridSnap || kr < 0 || kr >= static_cast<double>(n)) {
    throw Error("parameter", "anchor " + num(point) + " is not on the grid");
  }
  const auto a = static_cast<std::size_t>(kr);
  out.values[a] = anchor_value;
  for (std::size_t i = a + 1; i < n; ++i) {
    out.values[i] = out.values[i - 1] + f(out.lowest() + static_cast<double>(i));
  }
  for (std::size_t i = a; i-- > 0;) {
    out.values[i] = out.values[i + 1] - f(out.lowest() + static_cast<double>(i + 1));
  }
  out.anchor_point = point;
  out.anchor_value = anchor_value;
  out.periodic = out.values.front();
  return out;
}

// ---------------------------------------------------------------- maps

DeformedTriple build_weighted_ladders(const Su2Rep& rep, const CasimirFunction& a,
                                      const CasimirFunction& b, Provenance provenance,
                                      const Tolerance& tol) {
  const Index d = rep.dim();
  const double c = rep.j.casimir_value();
  Operator::Matrix jp = Operator::Matrix::Zero(d, d);
  Operator::Matrix jm = Operator::Matrix::Zero(d, d);
  for (Index i = 0; i + 1 < d; ++i) {
    const double m = rep.j.m(i);
    jp(i + 1, i) = rep.Jp(i + 1, i) * a(c, m);
    jm(i, i + 1) = b(c, m) * rep.Jm(i, i + 1);
  }
  DeformedTriple t{Operator(std::move(jp), "J+~"), Operator(std::move(jm), "J-~"),
                   rep.J0.with_label("J0~"), std::move(provenance), false};
  t.hermitian_pair = residual(t.Jm, t.Jp.adjoint()) < tol.effective(d);
  return t;
}

DeformedTriple build_AB_map(const Su2Rep& rep, const GSolution& g, const ABSplit& split,
                            const Tolerance& tol) {
  if (g.j != rep.j) throw Error("shape", "g was solved for a different spin");
  const double jv = rep.j.value();
  const double c = rep.j.casimir_value();
  const double p = g.periodic;
  const double t = tol.effective(rep.dim());
  const double scale = std::max(1.0, std::abs(p));
  if (std::abs(p - g(jv)) > t * scale || std::abs(p - g(-jv - 1.0)) > t * scale) {
    throw Error("parameter", "p = " + num(p) + " must equal g(j) = " + num(g(jv)) +
                                 " and g(-j-1) = " + num(g(-jv - 1.0)) +
                                 " for a finite irreducible block");
  }

  // A B(m) on the ladder support m = -j .. j-1, where C - m(m+1) > 0.
  auto product = [&](double m) { return (p - g(m)) / (c - m * (m + 1.0)); };

  Provenance prov{"ab_map", {{"periodic", p}, {"anchor_point", g.anchor_point},
                             {"anchor_value", g.anchor_value}}};
  CasimirFunction a;
  CasimirFunction b;
  switch (split.kind) {
  case ABSplit::Kind::left:
    prov.params["split"] = 0;
    a = [&](double, double m) { return product(m); };
    b = [](double, double) { return 1.0; };
    break;
  case ABSplit::Kind::symmetric:
    prov.params["split"] = 1;
    for (Index i = 0; i + 1 < rep.dim(); ++i) {
      const double m = rep.j.m(i);
      if (product(m) < -t) {
        throw Error("needs non-hermitian split",
                    "A B(" + num(m) + ") = " + num(product(m)) + " < 0");
      }
    }
    a = [&](double, double m) { return std::sqrt(std::max(0.0, product(m))); };
    b = a;
    break;
  case ABSplit::Kind::custom:
    prov.params["split"] = 2;
    if (!split.a) throw Error("parameter", "custom split needs A");
    a = split.a;
    b = [&](double cc, double m) {
      const double av = split.a(cc, m);
      if (av == 0.0) throw Error("parameter", "custom A vanishes at m = " + num(m));
      return product(m) / av;
    };
    break;
  }

  DeformedTriple out = build_weighted_ladders(rep, a, b, std::move(prov), tol);

  // Structure relation [J+~, J-~] = g(J0) - g(J0 - 1) must hold on every level.
  const Operator f = diag_of(rep.dim(), [&](Index i) {
    const double m = rep.j.m(i);
    return g(m) - g(m - 1.0);
  });
  CheckReport post;
  post.add("ab_structure", residual(commutator(out.Jp, out.Jm), f), t);
  require_pass(post, "AB map");
  return out;
}

DeformedTriple build_hermitian_deformed(Spin j, const FSpec& f, const Tolerance& tol) {
  const auto rep = build_su2(j);
  const Index d = rep.dim();
  const double jv = j.value();
  const double t = tol.effective(d);
  auto h = [&](double x) { return f(0.5 * x); };

  Operator::Matrix jp = Operator::Matrix::Zero(d, d);
  for (Index i = 0; i + 1 < d; ++i) {
    const double m = j.m(i);
    // Function of J0 on the left of J+ is evaluated at the target level m+1.
    double radicand = h(m + 1.0 + jv) * h(m - jv) / ((m + 1.0 + jv) * (m - jv));
    if (!std::isfinite(radicand)) {
      throw Error("parameter", "f is not finite on the ladder support");
    }
    if (radicand < -t) {
      throw Error("negative norm", "radicand " + num(radicand) + " at m = " + num(m));
    }
    radicand = std::max(0.0, radicand);
    jp(i + 1, i) = std::sqrt(radicand) * rep.Jp(i + 1, i);
  }
  Provenance prov{"hermitian_f", f.params};
  prov.params["j"] = jv;
  Operator plus(std::move(jp), "J+~");
  Operator minus = plus.adjoint().with_label("J-~");
  return {std::move(plus), std::move(minus), rep.J0.with_label("J0~"), std::move(prov), true};
}

DeformedTriple build_suq2(Spin j, double q, const Tolerance& tol) {
  if (!(q > 0.0) || !std::isfinite(q)) throw Error("parameter", "SU_q(2) needs real q > 0");
  const QParam qp = QParam::real(q);
  const auto rep = build_su2(j);
  const Index d = rep.dim();
  const double jv = j.value();

  Operator::Matrix jp = Operator::Matrix::Zero(d, d);
  for (Index i = 0; i + 1 < d; ++i) {
    const double m = j.m(i);
    jp(i + 1, i) = std::sqrt(q_number(jv - m, qp) * q_number(jv + m + 1.0, qp));
  }
  Operator plus(std::move(jp), "J+~");
  Operator minus = plus.adjoint().with_label("J-~");
  DeformedTriple out{std::move(plus), std::move(minus), rep.J0.with_label("J0~"),
                     {"suq2", {{"q", q}, {"j", jv}}}, true};

  const auto g = GSolution::from_function(
      j, [&](double x) { return q_number(x, qp) * q_number(x + 1.0, qp); });
  const Operator c = deformed_casimir(out, g, tol);
  const double scalar = q_number(jv, qp) * q_number(jv + 1.0, qp);
  CheckReport post;
  post.add("suq2_casimir_scalar", residual(c, scalar * Operator::identity(d)),
           tol.effective(d) * std::max(1.0, std::abs(scalar)));
  require_pass(post, "SU_q(2)");
  return out;
}

// ---------------------------------------------------------------- Witten

DeformedTriple WittenGenerators::as_triple() const {
  return {Wp.with_label("W+"), Wm.with_label("W-"), W0.with_label("W0"), {"witten", {{"r", r}}},
          true};
}

WittenGenerators build_witten(Spin j, double r, const Tolerance& tol) {
  if (!(r > 0.0) || !std::isfinite(r) || r == 1.0) {
    throw Error("parameter", "Witten deformation needs r > 0, r != 1");
  }
  const QParam rq = QParam::real(r);
  const auto rep = build_su2(j);
  const Index d = rep.dim();
  const double jv = j.value();
  const double k = (std::pow(r, 2.0 * jv + 1.0) + std::pow(r, -2.0 * jv - 1.0)) / (r + 1.0 / r);
  const double norm = std::sqrt(2.0 * r / (r + 1.0 / r));

  Operator::Matrix w0 = Operator::Matrix::Zero(d, d);
  Operator::Matrix wp = Operator::Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    const double m = j.m(i);
    w0(i, i) = (1.0 - k * std::pow(r, -2.0 * m)) / (r - 1.0 / r);
    if (i + 1 < d) {
      const double mt = m + 1.0;
      const double ratio = q_number(mt + jv, rq) * q_number(mt - 1.0 - jv, rq) /
                           ((mt + jv) * (mt - 1.0 - jv));
      wp(i + 1, i) = std::pow(r, -mt) * norm * std::sqrt(ratio) * rep.Jp(i + 1, i);
    }
  }
  WittenGenerators w;
  w.W0 = Operator(std::move(w0), "W0");
  w.Wp = Operator(std::move(wp), "W+");
  w.Wm = w.Wp.adjoint().with_label("W-");
  w.r = r;
  require_pass(witten_relations(w, tol), "Witten map");
  return w;
}

CheckReport witten_relations(const WittenGenerators& w, const Tolerance& tol) {
  const double r = w.r;
  // W0 is a difference divided by r - 1/r: digits lost near r = 1 scale the bound.
  const double t = tol.effective(w.W0.dim()) * std::max(1.0, 1.0 / std::abs(r - 1.0 / r));
  CheckReport rep;
  rep.add("witten_W0_Wp", residual(r_commutator(w.W0, w.Wp, r), w.Wp), t, "[W0, W+]_r = W+");
  rep.add("witten_Wp_Wm", residual(r_commutator(w.Wp, w.Wm, 1.0 / (r * r)), 2.0 * w.W0), t,
          "[W+, W-]_{1/r^2} = 2 W0");
  rep.add("witten_Wm_W0", residual(r_commutator(w.Wm, w.W0, r), w.Wm), t, "[W-, W0]_r = W-");
  rep.add("witten_hermitian_pair", residual(w.Wm, w.Wp.adjoint()), t, "W- = W+^dag");
  return rep;
}

// ---------------------------------------------------------------- F deformation

DeformedTriple build_F_deformation(const Su2Rep& rep, const CasimirFunction& F,
                                   const Tolerance& tol) {
  const double c = rep.j.casimir_value();
  const double jv = rep.j.value();
  for (Index k = 0; k < rep.dim() + 2; ++k) {
    const double m = -jv - 1.0 + static_cast<double>(k);
    const double v = F(c, m);
    if (!std::isfinite(v) || std::abs(v) < 1e-12) {
      throw Error("singular F", "F(C, " + num(m) + ") = " + num(v));
    }
  }
  const Operator fd = diag_of(rep.dim(), [&](Index i) { return F(c, rep.j.m(i)); });
  DeformedTriple t{(rep.Jp * fd).with_label("J+~"), (rep.Jm * fd).with_label("J-~"),
                   (rep.J0 * fd).with_label("J0~"), {"f_deform", {{"j", jv}}}, false};
  t.hermitian_pair = residual(t.Jm, t.Jp.adjoint()) < tol.effective(rep.dim());
  require_pass(f_deformation_relations(rep, t, F, tol), "F deformation");
  return t;
}

CheckReport f_deformation_relations(const Su2Rep& rep, const DeformedTriple& t,
                                    const CasimirFunction& F, const Tolerance& tol) {
  const Index d = rep.dim();
  const double c = rep.j.casimir_value();
  const double tl = tol.effective(d);
  const auto id = Operator::identity(d);
  auto fshift = [&](double s) { return diag_of(d, [&](Index i) { return F(c, rep.j.m(i) + s); }); };
  auto ratio = [&](double num_shift, double den_shift) {
    return diag_of(d, [&](Index i) {
      const double m = rep.j.m(i);
      return F(c, m + num_shift) / F(c, m + den_shift);
    });
  };

  CheckReport r;
  const Operator plus_rhs = (id - ratio(-1.0, 0.0)) * t.J0 * t.Jp + fshift(-1.0) * t.Jp;
  r.add("f_deform_J0_Jp", residual(commutator(t.J0, t.Jp), plus_rhs), tl,
        "[J0~, J+~] = {1 - F(J0-1)/F(J0)} J0~ J+~ + F(J0-1) J+~");
  const Operator minus_rhs = (id - ratio(1.0, 0.0)) * t.J0 * t.Jm - fshift(1.0) * t.Jm;
  r.add("f_deform_J0_Jm", residual(commutator(t.J0, t.Jm), minus_rhs), tl,
        "[J0~, J-~] = {1 - F(J0+1)/F(J0)} J0~ J-~ - F(J0+1) J-~");
  const Operator pm_rhs = (id - ratio(1.0, -1.0)) * t.Jp * t.Jm + 2.0 * fshift(1.0) * t.J0;
  r.add("f_deform_Jp_Jm", residual(commutator(t.Jp, t.Jm), pm_rhs), tl,
        "[J+~, J-~] = {1 - F(J0+1)/F(J0-1)} J+~ J-~ + 2 F(J0+1) J0~");
  r.add("f_deform_reduction", ladder_residual(t, rep.J0), tl, "[J0, J+-~] = +-J+-~");
  return r;
}

// ---------------------------------------------------------------- casimir & checks

namespace {

struct CasimirPair {
  Operator first;
  Operator second;
};

CasimirPair casimir_orderings(const DeformedTriple& t, const GSolution& g, const Tolerance& tol) {
  const Tolerance strict = tol;
  const Operator g0 = diag_function([&](double x) { return cplx(g(x)); }, t.J0, strict);
  const Operator g1 = diag_function([&](double x) { return cplx(g(x - 1.0)); }, t.J0, strict);
  return {t.Jm * t.Jp + g0, t.Jp * t.Jm + g1};
}

} // namespace

CheckReport deformed_casimir_report(const DeformedTriple& t, const GSolution& g,
                                    const Tolerance& tol) {
  const auto c = casimir_orderings(t, g, tol);
  double scale = 1.0;
  for (const double v : g.values) scale = std::max(scale, std::abs(v));
  const double tl = tol.effective(t.dim()) * scale;
  CheckReport r;
  r.add("deformed_casimir_orderings", residual(c.first, c.second), tl,
        "J-~J+~ + g(J0~) = J+~J-~ + g(J0~ - 1)");
  r.add("deformed_casimir_central",
        std::max(frobenius_norm(commutator(c.first, t.Jp)),
                 frobenius_norm(commutator(c.first, t.Jm))),
        tl * std::max(1.0, frobenius_norm(t.Jp)), "[C~, J+-~] = 0");
  return r;
}

Operator deformed_casimir(const DeformedTriple& t, const GSolution& g, const Tolerance& tol) {
  require_pass(deformed_casimir_report(t, g, tol), "deformed casimir");
  return casimir_orderings(t, g, tol).first.with_label("C~");
}

double structure_residual(const DeformedTriple& t, const FSpec& f, const Tolerance& tol) {
  const Operator rhs = diag_function([&](double x) { return cplx(f(x)); }, t.J0, tol);
  return residual(commutator(t.Jp, t.Jm), rhs);
}

double ladder_residual(const DeformedTriple& t, const Operator& j0) {
  return std::max(residual(commutator(j0, t.Jp), t.Jp), residual(commutator(j0, t.Jm), -t.Jm));
}

} // namespace phasedyn
