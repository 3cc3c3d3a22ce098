#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phasedyn/operator.hpp"
#include "phasedyn/qnumber.hpp"
#include "phasedyn/report.hpp"
#include "phasedyn/su2.hpp"

namespace phasedyn {

/// Structure function f of a deformed algebra [J0~, J+-~] = +-J+-~,
/// [J+~, J-~] = f(J0~).
struct FSpec {
  std::function<double(double)> f;
  std::map<std::string, double> params;
  std::string description;

  double operator()(double x) const { return f(x); }

  /// f(x) = 2x, the undeformed algebra.
  static FSpec linear();
  /// f(x) = [2x]_q (Drinfeld-Jimbo).
  static FSpec q_bracket_2x(const QParam& q);
  /// Tabulated f; evaluating off the table throws Error("parameter").
  static FSpec table(std::vector<std::pair<double, double>> points,
                     std::string description = "user table");
};

/// g with g(x) - g(x-1) = f(x), tabulated on x = -j-1, ..., j.
///
/// g is fixed only up to a unit-periodic function. On a unit-spaced grid such
/// a function takes a single value, so the periodic part p is one number.
struct GSolution {
  Spin j = Spin::from_twice(1);
  std::vector<double> values;
  double anchor_point = 0.0;
  double anchor_value = 0.0;
  double periodic = 0.0;

  double lowest() const { return -j.value() - 1.0; }
  double highest() const { return j.value(); }
  /// g(x) for x on the grid; Error("parameter") otherwise.
  double operator()(double x) const;
  /// g + c, which leaves the shift relation untouched.
  GSolution shifted(double c) const;

  static GSolution from_function(Spin j, const std::function<double(double)>& g,
                                 double periodic = 0.0);
};

/// Solves g(x) - g(x-1) = f(x) by recursion from g(anchor_point) = anchor_value.
/// The anchor defaults to the lowest grid point -j-1. The periodic part is
/// set to g(-j-1), the only value a finite block admits.
GSolution solve_g(const FSpec& f, Spin j, double anchor_value = 0.0,
                  std::optional<double> anchor_point = std::nullopt);

struct Provenance {
  std::string map;
  std::map<std::string, double> params;
};

struct DeformedTriple {
  Operator Jp;
  Operator Jm;
  Operator J0;
  Provenance provenance;
  bool hermitian_pair = false;

  Index dim() const { return Jp.dim(); }
};

/// A(C, m) or B(C, m): a function of the casimir eigenvalue and J0.
using CasimirFunction = std::function<double(double casimir, double m)>;

/// How the product A B fixed by g is split between the two ladders.
struct ABSplit {
  enum class Kind { left, symmetric, custom };
  Kind kind = Kind::left;
  CasimirFunction a; // custom only

  static ABSplit left() { return {Kind::left, {}}; }
  static ABSplit symmetric() { return {Kind::symmetric, {}}; }
  static ABSplit custom(CasimirFunction a) { return {Kind::custom, std::move(a)}; }
};

/// J+~ = J+ A(C,J0), J-~ = B(C,J0) J-, J0~ = J0, with A and B given
/// directly. Only ladder matrix elements are touched.
DeformedTriple build_weighted_ladders(const Su2Rep& rep, const CasimirFunction& a,
                                      const CasimirFunction& b, Provenance provenance,
                                      const Tolerance& tol = {});

/// Non-hermitian map whose weights satisfy
///   A B(m) (C - m(m+1)) = p - g(m),   m = -j, ..., j-1,
/// so that [J+~, J-~] = g(J0) - g(J0-1). A finite irreducible block needs
/// p = g(j) = g(-j-1); otherwise Error("parameter"). A negative product
/// under the symmetric split throws Error("needs non-hermitian split").
DeformedTriple build_AB_map(const Su2Rep& rep, const GSolution& g, const ABSplit& split,
                            const Tolerance& tol = {});

/// Hermitian map J+~ = sqrt(h(J0+j) h(J0-1-j) / ((J0+j)(J0-1-j))) J+,
/// J-~ = (J+~)^dag, with h(x) = f(x/2). For f = 2x this is the identity
/// map; for f = [2x]_q it reproduces the SU_q(2) irrep. A negative radicand
/// on the ladder support throws Error("negative norm").
DeformedTriple build_hermitian_deformed(Spin j, const FSpec& f, const Tolerance& tol = {});

/// SU_q(2) irrep, elements sqrt([j-m]_q [j+m+1]_q), for real q > 0.
DeformedTriple build_suq2(Spin j, double q, const Tolerance& tol = {});

/// Witten's second deformation realised on the spin-j irrep.
struct WittenGenerators {
  Operator W0;
  Operator Wp;
  Operator Wm;
  double r = 0.0;

  DeformedTriple as_triple() const;
};

/// Throws Error("parameter") unless r > 0 and r != 1, and
/// Error("postcondition") if the defining relations fail.
WittenGenerators build_witten(Spin j, double r, const Tolerance& tol = {});

/// The defining relations in the normalisation of the spin irrep used here:
///   [W0, W+]_r = W+,  [W+, W-]_{1/r^2} = 2 W0,  [W-, W0]_r = W-,  W- = W+^dag.
/// The bound is widened by 1/|r - 1/r| to absorb cancellation near r = 1.
CheckReport witten_relations(const WittenGenerators& w, const Tolerance& tol = {});

/// J+~ = J+ F, J-~ = J- F, J0~ = J0 F with F = F(C, J0). F must not vanish on
/// m = -j-1, ..., j+1 (Error("singular F")).
DeformedTriple build_F_deformation(const Su2Rep& rep, const CasimirFunction& F,
                                   const Tolerance& tol = {});

/// Commutator identities of the F-deformed algebra, with all functions of
/// J0 acting from the left, plus the reduction [J0, J+-~] = +-J+-~.
CheckReport f_deformation_relations(const Su2Rep& rep, const DeformedTriple& t,
                                    const CasimirFunction& F, const Tolerance& tol = {});

/// J-~ J+~ + g(J0~). Throws Error("not diagonal") for non-diagonal J0~ and
/// Error("postcondition") when the two orderings or centrality fail.
Operator deformed_casimir(const DeformedTriple& t, const GSolution& g, const Tolerance& tol = {});

CheckReport deformed_casimir_report(const DeformedTriple& t, const GSolution& g,
                                    const Tolerance& tol = {});

/// residual([J+~, J-~], f(J0~)).
double structure_residual(const DeformedTriple& t, const FSpec& f, const Tolerance& tol = {});

/// max residual of [J0, J+-~] -+ J+-~.
double ladder_residual(const DeformedTriple& t, const Operator& j0);

} // namespace phasedyn
