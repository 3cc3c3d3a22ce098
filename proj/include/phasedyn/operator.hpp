#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "phasedyn/error.hpp"

namespace phasedyn {

using cplx = std::complex<double>;
using Index = Eigen::Index;

/// Residual threshold. With `scale_with_dim` the threshold applied to an
/// operator of dimension d is abs_tol * d.
struct Tolerance {
  double abs_tol = 1e-12;
  bool scale_with_dim = true;

  Tolerance() = default;
  explicit Tolerance(double abs, bool scaled = true);

  double effective(Index dim) const {
    return scale_with_dim ? abs_tol * static_cast<double>(dim) : abs_tol;
  }
};

/// Dense complex square matrix with an optional label.
///
/// Values are immutable once built: every arithmetic helper returns a new
/// Operator. Mixing dimensions throws Error("shape").
class Operator {
public:
  using Matrix = Eigen::MatrixXcd;

  Operator() = default;
  explicit Operator(Matrix m, std::string label = {});

  static Operator zero(Index dim, std::string label = {});
  static Operator identity(Index dim, std::string label = {});
  static Operator diagonal(std::span<const double> entries, std::string label = {});
  static Operator diagonal(std::span<const cplx> entries, std::string label = {});
  /// |row><col| in a dim-dimensional space.
  static Operator unit(Index dim, Index row, Index col, std::string label = {});

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  cplx operator()(Index row, Index col) const { return m_(row, col); }
  const std::string& label() const { return label_; }

  Operator with_label(std::string label) const;
  Operator adjoint() const;
  bool is_diagonal(double tol) const;
  std::vector<cplx> diagonal_entries() const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(cplx s, const Operator& a);
  friend Operator operator*(const Operator& a, cplx s) { return s * a; }
  friend Operator operator-(const Operator& a);

private:
  Matrix m_;
  std::string label_;
};

void require_same_dim(const Operator& a, const Operator& b);

/// AB - BA.
Operator commutator(const Operator& a, const Operator& b);

/// rAB - (1/r)BA. Throws Error("parameter") for r == 0.
Operator r_commutator(const Operator& a, const Operator& b, double r);

/// Applies fn to the diagonal of a (numerically) diagonal operator.
/// Throws Error("not diagonal") if off-diagonal entries exceed tol or the
/// diagonal has imaginary parts beyond tol.
Operator diag_function(const std::function<cplx(double)>& fn, const Operator& d,
                       const Tolerance& tol = {});

/// Positive-semidefinite square root of a hermitian operator. Eigenvalues in
/// [-tol, 0) are clamped to zero; anything below -tol throws Error("not PSD").
Operator psd_sqrt(const Operator& a, const Tolerance& tol = {});

/// Moore-Penrose pseudo-inverse of a hermitian operator; eigenvalues with
/// magnitude below tol are treated as zero.
Operator hermitian_pinv(const Operator& a, const Tolerance& tol = {});

/// Frobenius norm of a - b.
double residual(const Operator& a, const Operator& b);

double frobenius_norm(const Operator& a);

/// Kronecker product a (x) b, row index i_a * dim(b) + i_b.
Operator kron(const Operator& a, const Operator& b);

} // namespace phasedyn
