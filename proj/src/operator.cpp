#include "phasedyn/operator.hpp"

#include <cmath>

namespace phasedyn {

Tolerance::Tolerance(double abs, bool scaled) : abs_tol(abs), scale_with_dim(scaled) {
  if (!(abs >= 0.0)) {
    throw Error("parameter", "tolerance must be nonnegative");
  }
}

Operator::Operator(Matrix m, std::string label) : m_(std::move(m)), label_(std::move(label)) {
  if (m_.rows() != m_.cols()) {
    throw Error("shape", "operator matrix must be square");
  }
}

Operator Operator::zero(Index dim, std::string label) {
  return Operator(Matrix::Zero(dim, dim), std::move(label));
}

Operator Operator::identity(Index dim, std::string label) {
  return Operator(Matrix::Identity(dim, dim), std::move(label));
}

Operator Operator::diagonal(std::span<const double> entries, std::string label) {
  const auto n = static_cast<Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return Operator(std::move(m), std::move(label));
}

Operator Operator::diagonal(std::span<const cplx> entries, std::string label) {
  const auto n = static_cast<Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return Operator(std::move(m), std::move(label));
}

Operator Operator::unit(Index dim, Index row, Index col, std::string label) {
  if (row < 0 || col < 0 || row >= dim || col >= dim) {
    throw Error("shape", "unit operator index out of range");
  }
  Matrix m = Matrix::Zero(dim, dim);
  m(row, col) = 1.0;
  return Operator(std::move(m), std::move(label));
}

Operator Operator::with_label(std::string label) const { return Operator(m_, std::move(label)); }

Operator Operator::adjoint() const { return Operator(m_.adjoint(), label_); }

bool Operator::is_diagonal(double tol) const {
  for (Index c = 0; c < m_.cols(); ++c)
    for (Index r = 0; r < m_.rows(); ++r)
      if (r != c && std::abs(m_(r, c)) > tol) return false;
  return true;
}

std::vector<cplx> Operator::diagonal_entries() const {
  std::vector<cplx> out(static_cast<std::size_t>(dim()));
  for (Index i = 0; i < dim(); ++i) out[static_cast<std::size_t>(i)] = m_(i, i);
  return out;
}

void require_same_dim(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw Error("shape", "dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                             std::to_string(b.dim()));
  }
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.m_ + b.m_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.m_ - b.m_);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.m_ * b.m_);
}

Operator operator*(cplx s, const Operator& a) { return Operator(s * a.m_); }

Operator operator-(const Operator& a) { return Operator(-a.m_); }

Operator commutator(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return Operator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Operator r_commutator(const Operator& a, const Operator& b, double r) {
  if (r == 0.0 || !std::isfinite(r)) {
    throw Error("parameter", "r-commutator needs finite nonzero r");
  }
  require_same_dim(a, b);
  if (r == 1.0) return commutator(a, b);
  return Operator(r * (a.matrix() * b.matrix()) - (1.0 / r) * (b.matrix() * a.matrix()));
}

Operator diag_function(const std::function<cplx(double)>& fn, const Operator& d,
                       const Tolerance& tol) {
  const double t = tol.effective(d.dim());
  if (!d.is_diagonal(t)) throw Error("not diagonal", "operator has off-diagonal entries");
  Operator::Matrix out = Operator::Matrix::Zero(d.dim(), d.dim());
  for (Index i = 0; i < d.dim(); ++i) {
    const cplx x = d(i, i);
    if (std::abs(x.imag()) > t) throw Error("not diagonal", "diagonal is not real");
    out(i, i) = fn(x.real());
  }
  return Operator(std::move(out));
}

namespace {

struct HermitianEigen {
  Eigen::VectorXd values;
  Operator::Matrix vectors;
};

HermitianEigen hermitian_eigen(const Operator& a, double t, const char* kind) {
  if ((a.matrix() - a.matrix().adjoint()).norm() > t) {
    throw Error(kind, "operator is not hermitian");
  }
  // Diagonal input is common (moduli of ladder operators); skip the solver so
  // the result is exact.
  if (a.is_diagonal(0.0)) {
    HermitianEigen e{Eigen::VectorXd(a.dim()), Operator::Matrix::Identity(a.dim(), a.dim())};
    for (Index i = 0; i < a.dim(); ++i) e.values(i) = a(i, i).real();
    return e;
  }
  Eigen::SelfAdjointEigenSolver<Operator::Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw Error(kind, "eigendecomposition failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

} // namespace

Operator psd_sqrt(const Operator& a, const Tolerance& tol) {
  const double t = tol.effective(a.dim());
  auto e = hermitian_eigen(a, t, "not PSD");
  for (Index i = 0; i < e.values.size(); ++i) {
    if (e.values(i) < -t) {
      throw Error("not PSD", "eigenvalue " + std::to_string(e.values(i)) + " below -tol");
    }
    e.values(i) = e.values(i) < 0.0 ? 0.0 : std::sqrt(e.values(i));
  }
  return Operator(e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint());
}

Operator hermitian_pinv(const Operator& a, const Tolerance& tol) {
  const double t = tol.effective(a.dim());
  auto e = hermitian_eigen(a, t, "not hermitian");
  for (Index i = 0; i < e.values.size(); ++i) {
    e.values(i) = std::abs(e.values(i)) < t ? 0.0 : 1.0 / e.values(i);
  }
  return Operator(e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint());
}

double residual(const Operator& a, const Operator& b) {
  require_same_dim(a, b);
  return (a.matrix() - b.matrix()).norm();
}

double frobenius_norm(const Operator& a) { return a.matrix().norm(); }

Operator kron(const Operator& a, const Operator& b) {
  const Index da = a.dim();
  const Index db = b.dim();
  Operator::Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
  return Operator(std::move(out));
}

} // namespace phasedyn
