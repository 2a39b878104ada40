#include "liedec/matkit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace liedec {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::not_hermitian: return "not-hermitian";
    case ErrorKind::not_a_member: return "not-a-member";
    case ErrorKind::closure_failure: return "closure-failure";
    case ErrorKind::not_semisimple: return "not-semisimple";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::search_exhausted: return "search-exhausted";
    case ErrorKind::numerical: return "numerical";
  }
  return "unknown";
}

void require_same_dim(const SkewHermitian& a, const SkewHermitian& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw LieError(ErrorKind::dimension_mismatch,
                   std::string(where) + ": ambient dimensions " + std::to_string(a.dim()) +
                       " and " + std::to_string(b.dim()) + " differ");
  }
}

// ---------------------------------------------------------------------------
// SkewHermitian

SkewHermitian::SkewHermitian(const CMatrix& m, double tol_herm) {
  if (m.rows() != m.cols()) {
    throw LieError(ErrorKind::dimension_mismatch, "SkewHermitian: matrix is not square");
  }
  if (!m.allFinite()) {
    throw LieError(ErrorKind::not_hermitian, "SkewHermitian: non-finite entries");
  }
  const CMatrix herm_part = m + m.adjoint();
  if (herm_part.norm() > tol_herm * std::max(1.0, m.norm())) {
    throw LieError(ErrorKind::not_hermitian,
                   "SkewHermitian: ||m + m^H|| = " + std::to_string(herm_part.norm()) +
                       " exceeds tolerance");
  }
  mat_ = 0.5 * (m - m.adjoint());
}

SkewHermitian SkewHermitian::zero(Index n) {
  return SkewHermitian(CMatrix::Zero(n, n), Trusted{});
}

SkewHermitian SkewHermitian::times_i(const CMatrix& hermitian, double tol_herm) {
  return SkewHermitian(CMatrix(Complex(0.0, 1.0) * hermitian), tol_herm);
}

SkewHermitian& SkewHermitian::operator+=(const SkewHermitian& other) {
  require_same_dim(*this, other, "SkewHermitian::operator+");
  mat_ += other.mat_;
  return *this;
}

SkewHermitian& SkewHermitian::operator-=(const SkewHermitian& other) {
  require_same_dim(*this, other, "SkewHermitian::operator-");
  mat_ -= other.mat_;
  return *this;
}

SkewHermitian& SkewHermitian::operator*=(double s) {
  mat_ *= s;
  return *this;
}

SkewHermitian commutator(const SkewHermitian& a, const SkewHermitian& b) {
  require_same_dim(a, b, "commutator");
  CMatrix c = a.mat_ * b.mat_ - b.mat_ * a.mat_;
  // exact skew-symmetry up to round-off; re-project without a check
  return SkewHermitian(CMatrix(0.5 * (c - c.adjoint())), SkewHermitian::Trusted{});
}

double hs_inner(const SkewHermitian& a, const SkewHermitian& b) {
  require_same_dim(a, b, "hs_inner");
  return (a.mat().adjoint() * b.mat()).trace().real();
}

RVector vectorize(const SkewHermitian& a) {
  const Index nn = a.dim() * a.dim();
  RVector v(2 * nn);
  const Complex* data = a.mat().data();
  for (Index k = 0; k < nn; ++k) {
    v[k] = data[k].real();
    v[nn + k] = data[k].imag();
  }
  return v;
}

SkewHermitian devectorize(const RVector& v, Index n) {
  const Index nn = n * n;
  if (v.size() != 2 * nn) {
    throw LieError(ErrorKind::dimension_mismatch, "devectorize: length does not match 2n^2");
  }
  CMatrix m(n, n);
  Complex* data = m.data();
  for (Index k = 0; k < nn; ++k) data[k] = Complex(v[k], v[nn + k]);
  return SkewHermitian(CMatrix(0.5 * (m - m.adjoint())), SkewHermitian::Trusted{});
}

// ---------------------------------------------------------------------------
// LieBasis

LieBasis LieBasis::from_orthonormal(std::vector<SkewHermitian> elements, Index ambient_dim,
                                    double tol) {
  LieBasis basis(ambient_dim);
  for (const auto& e : elements) {
    if (e.dim() != ambient_dim) {
      throw LieError(ErrorKind::dimension_mismatch, "LieBasis: element dimension mismatch");
    }
  }
  RMatrix frame(2 * ambient_dim * ambient_dim, static_cast<Index>(elements.size()));
  for (std::size_t j = 0; j < elements.size(); ++j) {
    frame.col(static_cast<Index>(j)) = vectorize(elements[j]);
  }
  const RMatrix gram = frame.transpose() * frame;
  const double dev = (gram - RMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (!elements.empty() && dev > tol) {
    throw LieError(ErrorKind::numerical,
                   "LieBasis: elements are not orthonormal (deviation " + std::to_string(dev) + ")");
  }
  basis.elements_ = std::move(elements);
  basis.frame_ = std::move(frame);
  return basis;
}

RVector LieBasis::project(const SkewHermitian& x) const {
  if (x.dim() != n_) {
    throw LieError(ErrorKind::dimension_mismatch, "LieBasis::project: dimension mismatch");
  }
  return frame_.transpose() * vectorize(x);
}

SkewHermitian LieBasis::combine(const RVector& coords) const {
  if (coords.size() != size()) {
    throw LieError(ErrorKind::dimension_mismatch, "LieBasis::combine: coordinate count mismatch");
  }
  return devectorize(frame_ * coords, n_);
}

double LieBasis::residual(const SkewHermitian& x) const {
  const RVector v = vectorize(x);
  if (empty()) return v.norm();
  return (v - frame_ * (frame_.transpose() * v)).norm();
}

void LieBasis::append_unit(const RVector& v) {
  frame_.conservativeResize(Eigen::NoChange, frame_.cols() + 1);
  frame_.col(frame_.cols() - 1) = v;
  elements_.push_back(devectorize(v, n_));
}

LieBasis extend_basis(LieBasis basis, std::span<const SkewHermitian> candidates,
                      double tol_rank) {
  for (const auto& cand : candidates) {
    if (cand.dim() != basis.ambient_dim()) {
      throw LieError(ErrorKind::dimension_mismatch, "extend_basis: candidate dimension mismatch");
    }
    RVector r = vectorize(cand);
    const double scale = std::max(1.0, r.norm());
    for (int pass = 0; pass < 2; ++pass) {
      for (Index j = 0; j < basis.frame_.cols(); ++j) {
        r -= basis.frame_.col(j).dot(r) * basis.frame_.col(j);
      }
    }
    const double rn = r.norm();
    if (rn > tol_rank * scale) basis.append_unit(r / rn);
  }
  return basis;
}

std::optional<RVector> member_coords(const LieBasis& basis, const SkewHermitian& x,
                                     double tol_rank) {
  if (x.dim() != basis.ambient_dim()) {
    throw LieError(ErrorKind::dimension_mismatch, "member_coords: dimension mismatch");
  }
  const RVector v = vectorize(x);
  RVector c = basis.frame().transpose() * v;
  const double res = (v - basis.frame() * c).norm();
  if (res > tol_rank * std::max(1.0, v.norm())) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------
// exponential

CMatrix expm_skew(const SkewHermitian& a, double t) {
  const Index n = a.dim();
  if (n == 0) return CMatrix(0, 0);
  // a = -i h with h = i a Hermitian, so exp(t a) = V exp(-i t diag(w)) V^H
  const CMatrix h = Complex(0.0, 1.0) * a.mat();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  if (eig.info() != Eigen::Success) {
    throw LieError(ErrorKind::numerical, "expm_skew: Hermitian eigensolver failed");
  }
  const RVector& w = eig.eigenvalues();
  Eigen::VectorXcd phases(n);
  for (Index k = 0; k < n; ++k) phases[k] = std::exp(Complex(0.0, -t * w[k]));
  const CMatrix& vecs = eig.eigenvectors();
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

double unitarity_residual(const CMatrix& u) {
  return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm();
}

// ---------------------------------------------------------------------------
// subspaces

RMatrix nullspace(const RMatrix& m, double rel_tol) {
  const Index cols = m.cols();
  if (cols == 0) return RMatrix(0, 0);
  if (m.rows() == 0) return RMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<RMatrix> svd(m, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  const double cut = rel_tol * std::max(1.0, s.size() > 0 ? s[0] : 0.0);
  Index rank = 0;
  for (Index k = 0; k < s.size(); ++k) {
    if (s[k] > cut) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

LieBasis subspace_from_coords(const LieBasis& basis, const RMatrix& coords,
                              std::span<const SkewHermitian> leading, double tol_rank) {
  const Index k = coords.cols();
  LieBasis out(basis.ambient_dim());
  if (k == 0) return out;
  if (coords.rows() != basis.size()) {
    throw LieError(ErrorKind::dimension_mismatch, "subspace_from_coords: coordinate rows mismatch");
  }
  out = extend_basis(std::move(out), leading, tol_rank);
  const RMatrix proj = coords * coords.transpose();
  std::vector<SkewHermitian> cands;
  cands.reserve(static_cast<std::size_t>(basis.size()));
  for (Index j = 0; j < basis.size(); ++j) cands.push_back(basis.combine(proj.col(j)));
  out = extend_basis(std::move(out), cands, tol_rank);
  if (out.size() < k) {
    std::vector<SkewHermitian> direct;
    for (Index j = 0; j < k; ++j) direct.push_back(basis.combine(coords.col(j)));
    out = extend_basis(std::move(out), direct, tol_rank);
  }
  if (out.size() != k) {
    throw LieError(ErrorKind::numerical,
                   "subspace_from_coords: expected dimension " + std::to_string(k) + ", got " +
                       std::to_string(out.size()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// diagnostics

double max_bracket_norm(const LieBasis& a, const LieBasis& b) {
  double worst = 0.0;
  for (const auto& x : a) {
    for (const auto& y : b) worst = std::max(worst, commutator(x, y).norm());
  }
  return worst;
}

double invariance_residual(const LieBasis& acting, const LieBasis& sub) {
  double worst = 0.0;
  for (const auto& a : acting) {
    for (const auto& v : sub) worst = std::max(worst, sub.residual(commutator(a, v)));
  }
  return worst;
}

double closure_residual(const LieBasis& b) { return invariance_residual(b, b); }

double span_distance(const LieBasis& a, const LieBasis& b) {
  if (a.size() != b.size() || a.ambient_dim() != b.ambient_dim()) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = 0.0;
  for (const auto& x : a) worst = std::max(worst, b.residual(x));
  for (const auto& y : b) worst = std::max(worst, a.residual(y));
  return worst;
}

}  // namespace liedec
