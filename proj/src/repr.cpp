#include "liedec/repr.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace liedec {

AdjointMatrix adjoint_matrix(const LieBasis& basis, const SkewHermitian& x, const Tolerances& tol,
                             kernels::Exec exec) {
  auto cols = kernels::adjoint_columns(basis, x, exec);
  if (cols.max_residual > tol.rank) {
    throw LieError(ErrorKind::not_a_member,
                   "adjoint_matrix: [x, e_j] leaves the span (residual " +
                       std::to_string(cols.max_residual) + ")");
  }
  return std::move(cols.coords);
}

std::vector<AdjointMatrix> structure_matrices(const LieBasis& basis, const Tolerances& tol,
                                              kernels::Exec exec) {
  auto sm = kernels::structure_matrices(basis, exec);
  if (sm.max_residual > tol.rank) {
    throw LieError(ErrorKind::closure_failure,
                   "structure_matrices: basis is not bracket-closed (residual " +
                       std::to_string(sm.max_residual) + ")");
  }
  return std::move(sm.ad);
}

namespace {

void require_member(const LieBasis& algebra, const SkewHermitian& x, const Tolerances& tol,
                    const char* where) {
  if (!member_coords(algebra, x, tol.rank)) {
    throw LieError(ErrorKind::not_a_member, std::string(where) + ": element outside the algebra");
  }
}

}  // namespace

double killing_form(const LieBasis& algebra, const SkewHermitian& y, const SkewHermitian& z,
                    const Tolerances& tol) {
  require_member(algebra, y, tol, "killing_form");
  require_member(algebra, z, tol, "killing_form");
  const RMatrix ady = adjoint_matrix(algebra, y, tol);
  const RMatrix adz = adjoint_matrix(algebra, z, tol);
  return (ady * adz).trace();
}

KillingGram killing_gram(const LieBasis& algebra, std::span<const SkewHermitian> elements,
                         const Tolerances& tol) {
  std::vector<RMatrix> ads;
  ads.reserve(elements.size());
  for (const auto& y : elements) {
    require_member(algebra, y, tol, "killing_gram");
    ads.push_back(adjoint_matrix(algebra, y, tol));
  }
  const Index m = static_cast<Index>(elements.size());
  KillingGram k(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i; j < m; ++j) {
      // Tr(A B) = sum_ab A_ab B_ba
      const double v = ads[i].cwiseProduct(ads[j].transpose()).sum();
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

KillingGram killing_gram(const LieBasis& algebra, const Tolerances& tol) {
  const auto ads = structure_matrices(algebra, tol);
  const Index d = algebra.size();
  KillingGram k(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i; j < d; ++j) {
      const double v = ads[i].cwiseProduct(ads[j].transpose()).sum();
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

bool is_semisimple(const LieBasis& basis, const Tolerances& tol) {
  if (basis.empty()) return true;
  const KillingGram k = killing_gram(basis, tol);
  Eigen::JacobiSVD<RMatrix> svd(k);
  const RVector& s = svd.singularValues();
  return s[s.size() - 1] > tol.killing * std::max(1.0, s[0]);
}

// ---------------------------------------------------------------------------

KillingFrame::KillingFrame(LieBasis hs_basis, RMatrix to_frame, RMatrix from_frame)
    : basis_(std::move(hs_basis)),
      to_frame_(std::move(to_frame)),
      from_frame_(std::move(from_frame)) {
  elements_.reserve(static_cast<std::size_t>(basis_.size()));
  for (Index k = 0; k < basis_.size(); ++k) elements_.push_back(basis_.combine(to_frame_.col(k)));
}

RVector KillingFrame::coords(const SkewHermitian& x, const Tolerances& tol) const {
  auto c = member_coords(basis_, x, tol.rank);
  if (!c) throw LieError(ErrorKind::not_a_member, "KillingFrame::coords: element outside span");
  return from_frame_ * *c;
}

AdjointMatrix KillingFrame::adjoint(const SkewHermitian& x, const Tolerances& tol) const {
  return from_frame_ * adjoint_matrix(basis_, x, tol) * to_frame_;
}

KillingGram KillingFrame::gram(const Tolerances& tol) const {
  return to_frame_.transpose() * killing_gram(basis_, tol) * to_frame_;
}

KillingFrame killing_orthonormalize(const LieBasis& basis, const Tolerances& tol) {
  if (!is_semisimple(basis, tol)) {
    throw LieError(ErrorKind::not_semisimple, "killing_orthonormalize: Killing form is degenerate");
  }
  const Index d = basis.size();
  if (d == 0) return KillingFrame(basis, RMatrix(0, 0), RMatrix(0, 0));
  const RMatrix neg_k = -killing_gram(basis, tol);
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(neg_k);
  if (eig.info() != Eigen::Success) {
    throw LieError(ErrorKind::numerical, "killing_orthonormalize: eigensolver failed");
  }
  const RVector& w = eig.eigenvalues();  // ascending
  if (w[0] <= tol.killing * std::max(1.0, w[d - 1])) {
    throw LieError(ErrorKind::numerical,
                   "killing_orthonormalize: Killing form is not negative definite");
  }
  const RMatrix& q = eig.eigenvectors();
  const RMatrix to = q * w.cwiseSqrt().cwiseInverse().asDiagonal() * q.transpose();
  const RMatrix from = q * w.cwiseSqrt().asDiagonal() * q.transpose();
  return KillingFrame(basis, to, from);
}

}  // namespace liedec
