#pragma once

// Adjoint representation and Killing form of a subalgebra of u(n).

#include "liedec/kernels.hpp"
#include "liedec/matkit.hpp"

#include <span>
#include <vector>

namespace liedec {

/// Real d x d matrix of ad_x in an orthonormal basis: entry (i, j) = <e_i, [x, e_j]>.
using AdjointMatrix = RMatrix;
/// Symmetric matrix K_ij = Tr(ad_{y_i} ad_{y_j}).
using KillingGram = RMatrix;

/// Throws not_a_member when some [x, e_j] leaves span(basis).
AdjointMatrix adjoint_matrix(const LieBasis& basis, const SkewHermitian& x,
                             const Tolerances& tol = {},
                             kernels::Exec exec = kernels::Exec::parallel);

/// ad_{e_k} for every basis element. Throws closure_failure if the basis is
/// not bracket-closed.
std::vector<AdjointMatrix> structure_matrices(const LieBasis& basis, const Tolerances& tol = {},
                                              kernels::Exec exec = kernels::Exec::parallel);

/// Tr(ad_y ad_z), with ad taken on span(algebra).
double killing_form(const LieBasis& algebra, const SkewHermitian& y, const SkewHermitian& z,
                    const Tolerances& tol = {});

/// Killing Gram matrix of the algebra's own basis.
KillingGram killing_gram(const LieBasis& algebra, const Tolerances& tol = {});

/// Killing Gram matrix of arbitrary elements of the algebra (need not be a basis).
KillingGram killing_gram(const LieBasis& algebra, std::span<const SkewHermitian> elements,
                         const Tolerances& tol = {});

/// Cartan's criterion: the smallest singular value of the Killing Gram matrix
/// exceeds tol.killing * max(1, largest singular value). The zero algebra is
/// reported as semisimple.
bool is_semisimple(const LieBasis& basis, const Tolerances& tol = {});

/// A basis of a compact semisimple algebra in which the Killing form is -1.
///
/// The elements f_k are not Hilbert-Schmidt orthonormal; coordinates and
/// adjoint matrices are expressed relative to them. In this frame every
/// adjoint matrix is antisymmetric.
class KillingFrame {
 public:
  KillingFrame(LieBasis hs_basis, RMatrix to_frame, RMatrix from_frame);

  const LieBasis& hs_basis() const noexcept { return basis_; }
  const std::vector<SkewHermitian>& elements() const noexcept { return elements_; }
  Index size() const noexcept { return basis_.size(); }

  /// x = sum_k c_k f_k; throws not_a_member outside the span.
  RVector coords(const SkewHermitian& x, const Tolerances& tol = {}) const;
  /// Matrix of ad_x in the f basis.
  AdjointMatrix adjoint(const SkewHermitian& x, const Tolerances& tol = {}) const;
  /// Killing Gram matrix of the f basis (-1 up to round-off).
  KillingGram gram(const Tolerances& tol = {}) const;

 private:
  LieBasis basis_;
  RMatrix to_frame_;    // f = E * to_frame_
  RMatrix from_frame_;  // inverse of to_frame_
  std::vector<SkewHermitian> elements_;
};

/// Symmetric (Lowdin) Killing orthonormalization: f = E (-K)^{-1/2}. Bases
/// whose Killing Gram is already a multiple of -1 are only rescaled.
KillingFrame killing_orthonormalize(const LieBasis& basis, const Tolerances& tol = {});

}  // namespace liedec
