#pragma once

// Dense complex matrix kernel for subalgebras of u(n).
//
// Every algebra computation in the library happens in the real vector space
// of n x n skew-Hermitian matrices, equipped with the Hilbert-Schmidt inner
// product <A, B> = Re Tr(A^H B). Internally an element is vectorized as the
// real 2n^2 vector [Re(A); Im(A)] (column major), so that <A, B> is the plain
// Euclidean dot product of the vectorizations.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liedec {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorKind {
  dimension_mismatch,
  not_hermitian,
  not_a_member,
  closure_failure,
  not_semisimple,
  precondition,
  search_exhausted,
  numerical,
};

const char* to_string(ErrorKind kind) noexcept;

class LieError : public std::runtime_error {
 public:
  LieError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Numerical thresholds shared by all modules. Relative thresholds are taken
/// against max(1, scale) unless a module documents otherwise.
struct Tolerances {
  double herm = 1e-10;     ///< skew-Hermitian validation
  double rank = 1e-8;      ///< linear independence / span membership
  double null = 1e-8;      ///< singular-value cut for nullspaces
  double eig = 1e-6;       ///< eigenvalue clustering, relative to spectral radius
  double killing = 1e-6;   ///< Killing form nondegeneracy
};

/// An element of u(n). Construction validates ||m + m^H|| and then projects
/// onto the skew-Hermitian part, absorbing round-off from deep brackets.
class SkewHermitian {
 public:
  SkewHermitian() = default;
  explicit SkewHermitian(const CMatrix& m, double tol_herm = Tolerances{}.herm);

  static SkewHermitian zero(Index n);
  /// i * h for a Hermitian h.
  static SkewHermitian times_i(const CMatrix& hermitian,
                               double tol_herm = Tolerances{}.herm);

  const CMatrix& mat() const noexcept { return mat_; }
  Index dim() const noexcept { return mat_.rows(); }
  double norm() const { return mat_.norm(); }
  Complex trace() const { return mat_.trace(); }

  SkewHermitian& operator+=(const SkewHermitian& other);
  SkewHermitian& operator-=(const SkewHermitian& other);
  SkewHermitian& operator*=(double s);

  friend SkewHermitian operator+(SkewHermitian a, const SkewHermitian& b) { return a += b; }
  friend SkewHermitian operator-(SkewHermitian a, const SkewHermitian& b) { return a -= b; }
  friend SkewHermitian operator*(double s, SkewHermitian a) { return a *= s; }
  friend SkewHermitian operator*(SkewHermitian a, double s) { return a *= s; }
  friend SkewHermitian operator-(SkewHermitian a) { return a *= -1.0; }

 private:
  struct Trusted {};
  SkewHermitian(CMatrix m, Trusted) : mat_(std::move(m)) {}
  friend SkewHermitian commutator(const SkewHermitian&, const SkewHermitian&);
  friend SkewHermitian devectorize(const RVector&, Index);

  CMatrix mat_;
};

/// [a, b] = ab - ba.
SkewHermitian commutator(const SkewHermitian& a, const SkewHermitian& b);

/// Re Tr(a^H b).
double hs_inner(const SkewHermitian& a, const SkewHermitian& b);

RVector vectorize(const SkewHermitian& a);
SkewHermitian devectorize(const RVector& v, Index n);

/// Ordered Hilbert-Schmidt orthonormal list of elements of u(n).
///
/// The only ways to build one are extend_basis (which orthonormalizes) and
/// from_orthonormal (which validates), so the orthonormality invariant holds
/// for every instance.
class LieBasis {
 public:
  explicit LieBasis(Index ambient_dim = 0) : n_(ambient_dim), frame_(2 * n_ * n_, 0) {}

  /// Validates |<e_i, e_j> - delta_ij| <= tol; throws numerical otherwise.
  static LieBasis from_orthonormal(std::vector<SkewHermitian> elements, Index ambient_dim,
                                   double tol = 1e-9);

  Index ambient_dim() const noexcept { return n_; }
  Index size() const noexcept { return static_cast<Index>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }

  const SkewHermitian& operator[](Index i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<SkewHermitian>& elements() const noexcept { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Columns are the vectorized basis elements (2n^2 x d).
  const RMatrix& frame() const noexcept { return frame_; }

  /// Orthogonal-projection coordinates <e_i, x>, without a membership check.
  RVector project(const SkewHermitian& x) const;
  /// sum_i c_i e_i.
  SkewHermitian combine(const RVector& coords) const;
  /// ||x - P x||_F.
  double residual(const SkewHermitian& x) const;

 private:
  friend LieBasis extend_basis(LieBasis, std::span<const SkewHermitian>, double);
  void append_unit(const RVector& v);

  Index n_;
  std::vector<SkewHermitian> elements_;
  RMatrix frame_;
};

/// Appends, in candidate order, every candidate whose residual after
/// projection onto the current span exceeds tol_rank * max(1, ||candidate||).
/// Modified Gram-Schmidt with one re-orthogonalization pass.
LieBasis extend_basis(LieBasis basis, std::span<const SkewHermitian> candidates,
                      double tol_rank = Tolerances{}.rank);

inline LieBasis extend_basis(LieBasis basis, const std::vector<SkewHermitian>& candidates,
                             double tol_rank = Tolerances{}.rank) {
  return extend_basis(std::move(basis), std::span<const SkewHermitian>(candidates), tol_rank);
}

/// Coordinates of x if x lies in span(basis) within tol_rank * max(1, ||x||).
std::optional<RVector> member_coords(const LieBasis& basis, const SkewHermitian& x,
                                     double tol_rank = Tolerances{}.rank);

/// exp(t a) via the unitary eigendecomposition of the Hermitian matrix i a.
CMatrix expm_skew(const SkewHermitian& a, double t);

/// ||U^H U - 1||_F.
double unitarity_residual(const CMatrix& u);

// Subspace helpers shared by the decomposition modules.

/// Orthonormal basis (columns) of the numerical nullspace of m: singular
/// values <= rel_tol * max(1, sigma_max) are treated as zero.
RMatrix nullspace(const RMatrix& m, double rel_tol = Tolerances{}.null);

/// Subspace of span(basis) whose coordinates are spanned by the orthonormal
/// columns of `coords`. The returned basis starts with `leading` (which must
/// lie in the subspace) and continues with the projections of the original
/// basis elements, so results are reproducible and stay close to the input
/// basis directions.
LieBasis subspace_from_coords(const LieBasis& basis, const RMatrix& coords,
                              std::span<const SkewHermitian> leading = {},
                              double tol_rank = Tolerances{}.rank);

// Residual diagnostics used by tests and by the structure report.

/// max_ij ||[a_i, b_j]||_F (0 when either side is empty).
double max_bracket_norm(const LieBasis& a, const LieBasis& b);
/// max over a in acting, v in sub of ||[a, v] - P_sub [a, v]||_F.
double invariance_residual(const LieBasis& acting, const LieBasis& sub);
/// invariance_residual(b, b): how far span(b) is from being a subalgebra.
double closure_residual(const LieBasis& b);
/// Mutual membership residual; +inf when the dimensions differ.
double span_distance(const LieBasis& a, const LieBasis& b);

void require_same_dim(const SkewHermitian& a, const SkewHermitian& b, const char* where);

}  // namespace liedec
