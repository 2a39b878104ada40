#include "liedec/levi.hpp"

#include "liedec/kernels.hpp"
#include "liedec/repr.hpp"

#include <algorithm>

namespace liedec {

LieBasis center(const LieBasis& basis, const Tolerances& tol) {
  const Index d = basis.size();
  if (d == 0) return LieBasis(basis.ambient_dim());
  const auto ads = structure_matrices(basis, tol);
  // coordinates r with [sum_i r_i e_i, e_j] = -ad_{e_j} r = 0 for every j
  RMatrix stacked(d * d, d);
  for (Index j = 0; j < d; ++j) stacked.middleRows(j * d, d) = ads[static_cast<std::size_t>(j)];
  return subspace_from_coords(basis, nullspace(stacked, tol.null), {}, tol.rank);
}

LieBasis derived_algebra(const LieBasis& basis, const Tolerances& tol) {
  const double res = closure_residual(basis);
  if (res > tol.rank) {
    throw LieError(ErrorKind::closure_failure,
                   "derived_algebra: basis is not bracket-closed (residual " + std::to_string(res) +
                       ")");
  }
  return extend_basis(LieBasis(basis.ambient_dim()), kernels::brackets_upper(basis.elements()),
                      tol.rank);
}

LeviResult levi_decompose(const LieBasis& basis, const Tolerances& tol) {
  LeviResult out{center(basis, tol), derived_algebra(basis, tol), {}};
  if (out.radical.size() + out.semisimple.size() != basis.size()) {
    throw LieError(ErrorKind::numerical,
                   "levi_decompose: dim center (" + std::to_string(out.radical.size()) +
                       ") + dim derived (" + std::to_string(out.semisimple.size()) +
                       ") != dim L (" + std::to_string(basis.size()) +
                       "); retry with a tighter rank tolerance");
  }
  const LieBasis joint = extend_basis(out.semisimple, out.radical.elements(), tol.rank);
  if (joint.size() != basis.size()) {
    throw LieError(ErrorKind::numerical, "levi_decompose: center and derived algebra intersect");
  }
  const double commute = max_bracket_norm(out.radical, basis);
  if (commute > tol.rank) {
    throw LieError(ErrorKind::numerical, "levi_decompose: radical is not central (residual " +
                                             std::to_string(commute) + ")");
  }
  for (const auto& r : out.radical) {
    out.radical_lines.push_back(LieBasis::from_orthonormal({r}, basis.ambient_dim()));
  }
  return out;
}

}  // namespace liedec
