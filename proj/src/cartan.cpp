#include "liedec/cartan.hpp"

#include "liedec/levi.hpp"
#include "liedec/repr.hpp"

namespace liedec {

LieBasis centralizer(const LieBasis& ambient, const SkewHermitian& x, const Tolerances& tol) {
  if (!member_coords(ambient, x, tol.rank)) {
    throw LieError(ErrorKind::not_a_member, "centralizer: x is not in the ambient algebra");
  }
  const RMatrix ad = adjoint_matrix(ambient, x, tol);
  std::vector<SkewHermitian> leading;
  if (x.norm() > 0.0) leading.push_back((1.0 / x.norm()) * x);
  return subspace_from_coords(ambient, nullspace(ad, tol.null), leading, tol.rank);
}

LieBasis normalizer(const LieBasis& ambient, const LieBasis& sub, const Tolerances& tol) {
  const Index d = ambient.size();
  const Index k = sub.size();
  RMatrix sub_coords(d, k);
  for (Index j = 0; j < k; ++j) {
    auto c = member_coords(ambient, sub[j], tol.rank);
    if (!c) throw LieError(ErrorKind::not_a_member, "normalizer: sub is not inside ambient");
    sub_coords.col(j) = *c;
  }
  const RMatrix outside = RMatrix::Identity(d, d) - sub_coords * sub_coords.transpose();
  RMatrix stacked(d * k, d);
  for (Index j = 0; j < k; ++j) {
    stacked.middleRows(j * d, d) = outside * adjoint_matrix(ambient, sub[j], tol);
  }
  if (k == 0) return ambient;
  return subspace_from_coords(ambient, nullspace(stacked, tol.null), {}, tol.rank);
}

CartanResult cartan_subalgebra(const LieBasis& semisimple, std::span<const SkewHermitian> pivots,
                               const Tolerances& tol) {
  if (!is_semisimple(semisimple, tol)) {
    throw LieError(ErrorKind::not_semisimple, "cartan_subalgebra: input is not semisimple");
  }
  CartanResult out{LieBasis(semisimple.ambient_dim()), 0, {}};
  LieBasis current = semisimple;
  while (!current.empty()) {
    if (out.iterations >= semisimple.size()) {
      throw LieError(ErrorKind::numerical, "cartan_subalgebra: iteration guard exceeded");
    }
    const std::size_t step = static_cast<std::size_t>(out.iterations);
    SkewHermitian pivot = current[0];
    if (step < pivots.size()) {
      pivot = pivots[step];
      if (pivot.norm() == 0.0 || !member_coords(current, pivot, tol.rank)) {
        throw LieError(ErrorKind::precondition,
                       "cartan_subalgebra: pivot " + std::to_string(step) +
                           " is zero or outside the current semisimple algebra");
      }
    }
    const LieBasis d = centralizer(current, pivot, tol);
    const LeviResult split = levi_decompose(d, tol);
    out.cartan = extend_basis(std::move(out.cartan), split.radical.elements(), tol.rank);
    out.pivot_elements.push_back(pivot);
    ++out.iterations;
    current = split.semisimple;
  }
  return out;
}

}  // namespace liedec
