#include "liedec/closure.hpp"

#include <cmath>

namespace liedec {

namespace {

constexpr double kZeroGenerator = 1e-14;

// Directions of `candidates` not yet in the basis; the basis is extended in place.
std::vector<SkewHermitian> absorb(LieBasis& basis, const std::vector<SkewHermitian>& candidates,
                                  double tol_rank) {
  const Index before = basis.size();
  basis = extend_basis(std::move(basis), candidates, tol_rank);
  return {basis.elements().begin() + before, basis.elements().end()};
}

}  // namespace

ClosureResult generate_closure(std::span<const SkewHermitian> generators, const Tolerances& tol,
                               kernels::Exec exec) {
  if (generators.empty()) {
    throw LieError(ErrorKind::precondition, "generate_closure: empty generator list");
  }
  const Index n = generators.front().dim();
  std::vector<SkewHermitian> gens;
  for (const auto& g : generators) {
    if (g.dim() != n) {
      throw LieError(ErrorKind::dimension_mismatch, "generate_closure: generator dimensions differ");
    }
    const double nrm = g.norm();
    if (nrm > kZeroGenerator) gens.push_back((1.0 / nrm) * g);
  }

  ClosureResult result{LieBasis(n), 0, gens.size()};
  if (gens.empty()) return result;

  const Index full = n * n;
  std::vector<SkewHermitian> layer = absorb(result.basis, gens, tol.rank);
  int depth = 0;
  for (;;) {
    // layered schedule: new directions against the original generators
    while (!layer.empty() && result.basis.size() < full && depth < full) {
      ++depth;
      layer = absorb(result.basis, kernels::brackets_outer(layer, gens, exec), tol.rank);
      if (!layer.empty()) result.depth_reached = depth;
    }
    if (result.basis.size() >= full) break;
    // all-pairs safety net
    layer = absorb(result.basis, kernels::brackets_upper(result.basis.elements(), exec), tol.rank);
    if (layer.empty()) break;
    if (depth >= full) {
      throw LieError(ErrorKind::closure_failure,
                     "generate_closure: no closed span reached within the depth cap");
    }
  }
  return result;
}

std::string_view to_string(Controllability c) noexcept {
  switch (c) {
    case Controllability::controllable_u: return "controllable-U";
    case Controllability::controllable_su: return "controllable-SU";
    case Controllability::uncontrollable: return "uncontrollable";
  }
  return "uncontrollable";
}

Controllability is_controllable(const ClosureResult& result, TargetGroup target) {
  const Index n = result.basis.ambient_dim();
  const Index dim = result.basis.size();
  const Index full = n * n;
  bool traceless = true;
  for (const auto& e : result.basis) traceless = traceless && std::abs(e.trace()) <= 1e-9;

  switch (target) {
    case TargetGroup::u:
      return dim == full ? Controllability::controllable_u : Controllability::uncontrollable;
    case TargetGroup::su:
      if (dim == full || (dim == full - 1 && traceless)) return Controllability::controllable_su;
      return Controllability::uncontrollable;
    case TargetGroup::detected:
      break;
  }
  if (dim == full) return Controllability::controllable_u;
  if (dim == full - 1 && traceless) return Controllability::controllable_su;
  return Controllability::uncontrollable;
}

}  // namespace liedec
