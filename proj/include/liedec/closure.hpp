#pragma once

// Dynamical Lie algebra of a generator set, and the controllability test.

#include "liedec/kernels.hpp"
#include "liedec/matkit.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace liedec {

struct ClosureResult {
  LieBasis basis;
  int depth_reached = 0;            ///< last bracket depth that produced a new direction
  std::size_t generators_used = 0;  ///< nonzero generators taking part in the brackets
};

/// Smallest real Lie algebra containing the generators.
///
/// Generators are normalized to unit Frobenius norm. Each new layer of
/// directions is bracketed against the original generators only; the loop
/// stops when a layer adds nothing or the dimension reaches n^2. A final
/// all-pairs pass confirms the span is closed and feeds any direction it
/// finds back into the layered loop.
ClosureResult generate_closure(std::span<const SkewHermitian> generators,
                               const Tolerances& tol = {},
                               kernels::Exec exec = kernels::Exec::parallel);

inline ClosureResult generate_closure(const std::vector<SkewHermitian>& generators,
                                      const Tolerances& tol = {},
                                      kernels::Exec exec = kernels::Exec::parallel) {
  return generate_closure(std::span<const SkewHermitian>(generators), tol, exec);
}

enum class TargetGroup { detected, u, su };
enum class Controllability { controllable_u, controllable_su, uncontrollable };

std::string_view to_string(Controllability c) noexcept;

/// detected: controllable-U iff dim = n^2; controllable-SU iff dim = n^2 - 1
/// and every basis element is traceless.
/// u: only controllable-U (dim = n^2) or uncontrollable.
/// su: controllable-SU whenever the algebra contains su(n), i.e. also when
/// dim = n^2.
Controllability is_controllable(const ClosureResult& result,
                                TargetGroup target = TargetGroup::detected);

}  // namespace liedec
