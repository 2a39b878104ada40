#pragma once

// Simple ideals of a semisimple subalgebra of u(n), generated from the
// primary components, and recognition of su(2).

#include "liedec/matkit.hpp"
#include "liedec/primary.hpp"

#include <array>
#include <optional>
#include <vector>

namespace liedec {

struct IdealSet {
  std::vector<LieBasis> ideals;     ///< deduplicated, in order of first occurrence
  std::vector<std::size_t> origin;  ///< origin[j] = index of the ideal generated by V_j
};

/// Smallest ideal of S containing span(seed): W <- W + [S, W] until the
/// dimension stops growing. Throws not_a_member if the seed leaves S.
LieBasis minimal_ideal(const LieBasis& semisimple, const LieBasis& seed,
                       const Tolerances& tol = {});

/// One ideal per primary component, with coinciding ideals merged. Throws
/// numerical if the ideal dimensions do not add up to dim S.
IdealSet simple_decompose(const LieBasis& semisimple, const PrimaryResult& primary,
                          const Tolerances& tol = {});

/// Basis with [E1, E2] = E3, [E2, E3] = E1, [E3, E1] = E2.
struct Su2Triple {
  std::array<SkewHermitian, 3> e;
  double relation_residual = 0.0;  ///< worst Frobenius error over the three relations
};

/// E1 along the first basis element of a 3-dimensional semisimple ideal, E2
/// Killing-orthogonal to it within the first two, E3 = [E1, E2]; nullopt when
/// the ideal is not su(2).
std::optional<Su2Triple> recognize_su2(const LieBasis& ideal, const Tolerances& tol = {});

}  // namespace liedec
