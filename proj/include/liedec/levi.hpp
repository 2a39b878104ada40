#pragma once

// L = S (+) R for a subalgebra L of u(n): R is the center of L and S = [L, L].

#include "liedec/matkit.hpp"

#include <vector>

namespace liedec {

struct LeviResult {
  LieBasis radical;                     ///< R, the center of L
  LieBasis semisimple;                  ///< S = [L, L]
  std::vector<LieBasis> radical_lines;  ///< R split into one-dimensional pieces
};

/// {R in span(basis) : [R, e_j] = 0 for all j}. Throws closure_failure if the
/// basis is not bracket-closed.
LieBasis center(const LieBasis& basis, const Tolerances& tol = {});

/// Orthonormal basis of span{[e_i, e_j] : i < j}.
LieBasis derived_algebra(const LieBasis& basis, const Tolerances& tol = {});

/// Center and derived algebra, checked to form a direct sum of the whole
/// algebra with [R, L] = 0. Throws numerical if the ranks do not add up.
LeviResult levi_decompose(const LieBasis& basis, const Tolerances& tol = {});

}  // namespace liedec
