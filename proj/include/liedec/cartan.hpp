#pragma once

// Cartan subalgebra of a semisimple subalgebra of u(n) by iterated centralizers.

#include "liedec/matkit.hpp"

#include <span>
#include <vector>

namespace liedec {

struct CartanResult {
  LieBasis cartan;
  int iterations = 0;
  std::vector<SkewHermitian> pivot_elements;  ///< the element X chosen at each step
};

/// {D in span(ambient) : [D, x] = 0}. The returned basis starts with x / ||x||.
LieBasis centralizer(const LieBasis& ambient, const SkewHermitian& x, const Tolerances& tol = {});

/// {s in span(ambient) : [s, sub] in span(sub)}.
LieBasis normalizer(const LieBasis& ambient, const LieBasis& sub, const Tolerances& tol = {});

/// Repeats: pick X != 0 in the current semisimple algebra, take its
/// centralizer D, move the center of D into the Cartan subalgebra and continue
/// on [D, D] until it vanishes.
///
/// Step k uses pivots[k] when given (it must lie in the current algebra),
/// otherwise the first basis element of the current algebra.
CartanResult cartan_subalgebra(const LieBasis& semisimple,
                               std::span<const SkewHermitian> pivots = {},
                               const Tolerances& tol = {});

}  // namespace liedec
