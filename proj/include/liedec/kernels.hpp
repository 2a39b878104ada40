#pragma once

// Data-parallel inner loops of the decomposition pipeline.
//
// Each kernel has an OpenMP path and a plain serial path. The serial path is
// the reference implementation: tests compare the two bit-for-bit on the
// outputs that matter, and bench/ times them against each other. Results are
// always returned in a fixed, input-determined order regardless of path.

#include "liedec/matkit.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace liedec::kernels {

enum class Exec { serial, parallel };

/// Number of worker threads the parallel path will use (1 without OpenMP).
int max_threads();

/// [lhs_i, rhs_j] for all i, j, row-major in i.
std::vector<SkewHermitian> brackets_outer(std::span<const SkewHermitian> lhs,
                                          std::span<const SkewHermitian> rhs,
                                          Exec exec = Exec::parallel);

/// [e_i, e_j] for i < j, ordered (0,1), (0,2), ..., (1,2), ...
std::vector<SkewHermitian> brackets_upper(std::span<const SkewHermitian> elems,
                                          Exec exec = Exec::parallel);

struct AdjointColumns {
  RMatrix coords;              ///< column j = coordinates of [x, e_j]
  double max_residual = 0.0;   ///< worst ||[x, e_j] - P [x, e_j]||, relative to max(1, ||.||)
};

/// Coordinates of [x, e_j] in the basis for every j.
AdjointColumns adjoint_columns(const LieBasis& basis, const SkewHermitian& x,
                               Exec exec = Exec::parallel);

struct StructureMatrices {
  std::vector<RMatrix> ad;     ///< ad[k] = matrix of ad_{e_k}
  double max_residual = 0.0;
};

/// ad_{e_k} for every basis element (the structure constants).
StructureMatrices structure_matrices(const LieBasis& basis, Exec exec = Exec::parallel);

/// Smallest index i < count with accept(i) true. The parallel path evaluates
/// blocks of candidates concurrently but still returns the first success.
/// `accept` must be safe to call concurrently.
std::optional<std::size_t> first_accepted(std::size_t count,
                                          const std::function<bool(std::size_t)>& accept,
                                          Exec exec = Exec::parallel);

}  // namespace liedec::kernels
