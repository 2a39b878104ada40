#include "liedec/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liedec::kernels {

namespace {

void check_dims(std::span<const SkewHermitian> a, std::span<const SkewHermitian> b,
                const char* where) {
  if (a.empty()) return;
  const Index n = a.front().dim();
  for (const auto& x : a) {
    if (x.dim() != n) throw LieError(ErrorKind::dimension_mismatch, where);
  }
  for (const auto& x : b) {
    if (x.dim() != n) throw LieError(ErrorKind::dimension_mismatch, where);
  }
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<SkewHermitian> brackets_outer(std::span<const SkewHermitian> lhs,
                                          std::span<const SkewHermitian> rhs, Exec exec) {
  check_dims(lhs, rhs, "brackets_outer: dimension mismatch");
  const std::ptrdiff_t nl = static_cast<std::ptrdiff_t>(lhs.size());
  const std::ptrdiff_t nr = static_cast<std::ptrdiff_t>(rhs.size());
  std::vector<SkewHermitian> out(lhs.size() * rhs.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < nl; ++i) {
      for (std::ptrdiff_t j = 0; j < nr; ++j) out[i * nr + j] = commutator(lhs[i], rhs[j]);
    }
    return out;
  }
  const std::ptrdiff_t total = nl * nr;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    out[k] = commutator(lhs[k / nr], rhs[k % nr]);
  }
  return out;
}

std::vector<SkewHermitian> brackets_upper(std::span<const SkewHermitian> elems, Exec exec) {
  check_dims(elems, {}, "brackets_upper: dimension mismatch");
  const std::size_t d = elems.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(d * (d > 0 ? d - 1 : 0) / 2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  }
  std::vector<SkewHermitian> out(pairs.size());
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(pairs.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t k = 0; k < total; ++k) {
      out[k] = commutator(elems[pairs[k].first], elems[pairs[k].second]);
    }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    out[k] = commutator(elems[pairs[k].first], elems[pairs[k].second]);
  }
  return out;
}

namespace {

// Coordinates of [x, e_j] and the relative membership residual.
double adjoint_column(const LieBasis& basis, const SkewHermitian& x, Index j,
                      Eigen::Ref<RVector> col) {
  const RVector v = vectorize(commutator(x, basis[j]));
  col = basis.frame().transpose() * v;
  const double res = (v - basis.frame() * col).norm();
  return res / std::max(1.0, v.norm());
}

}  // namespace

AdjointColumns adjoint_columns(const LieBasis& basis, const SkewHermitian& x, Exec exec) {
  if (x.dim() != basis.ambient_dim()) {
    throw LieError(ErrorKind::dimension_mismatch, "adjoint_columns: dimension mismatch");
  }
  const Index d = basis.size();
  AdjointColumns out{RMatrix::Zero(d, d), 0.0};
  std::vector<double> res(static_cast<std::size_t>(d), 0.0);
  if (exec == Exec::serial) {
    for (Index j = 0; j < d; ++j) res[j] = adjoint_column(basis, x, j, out.coords.col(j));
  } else {
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < d; ++j) res[j] = adjoint_column(basis, x, j, out.coords.col(j));
  }
  for (double r : res) out.max_residual = std::max(out.max_residual, r);
  return out;
}

StructureMatrices structure_matrices(const LieBasis& basis, Exec exec) {
  const Index d = basis.size();
  StructureMatrices out;
  out.ad.assign(static_cast<std::size_t>(d), RMatrix::Zero(d, d));
  // [e_k, e_j] = -[e_j, e_k]: compute each unordered pair once
  std::vector<std::pair<Index, Index>> pairs;
  for (Index k = 0; k < d; ++k) {
    for (Index j = k + 1; j < d; ++j) pairs.emplace_back(k, j);
  }
  std::vector<double> res(pairs.size(), 0.0);
  const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(pairs.size());
  auto body = [&](std::ptrdiff_t p) {
    const auto [k, j] = pairs[static_cast<std::size_t>(p)];
    const RVector v = vectorize(commutator(basis[k], basis[j]));
    const RVector c = basis.frame().transpose() * v;
    res[static_cast<std::size_t>(p)] = (v - basis.frame() * c).norm() / std::max(1.0, v.norm());
    out.ad[static_cast<std::size_t>(k)].col(j) = c;
    out.ad[static_cast<std::size_t>(j)].col(k) = -c;
  };
  if (exec == Exec::serial) {
    for (std::ptrdiff_t p = 0; p < total; ++p) body(p);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < total; ++p) body(p);
  }
  for (double r : res) out.max_residual = std::max(out.max_residual, r);
  return out;
}

std::optional<std::size_t> first_accepted(std::size_t count,
                                          const std::function<bool(std::size_t)>& accept,
                                          Exec exec) {
  if (exec == Exec::serial || max_threads() == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (accept(i)) return i;
    }
    return std::nullopt;
  }
  const std::size_t block = static_cast<std::size_t>(max_threads()) * 4;
  std::vector<char> hit(block);
  for (std::size_t start = 0; start < count; start += block) {
    const std::ptrdiff_t len = static_cast<std::ptrdiff_t>(std::min(block, count - start));
    std::fill(hit.begin(), hit.end(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < len; ++k) {
      hit[static_cast<std::size_t>(k)] = accept(start + static_cast<std::size_t>(k)) ? 1 : 0;
    }
    for (std::ptrdiff_t k = 0; k < len; ++k) {
      if (hit[static_cast<std::size_t>(k)]) return start + static_cast<std::size_t>(k);
    }
  }
  return std::nullopt;
}

}  // namespace liedec::kernels
