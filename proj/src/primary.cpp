#include "liedec/primary.hpp"

#include "liedec/repr.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace liedec {

namespace {

void require_inside(const LieBasis& semisimple, const LieBasis& cartan, const Tolerances& tol) {
  for (const auto& a : cartan) {
    if (!member_coords(semisimple, a, tol.rank)) {
      throw LieError(ErrorKind::not_a_member, "primary: Cartan element outside the semisimple algebra");
    }
  }
}

SkewHermitian cartan_element(const LieBasis& cartan, const RVector& coeffs) {
  if (coeffs.size() != cartan.size()) {
    throw LieError(ErrorKind::dimension_mismatch,
                   "splitting: expected " + std::to_string(cartan.size()) + " coefficients, got " +
                       std::to_string(coeffs.size()));
  }
  return cartan.combine(coeffs);
}

}  // namespace

std::vector<double> adjoint_frequencies(const LieBasis& semisimple, const LieBasis& cartan,
                                        const RVector& coeffs, const Tolerances& tol) {
  const SkewHermitian x = cartan_element(cartan, coeffs);
  const RMatrix ad = adjoint_matrix(semisimple, x, tol, kernels::Exec::serial);
  // ad is antisymmetric in an orthonormal basis, so ad^T ad = -ad^2 has
  // eigenvalues a^2 for each eigenvalue pair +-i a
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(ad.transpose() * ad, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw LieError(ErrorKind::numerical, "adjoint_frequencies: eigensolver failed");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(ad.rows()));
  for (Index k = 0; k < ad.rows(); ++k) out.push_back(std::sqrt(std::max(0.0, eig.eigenvalues()[k])));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SplittingElement> try_splitting(const LieBasis& semisimple, const LieBasis& cartan,
                                              const RVector& coeffs, const Tolerances& tol) {
  const std::vector<double> a = adjoint_frequencies(semisimple, cartan, coeffs, tol);
  if (a.empty() || a.back() <= 0.0) return std::nullopt;
  const double gap = tol.eig * a.back();
  const std::size_t dim_s = a.size();
  const std::size_t dim_a = static_cast<std::size_t>(cartan.size());

  std::size_t zeros = 0;
  while (zeros < a.size() && a[zeros] <= gap) ++zeros;
  if (zeros != dim_a) return std::nullopt;

  std::vector<double> freqs;
  std::size_t i = zeros;
  while (i < a.size()) {
    std::size_t j = i + 1;
    while (j < a.size() && a[j] - a[j - 1] <= gap) ++j;
    if (j - i != 2) return std::nullopt;  // each +-i a_j must be simple
    freqs.push_back(0.5 * (a[i] + a[i + 1]));
    i = j;
  }
  const std::size_t distinct = 1 + 2 * freqs.size();
  if (distinct != dim_s - dim_a + 1) return std::nullopt;

  std::reverse(freqs.begin(), freqs.end());
  return SplittingElement{coeffs, cartan_element(cartan, coeffs), std::move(freqs), distinct};
}

// ---------------------------------------------------------------------------

SplittingSearch::SplittingSearch(const LieBasis& semisimple, const LieBasis& cartan,
                                 const Tolerances& tol, kernels::Exec exec)
    : semisimple_(semisimple), cartan_(cartan), tol_(tol), exec_(exec) {
  require_inside(semisimple, cartan, tol);
  const std::size_t m = static_cast<std::size_t>(cartan.size());
  side_ = 2 * static_cast<std::size_t>(semisimple.size());
  lattice_size_ = m == 0 ? 0 : 1;
  for (std::size_t k = 0; k < m && lattice_size_ < kLatticeCap; ++k) {
    lattice_size_ = std::min(kLatticeCap, lattice_size_ * side_);
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  if (m > 0) {
    random_.reserve(kRandomDraws);
    for (std::size_t r = 0; r < kRandomDraws; ++r) {
      RVector c(static_cast<Index>(m));
      for (Index k = 0; k < c.size(); ++k) c[k] = unit(rng);
      random_.push_back(std::move(c));
    }
  }
}

RVector SplittingSearch::candidate(std::size_t index) const {
  if (index >= lattice_size_) return random_.at(index - lattice_size_);
  const Index m = cartan_.size();
  RVector c(m);
  // lexicographic: first coordinate is the most significant digit
  for (Index k = m - 1; k >= 0; --k) {
    c[k] = static_cast<double>(index % side_ + 1);
    index /= side_;
  }
  return c;
}

std::optional<SplittingSearch::Hit> SplittingSearch::next(std::size_t start) const {
  if (start >= size()) return std::nullopt;
  auto accept = [&](std::size_t offset) {
    const std::size_t index = start + offset;
    const RVector c = candidate(index);
    if (index < lattice_size_) {
      long g = 0;
      for (Index k = 0; k < c.size(); ++k) g = std::gcd(g, static_cast<long>(c[k]));
      if (g != 1) return false;
    }
    return try_splitting(semisimple_, cartan_, c, tol_).has_value();
  };
  const auto found = kernels::first_accepted(size() - start, accept, exec_);
  if (!found) return std::nullopt;
  const std::size_t index = start + *found;
  return Hit{index, *try_splitting(semisimple_, cartan_, candidate(index), tol_)};
}

SplittingElement find_splitting_element(const LieBasis& semisimple, const LieBasis& cartan,
                                        const Tolerances& tol, kernels::Exec exec) {
  SplittingSearch search(semisimple, cartan, tol, exec);
  auto hit = search.next();
  if (!hit) {
    throw LieError(ErrorKind::search_exhausted,
                   "find_splitting_element: no splitting element among " +
                       std::to_string(search.size()) + " candidates");
  }
  return std::move(hit->element);
}

// ---------------------------------------------------------------------------

namespace {

// Empty optional signals an eigenspace-dimension anomaly.
std::optional<std::vector<PrimaryComponent>> eigenspaces(const LieBasis& semisimple,
                                                         const SplittingElement& split,
                                                         const Tolerances& tol) {
  const RMatrix ad = adjoint_matrix(semisimple, split.element, tol);
  const RMatrix ad2 = ad * ad;
  const Index d = semisimple.size();
  std::vector<PrimaryComponent> out;
  for (double a : split.frequencies) {
    const RMatrix shifted = ad2 + a * a * RMatrix::Identity(d, d);
    const RMatrix null = nullspace(shifted, tol.null);
    if (null.cols() != 2) return std::nullopt;
    out.push_back({a, subspace_from_coords(semisimple, null, {}, tol.rank)});
  }
  return out;
}

}  // namespace

PrimaryResult primary_decompose(const LieBasis& semisimple, const LieBasis& cartan,
                                const Tolerances& tol, std::optional<RVector> coeffs) {
  if (semisimple.size() <= cartan.size()) {
    throw LieError(ErrorKind::precondition,
                   "primary_decompose: the semisimple algebra must be strictly larger than its "
                   "Cartan subalgebra");
  }
  if (!is_semisimple(semisimple, tol)) {
    throw LieError(ErrorKind::not_semisimple, "primary_decompose: input is not semisimple");
  }
  require_inside(semisimple, cartan, tol);

  auto finish = [&](SplittingElement split,
                    std::vector<PrimaryComponent> comps) -> PrimaryResult {
    LieBasis all = cartan;
    for (const auto& c : comps) all = extend_basis(std::move(all), c.basis.elements(), tol.rank);
    if (all.size() != semisimple.size()) {
      throw LieError(ErrorKind::numerical, "primary_decompose: components do not span S");
    }
    return PrimaryResult{cartan, std::move(split), std::move(comps)};
  };

  if (coeffs) {
    auto split = try_splitting(semisimple, cartan, *coeffs, tol);
    if (!split) {
      throw LieError(ErrorKind::precondition,
                     "primary_decompose: the given coefficients do not define a splitting element");
    }
    auto comps = eigenspaces(semisimple, *split, tol);
    if (!comps) {
      throw LieError(ErrorKind::numerical,
                     "primary_decompose: an eigenspace is not two-dimensional");
    }
    return finish(std::move(*split), std::move(*comps));
  }

  SplittingSearch search(semisimple, cartan, tol);
  std::size_t start = 0;
  while (auto hit = search.next(start)) {
    if (auto comps = eigenspaces(semisimple, hit->element, tol)) {
      return finish(std::move(hit->element), std::move(*comps));
    }
    start = hit->index + 1;
  }
  throw LieError(ErrorKind::search_exhausted,
                 "primary_decompose: no splitting element with two-dimensional eigenspaces");
}

RMatrix restricted_adjoint(const LieBasis& sub, const SkewHermitian& a) {
  const Index k = sub.size();
  RMatrix r(k, k);
  for (Index j = 0; j < k; ++j) {
    const SkewHermitian image = commutator(a, sub[j]);
    for (Index i = 0; i < k; ++i) r(i, j) = hs_inner(sub[i], image);
  }
  return r;
}

}  // namespace liedec
