#pragma once

// Shared fixtures for the test binaries: the two-spin algebra, random
// skew-Hermitian generators and a few independent oracles.

#include "liedec/matkit.hpp"
#include "liedec/models.hpp"

#include <Eigen/SVD>

#include <array>
#include <random>
#include <vector>

namespace liedec::test {

inline const Complex I(0.0, 1.0);

inline CMatrix sx() { return pauli(Axis::x); }
inline CMatrix sy() { return pauli(Axis::y); }
inline CMatrix sz() { return pauli(Axis::z); }
inline CMatrix one2() { return CMatrix::Identity(2, 2); }

inline SkewHermitian ih(const CMatrix& h) { return SkewHermitian::times_i(h); }

/// The six-element basis of the two-spin algebra in reference order:
/// i x(x)1, i 1(x)x, i z(x)z, i y(x)y, i z(x)y, i y(x)z.
inline std::vector<SkewHermitian> two_spin_elements() {
  return {ih(kron(sx(), one2())), ih(kron(one2(), sx())), ih(kron(sz(), sz())),
          ih(kron(sy(), sy())),   ih(kron(sz(), sy())),   ih(kron(sy(), sz()))};
}

/// Orthonormalized version of two_spin_elements(), same order.
inline LieBasis two_spin_basis() {
  std::vector<SkewHermitian> e;
  for (const auto& x : two_spin_elements()) e.push_back((1.0 / x.norm()) * x);
  return LieBasis::from_orthonormal(e, 4);
}

inline std::array<SkewHermitian, 3> ideal_a() {
  const double h = 0.5;
  return {h * ih(kron(sx(), one2()) + kron(one2(), sx())),
          h * ih(kron(sz(), sy()) + kron(sy(), sz())),
          h * ih(kron(sz(), sz()) - kron(sy(), sy()))};
}

inline std::array<SkewHermitian, 3> ideal_b() {
  const double h = 0.5;
  return {h * ih(-kron(sx(), one2()) + kron(one2(), sx())),
          h * ih(kron(sz(), sy()) - kron(sy(), sz())),
          h * ih(kron(sz(), sz()) + kron(sy(), sy()))};
}

inline LieBasis orthonormal_span(const std::vector<SkewHermitian>& elems, Index n) {
  return extend_basis(LieBasis(n), elems);
}

inline LieBasis su2_basis() {
  return orthonormal_span({ih(sx()), ih(sy()), ih(sz())}, 2);
}

inline LieBasis u2_basis() {
  return orthonormal_span({ih(one2()), ih(sx()), ih(sy()), ih(sz())}, 2);
}

/// Random element of u(n) with unit Frobenius norm (optionally traceless or
/// block diagonal with the given first block size).
inline SkewHermitian random_skew(std::mt19937_64& rng, Index n, bool traceless = false,
                                 Index block = 0) {
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  CMatrix a = 0.5 * (m - m.adjoint());
  if (block > 0 && block < n) {
    a.block(0, block, block, n - block).setZero();
    a.block(block, 0, n - block, block).setZero();
  }
  if (traceless) a -= (a.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
  return SkewHermitian(CMatrix(a / a.norm()));
}

inline double dist(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }
inline double dist(const SkewHermitian& a, const SkewHermitian& b) { return (a - b).norm(); }

/// Rank of a list of matrices via SVD of their real vectorizations
/// (independent of the Gram-Schmidt path used by the library).
inline Index svd_rank(const std::vector<CMatrix>& mats, double rel = 1e-9) {
  if (mats.empty()) return 0;
  const Index nn = mats.front().size();
  RMatrix m(2 * nn, static_cast<Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    for (Index e = 0; e < nn; ++e) {
      m(e, static_cast<Index>(k)) = mats[k].data()[e].real();
      m(nn + e, static_cast<Index>(k)) = mats[k].data()[e].imag();
    }
  }
  Eigen::JacobiSVD<RMatrix> svd(m);
  const auto& s = svd.singularValues();
  Index r = 0;
  for (Index k = 0; k < s.size(); ++k) r += s[k] > rel * std::max(1.0, s[0]) ? 1 : 0;
  return r;
}

/// Brute-force closure: keep adding all pairwise brackets of everything found
/// so far until the SVD rank stops growing.
inline Index brute_force_closure_dim(std::vector<CMatrix> mats) {
  Index rank = svd_rank(mats);
  for (;;) {
    const std::size_t m = mats.size();
    std::vector<CMatrix> next = mats;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) next.push_back(mats[i] * mats[j] - mats[j] * mats[i]);
    }
    // keep a rank-revealing subset to stop the list from exploding
    std::vector<CMatrix> kept;
    for (const auto& x : next) {
      kept.push_back(x);
      if (svd_rank(kept) < static_cast<Index>(kept.size())) kept.pop_back();
    }
    const Index r = static_cast<Index>(kept.size());
    mats = std::move(kept);
    if (r == rank) return r;
    rank = r;
  }
}

}  // namespace liedec::test
