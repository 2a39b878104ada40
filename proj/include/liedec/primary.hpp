#pragma once

// Splitting elements and the collected primary decomposition
// S = A (+) V_1 (+) ... (+) V_r of a semisimple S relative to a Cartan
// subalgebra A.

#include "liedec/kernels.hpp"
#include "liedec/matkit.hpp"

#include <optional>
#include <vector>

namespace liedec {

struct SplittingElement {
  RVector coeffs;                    ///< c_j over the Cartan basis
  SkewHermitian element;             ///< X = sum_j c_j A_j
  std::vector<double> frequencies;   ///< distinct a_j > 0, strictly decreasing
  std::size_t distinct_eigenvalues = 0;  ///< count of 0 and +-i a_j
};

struct PrimaryComponent {
  double frequency = 0.0;
  LieBasis basis;  ///< V_j, two-dimensional
};

struct PrimaryResult {
  LieBasis cartan;
  SplittingElement splitting;
  std::vector<PrimaryComponent> components;  ///< strictly decreasing frequency
};

/// Spectrum of ad_X on S for X = sum_j coeffs_j A_j, as the sorted nonnegative
/// values a with ad_X eigenvalue +-i a (each nonzero a listed twice, zero
/// listed once per zero eigenvalue).
std::vector<double> adjoint_frequencies(const LieBasis& semisimple, const LieBasis& cartan,
                                        const RVector& coeffs, const Tolerances& tol = {});

/// Splitting test for one coefficient vector: ad_X must have exactly
/// dim S - dim A + 1 distinct eigenvalues (clustered at tol.eig times the
/// spectral radius), i.e. a zero eigenspace of dimension dim A and simple
/// nonzero pairs +-i a_j.
std::optional<SplittingElement> try_splitting(const LieBasis& semisimple, const LieBasis& cartan,
                                              const RVector& coeffs, const Tolerances& tol = {});

/// Deterministic splitting-element search.
///
/// Candidate order: integer vectors in {1, ..., 2 dim S}^m in lexicographic
/// order, skipping vectors whose entries share a common factor, then up to
/// 1000 seeded uniform draws from [-1, 1]^m. Returns the first accepted
/// candidate at or after `start`; throws search_exhausted otherwise.
class SplittingSearch {
 public:
  SplittingSearch(const LieBasis& semisimple, const LieBasis& cartan, const Tolerances& tol = {},
                  kernels::Exec exec = kernels::Exec::parallel);

  /// Total number of candidates in the sweep.
  std::size_t size() const noexcept { return lattice_size_ + random_.size(); }
  RVector candidate(std::size_t index) const;

  struct Hit {
    std::size_t index;
    SplittingElement element;
  };
  std::optional<Hit> next(std::size_t start = 0) const;

  static constexpr std::size_t kRandomDraws = 1000;
  static constexpr std::size_t kLatticeCap = 200000;

 private:
  LieBasis semisimple_;
  LieBasis cartan_;
  Tolerances tol_;
  kernels::Exec exec_;
  std::size_t side_ = 0;
  std::size_t lattice_size_ = 0;
  std::vector<RVector> random_;
};

SplittingElement find_splitting_element(const LieBasis& semisimple, const LieBasis& cartan,
                                        const Tolerances& tol = {},
                                        kernels::Exec exec = kernels::Exec::parallel);

/// V_j = nullspace of ad_X^2 + a_j^2 on S for each frequency of a splitting
/// element X. With explicit `coeffs` that element is used (and must split);
/// otherwise the search above runs, moving on to the next accepted candidate
/// if some V_j is not two-dimensional.
PrimaryResult primary_decompose(const LieBasis& semisimple, const LieBasis& cartan,
                                const Tolerances& tol = {},
                                std::optional<RVector> coeffs = std::nullopt);

/// 2 x 2 (generally k x k) matrix <v_i, [a, v_j]> of ad_a restricted to span(sub).
RMatrix restricted_adjoint(const LieBasis& sub, const SkewHermitian& a);

}  // namespace liedec
