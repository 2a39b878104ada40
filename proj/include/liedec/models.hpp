#pragma once

// Spin-system building blocks and the two-spin control system.

#include "liedec/matkit.hpp"

#include <span>
#include <string>
#include <vector>

namespace liedec {

enum class Axis { x, y, z };

/// Half-scaled Pauli matrices:
///   x = 1/2 [[0, 1], [1, 0]],  y = 1/2 [[0, i], [-i, 0]],  z = 1/2 [[1, 0], [0, -1]].
/// The sign of y is chosen so that [i x, i y] = i z (and cyclic).
CMatrix pauli(Axis axis);

CMatrix identity(Index n);

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// H(u) = H0 + sum_k u_k H_k, evolving by dX/dt = -i H(u) X.
class ControlSystem {
 public:
  ControlSystem(CMatrix drift, std::vector<CMatrix> controls, std::vector<std::string> labels = {},
                double tol_herm = Tolerances{}.herm);

  Index dim() const noexcept { return drift_.rows(); }
  const CMatrix& drift() const noexcept { return drift_; }
  const std::vector<CMatrix>& controls() const noexcept { return controls_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t num_controls() const noexcept { return controls_.size(); }

  CMatrix hamiltonian(std::span<const double> u) const;
  /// -i H(u).
  SkewHermitian generator(std::span<const double> u) const;
  /// {i H0, i H1, ...}: the generator set of the dynamical Lie algebra.
  std::vector<SkewHermitian> lie_generators() const;

 private:
  CMatrix drift_;
  std::vector<CMatrix> controls_;
  std::vector<std::string> labels_;
};

/// H = u1 z(x)z + u2 y(x)y + x(x)1 on two spins (n = 4).
ControlSystem two_spin_system();

}  // namespace liedec
