#include "liedec/models.hpp"

namespace liedec {

CMatrix pauli(Axis axis) {
  const Complex i(0.0, 1.0);
  CMatrix m(2, 2);
  switch (axis) {
    case Axis::x: m << 0.0, 1.0, 1.0, 0.0; break;
    case Axis::y: m << 0.0, i, -i, 0.0; break;
    case Axis::z: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return 0.5 * m;
}

CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void require_hermitian(const CMatrix& h, Index n, double tol, const std::string& what) {
  if (h.rows() != n || h.cols() != n) {
    throw LieError(ErrorKind::dimension_mismatch, what + " has the wrong shape");
  }
  if (!h.allFinite() || (h - h.adjoint()).norm() > tol * std::max(1.0, h.norm())) {
    throw LieError(ErrorKind::not_hermitian, what + " is not Hermitian");
  }
}

}  // namespace

ControlSystem::ControlSystem(CMatrix drift, std::vector<CMatrix> controls,
                             std::vector<std::string> labels, double tol_herm)
    : drift_(std::move(drift)), controls_(std::move(controls)), labels_(std::move(labels)) {
  const Index n = drift_.rows();
  if (n == 0) throw LieError(ErrorKind::precondition, "ControlSystem: empty drift");
  require_hermitian(drift_, n, tol_herm, "drift");
  for (std::size_t k = 0; k < controls_.size(); ++k) {
    require_hermitian(controls_[k], n, tol_herm, "control " + std::to_string(k));
  }
  if (labels_.empty()) {
    for (std::size_t k = 0; k < controls_.size(); ++k) labels_.push_back("u" + std::to_string(k + 1));
  }
  if (labels_.size() != controls_.size()) {
    throw LieError(ErrorKind::precondition, "ControlSystem: one label per control required");
  }
}

CMatrix ControlSystem::hamiltonian(std::span<const double> u) const {
  if (u.size() != controls_.size()) {
    throw LieError(ErrorKind::dimension_mismatch,
                   "ControlSystem: expected " + std::to_string(controls_.size()) +
                       " control values, got " + std::to_string(u.size()));
  }
  CMatrix h = drift_;
  for (std::size_t k = 0; k < u.size(); ++k) h += u[k] * controls_[k];
  return h;
}

SkewHermitian ControlSystem::generator(std::span<const double> u) const {
  return SkewHermitian::times_i(-hamiltonian(u), 1e-8);
}

std::vector<SkewHermitian> ControlSystem::lie_generators() const {
  std::vector<SkewHermitian> out;
  out.push_back(SkewHermitian::times_i(drift_, 1e-8));
  for (const auto& c : controls_) out.push_back(SkewHermitian::times_i(c, 1e-8));
  return out;
}

ControlSystem two_spin_system() {
  const CMatrix one = identity(2);
  return ControlSystem(kron(pauli(Axis::x), one),
                       {kron(pauli(Axis::z), pauli(Axis::z)), kron(pauli(Axis::y), pauli(Axis::y))},
                       {"u1", "u2"});
}

}  // namespace liedec
