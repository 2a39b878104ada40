#include "liedec/ideals.hpp"

#include "liedec/kernels.hpp"
#include "liedec/repr.hpp"

#include <algorithm>
#include <cmath>

namespace liedec {

LieBasis minimal_ideal(const LieBasis& semisimple, const LieBasis& seed, const Tolerances& tol) {
  for (const auto& v : seed) {
    if (!member_coords(semisimple, v, tol.rank)) {
      throw LieError(ErrorKind::not_a_member, "minimal_ideal: seed is not inside S");
    }
  }
  LieBasis ideal = extend_basis(LieBasis(semisimple.ambient_dim()), seed.elements(), tol.rank);
  Index last = -1;
  while (ideal.size() != last && ideal.size() < semisimple.size()) {
    last = ideal.size();
    ideal = extend_basis(std::move(ideal),
                         kernels::brackets_outer(semisimple.elements(), ideal.elements()),
                         tol.rank);
  }
  return ideal;
}

IdealSet simple_decompose(const LieBasis& semisimple, const PrimaryResult& primary,
                          const Tolerances& tol) {
  IdealSet out;
  for (const auto& comp : primary.components) {
    LieBasis ideal = minimal_ideal(semisimple, comp.basis, tol);
    std::size_t slot = out.ideals.size();
    for (std::size_t k = 0; k < out.ideals.size(); ++k) {
      if (span_distance(out.ideals[k], ideal) <= tol.rank) {
        slot = k;
        break;
      }
    }
    if (slot == out.ideals.size()) out.ideals.push_back(std::move(ideal));
    out.origin.push_back(slot);
  }
  Index total = 0;
  for (const auto& ideal : out.ideals) total += ideal.size();
  if (total != semisimple.size()) {
    throw LieError(ErrorKind::numerical, "simple_decompose: ideal dimensions sum to " +
                                             std::to_string(total) + ", expected " +
                                             std::to_string(semisimple.size()));
  }
  for (std::size_t a = 0; a < out.ideals.size(); ++a) {
    for (std::size_t b = a + 1; b < out.ideals.size(); ++b) {
      const double r = max_bracket_norm(out.ideals[a], out.ideals[b]);
      if (r > tol.rank) {
        throw LieError(ErrorKind::numerical,
                       "simple_decompose: ideals do not commute (residual " + std::to_string(r) + ")");
      }
    }
  }
  return out;
}

std::optional<Su2Triple> recognize_su2(const LieBasis& ideal, const Tolerances& tol) {
  if (ideal.size() != 3) return std::nullopt;
  if (closure_residual(ideal) > tol.rank || !is_semisimple(ideal, tol)) return std::nullopt;
  // Gram-Schmidt in the Killing metric, in basis order, normalized to
  // K(E, E) = -2 (the value for a triple with [E1, E2] = E3); E3 = [E1, E2]
  auto scaled = [&](const SkewHermitian& x) {
    const double k = killing_form(ideal, x, x);
    if (!(k < 0.0)) throw LieError(ErrorKind::numerical, "recognize_su2: Killing form not negative definite");
    return std::sqrt(-2.0 / k) * x;
  };
  Su2Triple t;
  t.e[0] = scaled(ideal[0]);
  const SkewHermitian second = ideal[1] - (killing_form(ideal, ideal[1], t.e[0]) / -2.0) * t.e[0];
  t.e[1] = scaled(second);
  t.e[2] = commutator(t.e[0], t.e[1]);
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& x = t.e[k];
    const auto& y = t.e[(k + 1) % 3];
    const auto& z = t.e[(k + 2) % 3];
    t.relation_residual = std::max(t.relation_residual, (commutator(x, y) - z).norm());
  }
  if (t.relation_residual > tol.rank) return std::nullopt;
  return t;
}

}  // namespace liedec
