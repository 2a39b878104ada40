#include "liedec/dynamics.hpp"

#include <algorithm>
#include <exception>

namespace liedec {

namespace {

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const LieError& e) {
    throw PipelineError(name, e);
  }
}

}  // namespace

Analysis analyze(const std::vector<SkewHermitian>& generators, const PipelineOptions& options) {
  const Tolerances& tol = options.tol;
  Analysis out;
  out.closure = stage("closure", [&] { return generate_closure(generators, tol); });
  out.levi = stage("levi", [&] { return levi_decompose(out.closure.basis, tol); });
  const LieBasis& s = out.levi.semisimple;
  if (s.empty()) return out;
  out.cartan = stage("cartan", [&] { return cartan_subalgebra(s, options.pivots, tol); });
  out.primary = stage("primary", [&] {
    return primary_decompose(s, out.cartan->cartan, tol, options.splitting_coeffs);
  });
  out.ideals = stage("ideals", [&] { return simple_decompose(s, *out.primary, tol); });
  return out;
}

const char* to_string(ComponentKind kind) noexcept {
  return kind == ComponentKind::simple ? "simple" : "radical-line";
}

ComponentDecomposition decompose_system(const ControlSystem& system,
                                        const PipelineOptions& options) {
  ComponentDecomposition out;
  out.analysis = analyze(system.lie_generators(), options);
  out.full = out.analysis.closure.basis;
  if (out.analysis.ideals) {
    for (const auto& ideal : out.analysis.ideals->ideals) {
      out.components.push_back({ComponentKind::simple, ideal});
    }
  }
  for (const auto& line : out.analysis.levi.radical_lines) {
    out.components.push_back({ComponentKind::radical_line, line});
  }
  std::vector<SkewHermitian> all;
  for (const auto& c : out.components) all.insert(all.end(), c.basis.begin(), c.basis.end());
  out.adapted = stage("dynamics", [&] {
    LieBasis adapted = LieBasis::from_orthonormal(std::move(all), out.full.ambient_dim());
    if (adapted.size() != out.full.size()) {
      throw LieError(ErrorKind::numerical, "component dimensions do not add up to dim L");
    }
    return adapted;
  });
  return out;
}

// ---------------------------------------------------------------------------

ControlSchedule::ControlSchedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (!(s.duration > 0.0)) {
      throw LieError(ErrorKind::precondition, "ControlSchedule: durations must be positive");
    }
  }
}

double ControlSchedule::total_time() const {
  double t = 0.0;
  for (const auto& s : segments_) t += s.duration;
  return t;
}

std::vector<SkewHermitian> project_generator(const ComponentDecomposition& decomp,
                                             const ControlSystem& system,
                                             std::span<const double> u, const Tolerances& tol) {
  const SkewHermitian g = system.generator(u);
  const auto coords = member_coords(decomp.adapted, g, tol.rank);
  if (!coords) {
    throw LieError(ErrorKind::not_a_member,
                   "project_generator: -iH(u) is not in the decomposed algebra");
  }
  std::vector<SkewHermitian> pieces;
  Index offset = 0;
  for (const auto& c : decomp.components) {
    SkewHermitian piece = SkewHermitian::zero(g.dim());
    for (Index k = 0; k < c.basis.size(); ++k) piece += (*coords)[offset + k] * c.basis[k];
    offset += c.basis.size();
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

CMatrix ordered_product(const ComponentDecomposition& decomp, const std::vector<CMatrix>& factors) {
  const Index n = decomp.full.ambient_dim();
  CMatrix prod = CMatrix::Identity(n, n);
  for (int pass = 0; pass < 2; ++pass) {
    const ComponentKind want = pass == 0 ? ComponentKind::radical_line : ComponentKind::simple;
    for (std::size_t k = 0; k < decomp.components.size(); ++k) {
      if (decomp.components[k].kind == want) prod = prod * factors[k];
    }
  }
  return prod;
}

PropagationResult propagate(const ComponentDecomposition& decomp, const ControlSystem& system,
                            const ControlSchedule& schedule, const Tolerances& tol) {
  const Index n = system.dim();
  const std::ptrdiff_t p = static_cast<std::ptrdiff_t>(decomp.components.size());
  PropagationResult out;
  out.total = CMatrix::Identity(n, n);
  out.factors.assign(decomp.components.size(), CMatrix::Identity(n, n));
  out.time = schedule.total_time();

  for (const auto& seg : schedule.segments()) {
    const auto pieces = project_generator(decomp, system, seg.u, tol);
    out.total = expm_skew(system.generator(seg.u), seg.duration) * out.total;
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < p; ++k) {
      try {
        out.factors[k] = expm_skew(pieces[k], seg.duration) * out.factors[k];
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  out.factorization_error = (out.total - ordered_product(decomp, out.factors)).norm();
  out.unitarity_residual = unitarity_residual(out.total);
  for (std::size_t a = 0; a < out.factors.size(); ++a) {
    out.unitarity_residual = std::max(out.unitarity_residual, unitarity_residual(out.factors[a]));
    for (std::size_t b = a + 1; b < out.factors.size(); ++b) {
      const CMatrix& fa = out.factors[a];
      const CMatrix& fb = out.factors[b];
      out.commutation_residual = std::max(out.commutation_residual, (fa * fb - fb * fa).norm());
    }
  }
  return out;
}

}  // namespace liedec
