#pragma once

// Decoupled propagation of a control system along the decomposition of its
// dynamical Lie algebra into simple ideals and central lines.

#include "liedec/cartan.hpp"
#include "liedec/closure.hpp"
#include "liedec/ideals.hpp"
#include "liedec/levi.hpp"
#include "liedec/matkit.hpp"
#include "liedec/models.hpp"
#include "liedec/primary.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liedec {

struct PipelineOptions {
  Tolerances tol;
  std::vector<SkewHermitian> pivots;      ///< explicit Cartan pivots, step by step
  std::optional<RVector> splitting_coeffs;  ///< explicit splitting element over the Cartan basis
};

/// Outputs of every stage. The semisimple stages are empty when S = 0.
struct Analysis {
  ClosureResult closure;
  LeviResult levi;
  std::optional<CartanResult> cartan;
  std::optional<PrimaryResult> primary;
  std::optional<IdealSet> ideals;
};

/// A LieError tagged with the pipeline stage that raised it.
class PipelineError : public LieError {
 public:
  PipelineError(std::string stage, const LieError& cause)
      : LieError(cause.kind(), stage + ": " + cause.what()), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// closure -> levi -> cartan -> primary -> ideals.
Analysis analyze(const std::vector<SkewHermitian>& generators, const PipelineOptions& options = {});

enum class ComponentKind { simple, radical_line };
const char* to_string(ComponentKind kind) noexcept;

struct Component {
  ComponentKind kind;
  LieBasis basis;
};

struct ComponentDecomposition {
  LieBasis full;                     ///< L
  std::vector<Component> components; ///< simple ideals, then radical lines
  LieBasis adapted;                  ///< concatenated component bases
  Analysis analysis;
};

ComponentDecomposition decompose_system(const ControlSystem& system,
                                        const PipelineOptions& options = {});

/// Piecewise-constant controls.
class ControlSchedule {
 public:
  struct Segment {
    double duration;
    std::vector<double> u;
  };

  ControlSchedule() = default;
  explicit ControlSchedule(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  double total_time() const;

 private:
  std::vector<Segment> segments_;
};

/// -i H(u) split along the components; the pieces sum to -i H(u).
std::vector<SkewHermitian> project_generator(const ComponentDecomposition& decomp,
                                             const ControlSystem& system, std::span<const double> u,
                                             const Tolerances& tol = {});

struct PropagationResult {
  CMatrix total;                 ///< X(T) from the full generator
  std::vector<CMatrix> factors;  ///< one per component, component order
  double time = 0.0;
  double factorization_error = 0.0;  ///< ||X(T) - prod factors||_F
  double commutation_residual = 0.0; ///< max ||F_a F_b - F_b F_a||_F
  double unitarity_residual = 0.0;   ///< max over total and factors of ||U^H U - 1||_F
};

/// Exact per-segment exponentials, applied on the left in time order, for the
/// full generator and for every component piece.
PropagationResult propagate(const ComponentDecomposition& decomp, const ControlSystem& system,
                            const ControlSchedule& schedule, const Tolerances& tol = {});

/// Product of the factors with radical lines first, then simple components.
CMatrix ordered_product(const ComponentDecomposition& decomp, const std::vector<CMatrix>& factors);

}  // namespace liedec
