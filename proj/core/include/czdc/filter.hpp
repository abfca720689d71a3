#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <string>

#include "czdc/czset.hpp"
#include "czdc/dc.hpp"
#include "czdc/lp.hpp"

namespace czdc {

/**
 * @brief Discrete-time system x+ = f(x, u, w), y = h(x, v) with
 * unknown-but-bounded noise, optional state constraints g(x) = 0, and an
 * optional admissible region XF.
 *
 * Explicit convex splits (f_dc, h_dc, g_dc) are used when present;
 * otherwise the filter convexifies the map per step from its interval
 * Hessian. A noise-affine flag lets a stage enclose only the state block
 * and route the noise exactly through the Jacobian columns.
 */
struct SystemModel {
  std::string name;
  Eigen::Index n{0};  ///< state dimension
  Eigen::Index p{0};  ///< input dimension
  Eigen::Index q{0};  ///< process noise dimension
  Eigen::Index r{0};  ///< measurement noise dimension
  Eigen::Index m{0};  ///< output dimension

  DifferentiableMap f;  ///< (x, u, w) -> next state
  DifferentiableMap h;  ///< (x, v) -> output
  std::optional<DifferentiableMap> g;  ///< state invariant, g(x) = 0

  std::optional<DcDecomposition> f_dc;
  std::optional<DcDecomposition> h_dc;
  std::optional<DcDecomposition> g_dc;
  bool f_noise_affine{false};
  bool h_noise_affine{false};

  ConstrainedZonotope W;   ///< process noise bound
  ConstrainedZonotope V;   ///< measurement noise bound
  ConstrainedZonotope X0;  ///< initial state bound
  std::optional<ConstrainedZonotope> XF;  ///< admissible states

  /// Deterministic input sequence for the truth harness; unused when p = 0.
  std::function<Eigen::VectorXd(int)> true_input;
  /// True when the measured input is the true input plus process noise.
  bool input_measured_with_noise{false};
  /// Fixed true initial state for the truth harness; sampled from X0 when
  /// absent. Keeps benchmark trajectories inside the model's stable regime.
  std::optional<Eigen::VectorXd> x0_true;

  /// Operating boxes in the stage input spaces, used by diagnostics/tests.
  IntervalVector f_domain;  ///< over (x, u, w)
  IntervalVector h_domain;  ///< over (x, v)
};

struct FilterConfig {
  EnclosureKind enclosure_kind{EnclosureKind::kParallelotope};
  ReductionTargets targets{0, 0};
  bool apply_consistency{true};
  int vertex_cap{16};
};

enum class FilterStage {
  kForecast,
  kAssimilation,
  kAdmissibility,
  kConsistency,
  kReduction
};

std::string to_string(FilterStage s);

struct StepDiagnostics {
  std::array<double, 5> stage_ms{};  ///< indexed by FilterStage
  double step_ms{0.0};
  Eigen::Index num_generators{0};
  Eigen::Index num_constraints{0};
  /// First stage whose intersection came back empty, if any. The filter
  /// then keeps the pre-intersection set, which still contains the truth.
  std::optional<FilterStage> empty_stage;
};

struct FilterState {
  ConstrainedZonotope set;
  int k{0};
  StepDiagnostics diag;
};

/// @brief Time update: propagates the estimate through f and adds the
/// process noise and the linearization remainder.
ConstrainedZonotope forecast(const ConstrainedZonotope& x_prev,
                             const Eigen::VectorXd& u, const SystemModel& model,
                             const FilterConfig& cfg, LpSolver& solver);

/// @brief Measurement update: intersects the forecast with the set of
/// states that can explain y under the h linearization.
ConstrainedZonotope data_assimilate(const ConstrainedZonotope& x_pred,
                                    const Eigen::VectorXd& y,
                                    const SystemModel& model,
                                    const FilterConfig& cfg, LpSolver& solver);

/// @brief Intersection with the admissible region XF (identity map).
ConstrainedZonotope apply_admissibility(const ConstrainedZonotope& x,
                                        const ConstrainedZonotope& xf);

/// @brief Intersection with the linearized invariant set g(x) = 0.
ConstrainedZonotope apply_consistency(const ConstrainedZonotope& x,
                                      const SystemModel& model,
                                      const FilterConfig& cfg, LpSolver& solver);

/**
 * @brief One full filter cycle: forecast, assimilation, admissibility,
 * consistency, order reduction. Empty intersections are skipped with a
 * diagnostic flag rather than propagated.
 */
FilterState czdc_step(const FilterState& prev, const Eigen::VectorXd& u,
                      const Eigen::VectorXd& y, const SystemModel& model,
                      const FilterConfig& cfg, LpSolver& solver);

/**
 * @brief Filter state at k = 0: the initial bound updated with the first
 * measurement (no forecast), then reduced.
 */
FilterState initial_update(const Eigen::VectorXd& y0, const SystemModel& model,
                           const FilterConfig& cfg, LpSolver& solver);

}  // namespace czdc
