#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "czdc/filter.hpp"
#include "czdc/models.hpp"
#include "czdc/rng.hpp"

namespace czdc {

struct RunConfig {
  int steps{0};
  int runs{0};
  std::uint64_t seed{1};
  EnclosureKind enclosure{EnclosureKind::kParallelotope};
  ReductionTargets targets{0, 0};
  bool consistency{true};
  std::string csv_path;   ///< per-step CSV log; empty disables it
  std::string sets_path;  ///< text exchange dump of every estimate; empty disables it
};

/**
 * @brief Monte Carlo aggregates. mean_area averages the hull box volume
 * over runs and steps k >= 1; mean_step_ms averages the filter step wall
 * time over the same range (truth simulation and I/O excluded). Containment
 * is checked at every k including the initial update.
 */
struct RunMetrics {
  int steps{0};
  int runs{0};
  double mean_step_ms{0.0};
  double mean_area{0.0};
  long containment_violations{0};
  long emptiness_events{0};
  std::vector<double> mean_area_per_step;  ///< indexed by k, 0..steps
};

struct Trajectory {
  std::vector<Eigen::VectorXd> x;  ///< 0..steps
  std::vector<Eigen::VectorXd> u;  ///< 0..steps-1, as seen by the filter
  std::vector<Eigen::VectorXd> w;  ///< 0..steps-1
  std::vector<Eigen::VectorXd> v;  ///< 0..steps
  std::vector<Eigen::VectorXd> y;  ///< 0..steps
};

/**
 * @brief Rejection sample: uniform over the interval hull, accepted on
 * membership.
 */
Eigen::VectorXd sample_from_set(const ConstrainedZonotope& set,
                                SplitMix64& rng, LpSolver& solver);

/**
 * @brief Draws one closed-loop truth trajectory: x0 from the model's pinned
 * start (or sampled from X0), noise uniform in W and V, inputs from the
 * model's schedule, corrupted by w when the model measures them.
 */
Trajectory simulate_truth(const SystemModel& model, SplitMix64& rng, int steps,
                          LpSolver& solver);

/**
 * @brief Full benchmark: per-run trajectories, the filter loop, CSV/sets
 * logging, and aggregate metrics. Runs are seeded from cfg.seed and the run
 * index, so results are reproducible except for the timing column.
 */
RunMetrics run_monte_carlo(const SystemModel& model, const RunConfig& cfg);

/// @brief CSV schema: run,k,stage_time_ms,area,contained,lo_i,hi_i per axis.
void write_csv_header(std::ostream& out, Eigen::Index n);
void write_csv_row(std::ostream& out, int run, int k, double ms, double area,
                   bool contained, const IntervalVector& hull);

}  // namespace czdc
