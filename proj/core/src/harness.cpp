#include "czdc/harness.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "czdc/czset_io.hpp"

namespace czdc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double hull_area(const IntervalVector& hull) {
  double a = 1.0;
  for (Eigen::Index i = 0; i < hull.size(); ++i) a *= hull[i].diam();
  return a;
}

void write_g17(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

Eigen::VectorXd sample_from_set(const ConstrainedZonotope& set,
                                SplitMix64& rng, LpSolver& solver) {
  const IntervalVector hull = interval_hull(set, solver);
  Eigen::VectorXd p(set.dim());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (Eigen::Index i = 0; i < p.size(); ++i)
      p(i) = rng.uniform(hull[i].lo, hull[i].hi);
    if (contains_point(set, p, solver)) return p;
  }
  throw std::runtime_error("sample_from_set: rejection sampling failed");
}

Trajectory simulate_truth(const SystemModel& model, SplitMix64& rng, int steps,
                          LpSolver& solver) {
  if (steps < 0) throw std::invalid_argument("simulate_truth: negative steps");
  Trajectory tr;
  tr.x.reserve(steps + 1);
  tr.y.reserve(steps + 1);
  tr.v.reserve(steps + 1);
  tr.u.reserve(steps);
  tr.w.reserve(steps);

  tr.x.push_back(model.x0_true ? *model.x0_true
                               : sample_from_set(model.X0, rng, solver));

  for (int k = 0; k <= steps; ++k) {
    tr.v.push_back(sample_from_set(model.V, rng, solver));
    Eigen::VectorXd zy(model.n + model.r);
    zy << tr.x.back(), tr.v.back();
    tr.y.push_back(model.h.value(zy));

    if (k == steps) break;

    tr.w.push_back(sample_from_set(model.W, rng, solver));
    Eigen::VectorXd u = model.true_input ? model.true_input(k)
                                         : Eigen::VectorXd::Zero(model.p);
    if (model.input_measured_with_noise) u += tr.w.back();
    tr.u.push_back(u);

    Eigen::VectorXd zf(model.n + model.p + model.q);
    zf << tr.x.back(), tr.u.back(), tr.w.back();
    tr.x.push_back(model.f.value(zf));
  }
  return tr;
}

void write_csv_header(std::ostream& out, Eigen::Index n) {
  out << "run,k,stage_time_ms,area,contained";
  for (Eigen::Index i = 0; i < n; ++i)
    out << ",lo_" << i << ",hi_" << i;
  out << '\n';
}

void write_csv_row(std::ostream& out, int run, int k, double ms, double area,
                   bool contained, const IntervalVector& hull) {
  out << run << ',' << k << ',';
  write_g17(out, ms);
  out << ',';
  write_g17(out, area);
  out << ',' << (contained ? 1 : 0);
  for (Eigen::Index i = 0; i < hull.size(); ++i) {
    out << ',';
    write_g17(out, hull[i].lo);
    out << ',';
    write_g17(out, hull[i].hi);
  }
  out << '\n';
}

RunMetrics run_monte_carlo(const SystemModel& model, const RunConfig& cfg) {
  if (cfg.steps < 1 || cfg.runs < 1)
    throw std::invalid_argument("run_monte_carlo: needs steps >= 1, runs >= 1");

  LpSolver solver;
  FilterConfig fcfg;
  fcfg.enclosure_kind = cfg.enclosure;
  fcfg.targets = cfg.targets;
  fcfg.apply_consistency = cfg.consistency;

  RunMetrics met;
  met.steps = cfg.steps;
  met.runs = cfg.runs;
  met.mean_area_per_step.assign(static_cast<size_t>(cfg.steps) + 1, 0.0);

  std::ofstream csv, sets;
  if (!cfg.csv_path.empty()) {
    csv.open(cfg.csv_path);
    if (!csv) throw std::runtime_error("cannot open " + cfg.csv_path);
    write_csv_header(csv, model.n);
  }
  if (!cfg.sets_path.empty()) {
    sets.open(cfg.sets_path);
    if (!sets) throw std::runtime_error("cannot open " + cfg.sets_path);
  }

  double ms_sum = 0.0, area_sum = 0.0;
  const double contain_tol = 1e-7;

  for (int j = 0; j < cfg.runs; ++j) {
    SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(j)));
    const Trajectory tr = simulate_truth(model, rng, cfg.steps, solver);

    FilterState st;
    for (int k = 0; k <= cfg.steps; ++k) {
      const auto t0 = Clock::now();
      st = (k == 0) ? initial_update(tr.y[0], model, fcfg, solver)
                    : czdc_step(st, tr.u[k - 1], tr.y[k], model, fcfg, solver);
      const double ms = ms_since(t0);

      const IntervalVector hull = interval_hull(st.set, solver);
      const double area = hull_area(hull);
      const bool contained =
          contains_point(st.set, tr.x[static_cast<size_t>(k)], solver, contain_tol);

      if (!contained) ++met.containment_violations;
      if (st.diag.empty_stage) ++met.emptiness_events;
      met.mean_area_per_step[static_cast<size_t>(k)] += area;
      if (k >= 1) {
        ms_sum += ms;
        area_sum += area;
      }
      if (csv.is_open()) write_csv_row(csv, j, k, ms, area, contained, hull);
      if (sets.is_open()) write_cz(sets, st.set);
    }
  }

  const double cells = static_cast<double>(cfg.runs) * cfg.steps;
  met.mean_step_ms = ms_sum / cells;
  met.mean_area = area_sum / cells;
  for (double& a : met.mean_area_per_step) a /= cfg.runs;
  return met;
}

}  // namespace czdc
