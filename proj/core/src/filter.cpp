#include "czdc/filter.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>
#include <vector>

namespace czdc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Eigen::VectorXd set_center(const ConstrainedZonotope& x, LpSolver& solver) {
  if (x.num_constraints() == 0) return x.c;
  return interval_hull(x, solver).mid();
}

// Zero generator columns (for example from exactly known inputs) only
// duplicate vertices; dropping them is exact and shrinks the enumeration.
Zonotope prune_zero_generators(const Zonotope& z) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < z.num_generators(); ++j)
    if (z.G.col(j).lpNorm<Eigen::Infinity>() != 0.0) keep.push_back(j);
  if (static_cast<Eigen::Index>(keep.size()) == z.num_generators()) return z;
  Eigen::MatrixXd g(z.dim(), static_cast<Eigen::Index>(keep.size()));
  for (size_t k = 0; k < keep.size(); ++k)
    g.col(static_cast<Eigen::Index>(k)) = z.G.col(keep[k]);
  return Zonotope(g, z.c);
}

struct StageLinearization {
  AffineApprox approx;             // map linearized at the enclosure center
  ConstrainedZonotope remainder;   // R, as a set for Minkowski sums
};

/**
 * The common enclosure + split + remainder pipeline of every stage. The
 * varying block is enclosed by the configured polytope kind; fixed_tail
 * holds exactly known trailing coordinates (inputs, noise centers) that
 * complete the map's input space. Convexified stages always use the box
 * enclosure, whose hull also scopes the curvature bounds.
 *
 */
StageLinearization linearize_stage(const DifferentiableMap& map,
                                   const std::optional<DcDecomposition>& dc_opt,
                                   const ConstrainedZonotope& varying,
                                   const Eigen::VectorXd& fixed_tail,
                                   const FilterConfig& cfg, LpSolver& solver) {
  if (varying.dim() + fixed_tail.size() != map.dim_in)
    throw std::invalid_argument("linearize_stage: block dimensions differ");

  const EnclosureKind kind =
      dc_opt ? cfg.enclosure_kind : EnclosureKind::kBox;
  const PolytopeEnclosure pe = enclose(varying, kind, solver);

  Eigen::MatrixXd g =
      Eigen::MatrixXd::Zero(map.dim_in, pe.zon.num_generators());
  g.topRows(varying.dim()) = pe.zon.G;
  Eigen::VectorXd c(map.dim_in);
  c << pe.zon.c, fixed_tail;
  const Zonotope p_aug = prune_zero_generators(Zonotope(g, c));

  const DcDecomposition dc =
      dc_opt ? *dc_opt : convexify(map, zonotope_box(Zonotope(g, c)));

  StageLinearization out;
  out.approx = linearize_at(map, c);
  out.remainder = ConstrainedZonotope::from_zonotope(
      linearization_enclosure(dc, out.approx, p_aug, cfg.vertex_cap));
  return out;
}

Eigen::VectorXd noise_center(const ConstrainedZonotope& noise,
                             LpSolver& solver) {
  return set_center(noise, solver);
}

}  // namespace

std::string to_string(FilterStage s) {
  switch (s) {
    case FilterStage::kForecast:
      return "forecast";
    case FilterStage::kAssimilation:
      return "assimilation";
    case FilterStage::kAdmissibility:
      return "admissibility";
    case FilterStage::kConsistency:
      return "consistency";
    default:
      return "reduction";
  }
}

ConstrainedZonotope forecast(const ConstrainedZonotope& x_prev,
                             const Eigen::VectorXd& u, const SystemModel& model,
                             const FilterConfig& cfg, LpSolver& solver) {
  if (u.size() != model.p)
    throw std::invalid_argument("forecast: input dimension differs");
  const Eigen::Index n = model.n, p = model.p, q = model.q;
  const Eigen::VectorXd w_bar = noise_center(model.W, solver);

  StageLinearization lin;
  if (model.f_noise_affine) {
    Eigen::VectorXd tail(p + q);
    tail << u, w_bar;
    lin = linearize_stage(model.f, model.f_dc, x_prev, tail, cfg, solver);
  } else {
    ConstrainedZonotope aug = cartesian_product(
        cartesian_product(x_prev, ConstrainedZonotope::point(u)), model.W);
    lin = linearize_stage(model.f, model.f_dc, aug, Eigen::VectorXd(0), cfg,
                          solver);
  }

  const Eigen::MatrixXd fx = lin.approx.slope.leftCols(n);
  const Eigen::MatrixXd fw = lin.approx.slope.rightCols(q);
  const Eigen::VectorXd x_bar = lin.approx.anchor.head(n);
  const Eigen::VectorXd shift = lin.approx.base - fx * x_bar - fw * w_bar;

  return minkowski_sum(
      minkowski_sum(affine_map(fx, x_prev, shift), affine_map(fw, model.W)),
      lin.remainder);
}

ConstrainedZonotope data_assimilate(const ConstrainedZonotope& x_pred,
                                    const Eigen::VectorXd& y,
                                    const SystemModel& model,
                                    const FilterConfig& cfg, LpSolver& solver) {
  if (y.size() != model.m)
    throw std::invalid_argument("data_assimilate: output dimension differs");
  const Eigen::Index n = model.n, r = model.r, m = model.m;
  const Eigen::VectorXd v_bar = noise_center(model.V, solver);

  StageLinearization lin;
  if (model.h_noise_affine) {
    lin = linearize_stage(model.h, model.h_dc, x_pred, v_bar, cfg, solver);
  } else {
    ConstrainedZonotope aug = cartesian_product(x_pred, model.V);
    lin = linearize_stage(model.h, model.h_dc, aug, Eigen::VectorXd(0), cfg,
                          solver);
  }

  const Eigen::MatrixXd hx = lin.approx.slope.leftCols(n);
  const Eigen::MatrixXd hv = lin.approx.slope.rightCols(r);
  const Eigen::VectorXd x_bar = lin.approx.anchor.head(n);

  // States able to explain y: Hx x in y - h(z_bar) + H z_bar - Hv V - R.
  const Eigen::VectorXd offset =
      y - lin.approx.base + hx * x_bar + hv * v_bar;
  ConstrainedZonotope consistent = minkowski_sum(
      minkowski_sum(ConstrainedZonotope::point(offset), affine_map(-hv, model.V)),
      affine_map(-Eigen::MatrixXd::Identity(m, m), lin.remainder));
  return generalized_intersection(x_pred, consistent, hx);
}

ConstrainedZonotope apply_admissibility(const ConstrainedZonotope& x,
                                        const ConstrainedZonotope& xf) {
  return generalized_intersection(
      x, xf, Eigen::MatrixXd::Identity(x.dim(), x.dim()));
}

ConstrainedZonotope apply_consistency(const ConstrainedZonotope& x,
                                      const SystemModel& model,
                                      const FilterConfig& cfg, LpSolver& solver) {
  if (!model.g)
    throw std::invalid_argument("apply_consistency: model has no invariant");
  const Eigen::Index mc = model.g->dim_out;

  const StageLinearization lin = linearize_stage(
      *model.g, model.g_dc, x, Eigen::VectorXd(0), cfg, solver);
  const Eigen::MatrixXd hg = lin.approx.slope;
  const Eigen::VectorXd x_bar = lin.approx.anchor;

  // States with g(x) = 0 under the linearization: Hg x in
  // -g(x_bar) + Hg x_bar - R.
  const Eigen::VectorXd offset = -lin.approx.base + hg * x_bar;
  ConstrainedZonotope zero_set = minkowski_sum(
      ConstrainedZonotope::point(offset),
      affine_map(-Eigen::MatrixXd::Identity(mc, mc), lin.remainder));
  return generalized_intersection(x, zero_set, hg);
}

namespace {

// Assimilation through reduction, shared by czdc_step and initial_update.
// Each intersection that comes back empty is dropped: the pre-intersection
// set still contains every state the stage could not exclude.
void measurement_phase(FilterState& st, const Eigen::VectorXd& y,
                       const SystemModel& model, const FilterConfig& cfg,
                       LpSolver& solver) {
  auto guarded = [&](FilterStage stage, auto&& produce) {
    const auto t0 = Clock::now();
    try {
      ConstrainedZonotope next = produce();
      if (is_empty(next, solver)) {
        if (!st.diag.empty_stage) st.diag.empty_stage = stage;
      } else {
        st.set = std::move(next);
      }
    } catch (const EmptySetError&) {
      if (!st.diag.empty_stage) st.diag.empty_stage = stage;
    }
    st.diag.stage_ms[static_cast<size_t>(stage)] += ms_since(t0);
  };

  guarded(FilterStage::kAssimilation,
          [&] { return data_assimilate(st.set, y, model, cfg, solver); });
  if (model.XF) {
    guarded(FilterStage::kAdmissibility,
            [&] { return apply_admissibility(st.set, *model.XF); });
  }
  if (model.g && cfg.apply_consistency) {
    guarded(FilterStage::kConsistency,
            [&] { return apply_consistency(st.set, model, cfg, solver); });
  }

  guarded(FilterStage::kReduction,
          [&] { return reduce(st.set, cfg.targets, solver); });

  st.diag.num_generators = st.set.num_generators();
  st.diag.num_constraints = st.set.num_constraints();
}

}  // namespace

FilterState czdc_step(const FilterState& prev, const Eigen::VectorXd& u,
                      const Eigen::VectorXd& y, const SystemModel& model,
                      const FilterConfig& cfg, LpSolver& solver) {
  const auto start = Clock::now();
  FilterState st;
  st.k = prev.k + 1;

  const auto t0 = Clock::now();
  st.set = forecast(prev.set, u, model, cfg, solver);
  st.diag.stage_ms[static_cast<size_t>(FilterStage::kForecast)] = ms_since(t0);

  measurement_phase(st, y, model, cfg, solver);
  st.diag.step_ms = ms_since(start);
  return st;
}

FilterState initial_update(const Eigen::VectorXd& y0, const SystemModel& model,
                           const FilterConfig& cfg, LpSolver& solver) {
  const auto start = Clock::now();
  FilterState st;
  st.k = 0;
  st.set = model.X0;
  measurement_phase(st, y0, model, cfg, solver);
  st.diag.step_ms = ms_since(start);
  return st;
}

}  // namespace czdc
