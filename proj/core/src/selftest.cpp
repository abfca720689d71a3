#include "czdc/selftest.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "czdc/czset.hpp"
#include "czdc/dc.hpp"
#include "czdc/harness.hpp"
#include "czdc/interval.hpp"
#include "czdc/lp.hpp"
#include "czdc/models.hpp"
#include "czdc/rng.hpp"

namespace czdc {

namespace {

Eigen::MatrixXd random_matrix(SplitMix64& rng, Eigen::Index rows,
                              Eigen::Index cols, double scale) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.uniform(-scale, scale);
  return m;
}

Eigen::VectorXd random_vector(SplitMix64& rng, Eigen::Index n, double scale) {
  return random_matrix(rng, n, 1, scale);
}

// Random nonempty set: offsets come from a witness point, so the witness
// stays feasible and exactness can be probed through it.
struct SeededSet {
  ConstrainedZonotope set;
  Eigen::VectorXd xi;
  Eigen::VectorXd point() const { return set.G * xi + set.c; }
};

SeededSet random_czon(SplitMix64& rng, Eigen::Index n, Eigen::Index ng,
                      Eigen::Index nh) {
  SeededSet s;
  const Eigen::MatrixXd g = random_matrix(rng, n, ng, 2.0);
  const Eigen::VectorXd c = random_vector(rng, n, 1.0);
  const Eigen::MatrixXd a = random_matrix(rng, nh, ng, 1.0);
  s.xi = random_vector(rng, ng, 1.0);
  s.set = ConstrainedZonotope(g, c, a, a * s.xi);
  return s;
}

bool interval_suite(std::ostream& detail) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const double a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
    const double c = rng.uniform(-3, 3), d = rng.uniform(-3, 3);
    const Interval x(std::min(a, b), std::max(a, b));
    const Interval y(std::min(c, d), std::max(c, d));
    for (int s = 0; s < 8; ++s) {
      const double px = rng.uniform(x.lo, x.hi), py = rng.uniform(y.lo, y.hi);
      const bool ok = (x + y).contains(px + py) && (x - y).contains(px - py) &&
                      (x * y).contains(px * py) && sqr(x).contains(px * px) &&
                      exp(x).contains(std::exp(px)) &&
                      sin(x).contains(std::sin(px)) &&
                      cos(x).contains(std::cos(px));
      if (!ok) {
        detail << "inclusion failed at x=[" << x.lo << "," << x.hi << "]";
        return false;
      }
    }
  }
  return true;
}

bool lp_suite(std::ostream& detail) {
  SplitMix64 rng(22);
  LpSolver solver;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(5));
    LinearProgram lp = LinearProgram::boxed(n, 0);
    lp.objective = random_vector(rng, n, 2.0);
    const LpSolution s = solver.solve(lp);
    if (s.status != LpStatus::kOptimal) {
      detail << "box LP not optimal";
      return false;
    }
    const double expect = -lp.objective.cwiseAbs().sum();
    if (std::abs(s.objective_value - expect) > 1e-9) {
      detail << "box LP value " << s.objective_value << " expected " << expect;
      return false;
    }
  }

  LinearProgram lp = LinearProgram::boxed(2, 1);
  lp.eq_lhs << 1, 1;
  lp.eq_rhs << 1;
  lp.objective << 1, 0;
  const LpSolution lo = solver.solve(lp);
  lp.maximize = true;
  const LpSolution hi = solver.solve(lp);
  if (lo.status != LpStatus::kOptimal || std::abs(lo.objective_value) > 1e-9 ||
      hi.status != LpStatus::kOptimal ||
      std::abs(hi.objective_value - 1.0) > 1e-9) {
    detail << "pinned eq LP wrong";
    return false;
  }
  lp.eq_rhs << 5;  // out of reach
  if (solver.solve(lp).status != LpStatus::kInfeasible) {
    detail << "missed infeasibility";
    return false;
  }
  return true;
}

bool set_ops_suite(std::ostream& detail) {
  SplitMix64 rng(33);
  LpSolver solver;
  for (int trial = 0; trial < 40; ++trial) {
    const SeededSet x = random_czon(rng, 2, 4, 1);
    const SeededSet y = random_czon(rng, 2, 3, 1);
    const Eigen::VectorXd px = x.point(), py = y.point();

    if (!contains_point(minkowski_sum(x.set, y.set), px + py, solver, 1e-7)) {
      detail << "minkowski membership";
      return false;
    }
    const Eigen::MatrixXd l = random_matrix(rng, 2, 2, 1.5);
    const Eigen::VectorXd m = random_vector(rng, 2, 1.0);
    if (!contains_point(affine_map(l, x.set, m), l * px + m, solver, 1e-7)) {
      detail << "affine membership";
      return false;
    }
    Eigen::VectorXd pc(4);
    pc << px, py;
    if (!contains_point(cartesian_product(x.set, y.set), pc, solver, 1e-7)) {
      detail << "cartesian membership";
      return false;
    }
    const Eigen::MatrixXd mm = random_matrix(rng, 2, 2, 1.0);
    const ConstrainedZonotope w(0.05 * Eigen::MatrixXd::Identity(2, 2), mm * px);
    if (!contains_point(generalized_intersection(x.set, w, mm), px, solver, 1e-7)) {
      detail << "intersection membership";
      return false;
    }
  }
  return true;
}

bool hull_reduce_suite(std::ostream& detail) {
  SplitMix64 rng(44);
  LpSolver solver;
  for (int trial = 0; trial < 25; ++trial) {
    const SeededSet x = random_czon(rng, 2, 6, 2);
    if (is_empty(x.set, solver)) continue;
    const IntervalVector hull = interval_hull(x.set, solver);
    for (int s = 0; s < 20; ++s) {
      const Eigen::VectorXd p = sample_point(x.set, rng, solver, 1);
      if (!hull.contains(p, 1e-7)) {
        detail << "hull missed a member";
        return false;
      }
      if (!contains_point(reduce(x.set, {1, 4}, solver), p, solver, 1e-6)) {
        detail << "reduce lost a member";
        return false;
      }
      const PolytopeEnclosure pe =
          enclose(x.set, EnclosureKind::kParallelotope, solver);
      if (!contains_point(ConstrainedZonotope::from_zonotope(pe.zon), p, solver,
                          1e-6)) {
        detail << "parallelotope enclosure lost a member";
        return false;
      }
    }
  }
  return true;
}

bool dc_suite(std::ostream& detail) {
  DifferentiableMap rho;
  rho.dim_in = 2;
  rho.dim_out = 2;
  rho.value = [](const Eigen::VectorXd& z) {
    Eigen::VectorXd v(2);
    v << z(0) * z(0), z(0) * z(1);
    return v;
  };
  rho.jacobian = [](const Eigen::VectorXd& z) {
    Eigen::MatrixXd j(2, 2);
    j << 2 * z(0), 0, z(1), z(0);
    return j;
  };
  rho.component_hessian = [](Eigen::Index i, const IntervalVector&) {
    IntervalMatrix h(2, 2);
    if (i == 0)
      h.set(0, 0, Interval::point(2.0));
    else {
      h.set(0, 1, Interval::point(1.0));
      h.set(1, 0, Interval::point(1.0));
    }
    return h;
  };

  const Eigen::VectorXd lo = Eigen::VectorXd::Constant(2, -2.0);
  const IntervalVector box(lo, -lo);
  const DcDecomposition dc = convexify(rho, box);
  const Zonotope p = box_to_zonotope(box);
  const AffineApprox approx = linearize_at(rho, p.c);
  const Zonotope r = linearization_enclosure(dc, approx, p);

  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      Eigen::VectorXd z(2);
      z << -2.0 + 0.2 * i, -2.0 + 0.2 * j;
      const Eigen::VectorXd err = rho.value(z) - approx(z);
      for (Eigen::Index comp = 0; comp < 2; ++comp) {
        const double elo = r.c(comp) - r.G(comp, comp);
        const double ehi = r.c(comp) + r.G(comp, comp);
        if (err(comp) < elo - 1e-9 || err(comp) > ehi + 1e-9) {
          detail << "remainder bound missed component " << comp;
          return false;
        }
      }
    }
  }
  return true;
}

bool closed_loop_suite(std::ostream& detail) {
  RunConfig cfg;
  cfg.steps = 8;
  cfg.runs = 3;
  cfg.seed = 7;
  cfg.targets = {3, 8};
  RunMetrics met = run_monte_carlo(build_quad2d(), cfg);
  if (met.containment_violations != 0 || met.emptiness_events != 0) {
    detail << "quad2d violations=" << met.containment_violations
           << " emptiness=" << met.emptiness_events;
    return false;
  }
  cfg.steps = 5;
  cfg.runs = 1;
  cfg.targets = {10, 30};
  met = run_monte_carlo(build_attitude(), cfg);
  if (met.containment_violations != 0 || met.emptiness_events != 0) {
    detail << "attitude violations=" << met.containment_violations
           << " emptiness=" << met.emptiness_events;
    return false;
  }
  return true;
}

}  // namespace

SelftestResult run_selftest(std::ostream& out) {
  const std::vector<std::pair<std::string, std::function<bool(std::ostream&)>>>
      suites = {
          {"interval inclusion", interval_suite},
          {"lp solver", lp_suite},
          {"set operation exactness", set_ops_suite},
          {"hull and reduction containment", hull_reduce_suite},
          {"linearization remainder", dc_suite},
          {"closed loop containment", closed_loop_suite},
      };

  SelftestResult res;
  for (const auto& [name, fn] : suites) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    if (ok) {
      ++res.passed;
      out << "ok " << name << '\n';
    } else {
      ++res.failed;
      out << "FAIL " << name << " (" << detail.str() << ")\n";
    }
  }
  return res;
}

}  // namespace czdc
