#include "czdc/czset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace czdc {

namespace {

double max_abs(const Eigen::MatrixXd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

[[noreturn]] void throw_solver_error(const char* where, LpStatus status) {
  throw std::runtime_error(std::string(where) + ": LP solver returned " +
                           to_string(status));
}

}  // namespace

Zonotope::Zonotope(Eigen::MatrixXd generators, Eigen::VectorXd center)
    : G(std::move(generators)), c(std::move(center)) {
  if (G.rows() != c.size())
    throw std::invalid_argument("zonotope generator/center dimensions differ");
}

ConstrainedZonotope::ConstrainedZonotope(Eigen::MatrixXd generators,
                                         Eigen::VectorXd center)
    : G(std::move(generators)),
      c(std::move(center)),
      A(0, G.cols()),
      b(0) {
  if (G.rows() != c.size())
    throw std::invalid_argument("generator/center dimensions differ");
}

ConstrainedZonotope::ConstrainedZonotope(Eigen::MatrixXd generators,
                                         Eigen::VectorXd center,
                                         Eigen::MatrixXd constraints,
                                         Eigen::VectorXd offsets)
    : G(std::move(generators)),
      c(std::move(center)),
      A(std::move(constraints)),
      b(std::move(offsets)) {
  if (G.rows() != c.size())
    throw std::invalid_argument("generator/center dimensions differ");
  if (A.cols() != G.cols())
    throw std::invalid_argument("constraint/generator column counts differ");
  if (A.rows() != b.size())
    throw std::invalid_argument("constraint row/offset counts differ");
}

ConstrainedZonotope ConstrainedZonotope::point(const Eigen::VectorXd& x) {
  return ConstrainedZonotope(Eigen::MatrixXd(x.size(), 0), x);
}

ConstrainedZonotope ConstrainedZonotope::from_zonotope(const Zonotope& z) {
  return ConstrainedZonotope(z.G, z.c);
}

ConstrainedZonotope affine_map(const Eigen::MatrixXd& L,
                               const ConstrainedZonotope& x,
                               const Eigen::VectorXd& m) {
  if (L.cols() != x.dim())
    throw std::invalid_argument("affine_map: matrix/set dimensions differ");
  if (m.size() != L.rows())
    throw std::invalid_argument("affine_map: offset dimension differs");
  return ConstrainedZonotope(L * x.G, L * x.c + m, x.A, x.b);
}

ConstrainedZonotope affine_map(const Eigen::MatrixXd& L,
                               const ConstrainedZonotope& x) {
  return affine_map(L, x, Eigen::VectorXd::Zero(L.rows()));
}

ConstrainedZonotope minkowski_sum(const ConstrainedZonotope& x,
                                  const ConstrainedZonotope& y) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("minkowski_sum: dimensions differ");
  const Eigen::Index nx = x.num_generators(), ny = y.num_generators();
  const Eigen::Index hx = x.num_constraints(), hy = y.num_constraints();

  Eigen::MatrixXd g(x.dim(), nx + ny);
  g << x.G, y.G;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(hx + hy, nx + ny);
  a.topLeftCorner(hx, nx) = x.A;
  a.bottomRightCorner(hy, ny) = y.A;
  Eigen::VectorXd b(hx + hy);
  b << x.b, y.b;
  return ConstrainedZonotope(g, x.c + y.c, a, b);
}

ConstrainedZonotope generalized_intersection(const ConstrainedZonotope& x,
                                             const ConstrainedZonotope& w,
                                             const Eigen::MatrixXd& m) {
  if (m.cols() != x.dim() || m.rows() != w.dim())
    throw std::invalid_argument("generalized_intersection: map shape differs");
  const Eigen::Index nx = x.num_generators(), nw = w.num_generators();
  const Eigen::Index hx = x.num_constraints(), hw = w.num_constraints();

  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(x.dim(), nx + nw);
  g.leftCols(nx) = x.G;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(hx + hw + w.dim(), nx + nw);
  a.topLeftCorner(hx, nx) = x.A;
  a.block(hx, nx, hw, nw) = w.A;
  a.bottomLeftCorner(w.dim(), nx) = m * x.G;
  a.bottomRightCorner(w.dim(), nw) = -w.G;
  Eigen::VectorXd b(hx + hw + w.dim());
  b << x.b, w.b, w.c - m * x.c;
  return ConstrainedZonotope(g, x.c, a, b);
}

ConstrainedZonotope cartesian_product(const ConstrainedZonotope& x,
                                      const ConstrainedZonotope& w) {
  const Eigen::Index nx = x.num_generators(), nw = w.num_generators();
  const Eigen::Index hx = x.num_constraints(), hw = w.num_constraints();

  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(x.dim() + w.dim(), nx + nw);
  g.topLeftCorner(x.dim(), nx) = x.G;
  g.bottomRightCorner(w.dim(), nw) = w.G;
  Eigen::VectorXd c(x.dim() + w.dim());
  c << x.c, w.c;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(hx + hw, nx + nw);
  a.topLeftCorner(hx, nx) = x.A;
  a.bottomRightCorner(hw, nw) = w.A;
  Eigen::VectorXd b(hx + hw);
  b << x.b, w.b;
  return ConstrainedZonotope(g, c, a, b);
}

namespace {

// Point sets (ng = 0) short-circuit every LP path below.
bool degenerate_empty(const ConstrainedZonotope& x, double tol = 1e-12) {
  return x.num_generators() == 0 && x.num_constraints() > 0 &&
         x.b.lpNorm<Eigen::Infinity>() > tol;
}

// An infeasibility verdict within noise of the solver tolerance is a stall,
// not an emptiness certificate; a false "empty" is unrecoverable downstream
// while treating the set as nonempty only costs tightness.
bool certified_infeasible(const LpSolution& s, const Eigen::VectorXd& rhs) {
  return s.status == LpStatus::kInfeasible &&
         s.infeasibility > 1e-6 * (1.0 + rhs.lpNorm<1>());
}

}  // namespace

IntervalVector interval_hull(const ConstrainedZonotope& x, LpSolver& solver) {
  const Eigen::Index n = x.dim();
  if (degenerate_empty(x)) throw EmptySetError("interval_hull: empty set");
  if (x.num_generators() == 0) return IntervalVector(x.c, x.c);

  if (x.num_constraints() == 0) {
    const Eigen::VectorXd r = x.G.cwiseAbs().rowwise().sum();
    return IntervalVector(x.c - r, x.c + r);
  }

  Eigen::VectorXd lo(n), hi(n);
  LinearProgram lp = LinearProgram::boxed(x.num_generators(), x.num_constraints());
  lp.eq_lhs = x.A;
  lp.eq_rhs = x.b;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double reach = x.G.row(i).cwiseAbs().sum();
    lp.objective = x.G.row(i).transpose();
    lp.maximize = false;
    const LpSolution smin = solver.solve(lp);
    if (certified_infeasible(smin, x.b))
      throw EmptySetError("interval_hull: empty set");
    lp.maximize = true;
    const LpSolution smax = solver.solve(lp);
    if (certified_infeasible(smax, x.b))
      throw EmptySetError("interval_hull: empty set");
    // A stalled solve degrades to the unconstrained extent, which stays an
    // enclosure of the exact bound.
    lo(i) = x.c(i) + (smin.status == LpStatus::kOptimal ? smin.objective_value
                                                        : -reach);
    hi(i) = x.c(i) + (smax.status == LpStatus::kOptimal ? smax.objective_value
                                                        : reach);
    if (lo(i) > hi(i)) lo(i) = hi(i) = 0.5 * (lo(i) + hi(i));
  }
  return IntervalVector(lo, hi);
}

Zonotope box_to_zonotope(const IntervalVector& box) {
  return Zonotope(box.rad().asDiagonal(), box.mid());
}

double support(const ConstrainedZonotope& x, const Eigen::VectorXd& dir,
               LpSolver& solver, Eigen::VectorXd* support_point) {
  if (dir.size() != x.dim())
    throw std::invalid_argument("support: direction dimension differs");
  if (degenerate_empty(x)) throw EmptySetError("support: empty set");
  if (x.num_generators() == 0) {
    if (support_point) *support_point = x.c;
    return dir.dot(x.c);
  }
  LinearProgram lp = LinearProgram::boxed(x.num_generators(), x.num_constraints());
  lp.eq_lhs = x.A;
  lp.eq_rhs = x.b;
  lp.objective = x.G.transpose() * dir;
  lp.maximize = true;
  LpSolution s = solver.solve(lp);
  if (certified_infeasible(s, x.b)) throw EmptySetError("support: empty set");
  if (s.status != LpStatus::kOptimal) {
    // Stalled solve; the unconstrained support still bounds the set.
    if (support_point) *support_point = x.c;
    return lp.objective.cwiseAbs().sum() + dir.dot(x.c);
  }
  if (support_point) *support_point = x.G * s.point + x.c;
  return s.objective_value + dir.dot(x.c);
}

bool contains_point(const ConstrainedZonotope& x, const Eigen::VectorXd& p,
                    LpSolver& solver, double tol) {
  if (p.size() != x.dim())
    throw std::invalid_argument("contains_point: point dimension differs");
  const Eigen::Index n = x.dim(), ng = x.num_generators();
  const Eigen::Index nh = x.num_constraints();
  if (ng == 0) {
    return (p - x.c).lpNorm<Eigen::Infinity>() <= tol &&
           (nh == 0 || x.b.lpNorm<Eigen::Infinity>() <= tol);
  }

  // Feasibility of A xi = b, G xi + s = p - c with |s| <= tol.
  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(ng + n);
  lp.eq_lhs = Eigen::MatrixXd::Zero(nh + n, ng + n);
  lp.eq_lhs.topLeftCorner(nh, ng) = x.A;
  lp.eq_lhs.bottomLeftCorner(n, ng) = x.G;
  lp.eq_lhs.bottomRightCorner(n, n).setIdentity();
  lp.eq_rhs = Eigen::VectorXd(nh + n);
  lp.eq_rhs << x.b, p - x.c;
  lp.lower = Eigen::VectorXd::Constant(ng + n, -1.0);
  lp.upper = Eigen::VectorXd::Constant(ng + n, 1.0);
  lp.lower.tail(n).setConstant(-tol);
  lp.upper.tail(n).setConstant(tol);

  LpSolution s = solver.solve(lp);
  if (s.status == LpStatus::kOptimal) return true;
  if (s.status == LpStatus::kInfeasible) return false;
  throw_solver_error("contains_point", s.status);
}

bool is_empty(const ConstrainedZonotope& x, LpSolver& solver) {
  if (x.num_constraints() == 0) return false;
  if (x.num_generators() == 0) return degenerate_empty(x);
  LinearProgram lp = LinearProgram::boxed(x.num_generators(), x.num_constraints());
  lp.eq_lhs = x.A;
  lp.eq_rhs = x.b;
  LpSolution s = solver.solve(lp);
  if (s.status == LpStatus::kOptimal) return false;
  if (s.status == LpStatus::kInfeasible) return certified_infeasible(s, x.b);
  throw_solver_error("is_empty", s.status);
}

Eigen::VectorXd sample_point(const ConstrainedZonotope& x, SplitMix64& rng,
                             LpSolver& solver, int k) {
  if (k < 1) throw std::invalid_argument("sample_point: k must be >= 1");
  if (x.num_generators() == 0) {
    if (degenerate_empty(x)) throw EmptySetError("sample_point: empty set");
    return x.c;
  }
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(x.dim());
  Eigen::VectorXd dir(x.dim());
  for (int s = 0; s < k; ++s) {
    double norm = 0.0;
    do {
      for (Eigen::Index i = 0; i < dir.size(); ++i)
        dir(i) = rng.uniform(-1.0, 1.0);
      norm = dir.norm();
    } while (norm < 1e-12);
    Eigen::VectorXd pt;
    support(x, dir, solver, &pt);
    acc += pt;
  }
  return acc / static_cast<double>(k);
}

ConstrainedZonotope rescale(const ConstrainedZonotope& x) {
  const Eigen::Index ng = x.num_generators(), nh = x.num_constraints();
  if (nh == 0 || ng == 0) return x;

  std::vector<Interval> dom(static_cast<size_t>(ng), Interval(-1.0, 1.0));
  for (Eigen::Index i = 0; i < nh; ++i) {
    // Prefix/suffix sums give each "all other terms" total in one sweep.
    std::vector<Interval> prefix(static_cast<size_t>(ng) + 1, Interval::point(0.0));
    std::vector<Interval> suffix(static_cast<size_t>(ng) + 1, Interval::point(0.0));
    for (Eigen::Index j = 0; j < ng; ++j)
      prefix[j + 1] = prefix[j] + x.A(i, j) * dom[static_cast<size_t>(j)];
    for (Eigen::Index j = ng - 1; j >= 0; --j)
      suffix[j] = suffix[j + 1] + x.A(i, j) * dom[static_cast<size_t>(j)];
    for (Eigen::Index j = 0; j < ng; ++j) {
      const double aij = x.A(i, j);
      if (aij == 0.0) continue;
      const Interval rest = prefix[j] + suffix[j + 1];
      const Interval cand = (1.0 / aij) * (Interval::point(x.b(i)) - rest);
      // The sweep runs plain double arithmetic, so a hairline gap is not an
      // emptiness proof; padding the candidate keeps the tightening sound
      // and reserves the throw for robust gaps.
      const double pad =
          1e-9 * (1.0 + std::abs(cand.lo) + std::abs(cand.hi));
      Interval& d = dom[static_cast<size_t>(j)];
      const double lo = std::max(d.lo, cand.lo - pad);
      const double hi = std::min(d.hi, cand.hi + pad);
      if (lo > hi)
        throw EmptySetError("rescale: constraint propagation proves emptiness");
      d = Interval(lo, hi);
    }
  }

  Eigen::VectorXd mid(ng), rad(ng);
  for (Eigen::Index j = 0; j < ng; ++j) {
    mid(j) = dom[static_cast<size_t>(j)].mid();
    rad(j) = dom[static_cast<size_t>(j)].rad();
  }
  return ConstrainedZonotope(x.G * rad.asDiagonal(), x.c + x.G * mid,
                             x.A * rad.asDiagonal(), x.b - x.A * mid);
}

namespace {

struct ReducedMatrix {
  Eigen::MatrixXd m;
  double log_vol;
};

// Method-4 style zonotope generator reduction to `target` columns
// (target >= rows). All non-kept columns are boxed in the coordinates of a
// frame; the returned candidates differ only in the frame: greedy
// well-conditioned columns, principal directions of the boxed block, and
// the plain axes. log_vol is the boxed block's volume in the frame.
std::vector<ReducedMatrix> reduced_matrix_candidates(const Eigen::MatrixXd& g,
                                                     Eigen::Index target) {
  const Eigen::Index n = g.rows(), ng = g.cols();
  if (target < n)
    throw std::invalid_argument("generator target below set dimension");
  if (ng <= target) return {{g, 0.0}};

  std::vector<Eigen::Index> order(static_cast<size_t>(ng));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  Eigen::VectorXd score(ng);
  for (Eigen::Index j = 0; j < ng; ++j)
    score(j) = g.col(j).norm() - g.col(j).lpNorm<Eigen::Infinity>();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index bidx) {
                     return score(a) > score(bidx);
                   });

  // Greedy frame: take high-score columns that keep the frame well
  // conditioned, measured by the Gram-Schmidt residual against the columns
  // already accepted. Near-parallel duplicates (frequent after
  // intersections) are skipped so the inverse below stays bounded.
  constexpr double kIndepTol = 1e-3;
  std::vector<char> in_frame(static_cast<size_t>(ng), 0);
  Eigen::MatrixXd frame(n, n), q(n, n);
  Eigen::Index nq = 0;
  const auto try_accept = [&](const Eigen::VectorXd& col) {
    const double norm = col.norm();
    if (norm <= 0.0) return false;
    Eigen::VectorXd v = col;
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index i = 0; i < nq; ++i) v -= q.col(i).dot(v) * q.col(i);
    if (v.norm() < kIndepTol * norm) return false;
    q.col(nq) = v / v.norm();
    // Column scale cancels against the diagonal below, so store direction
    // only; the factorization then measures conditioning, not magnitudes.
    frame.col(nq) = col / norm;
    ++nq;
    return true;
  };
  for (size_t t = 0; t < order.size() && nq < n; ++t) {
    if (try_accept(g.col(order[t]))) in_frame[static_cast<size_t>(order[t])] = 1;
  }
  for (Eigen::Index axis = 0; nq < n && axis < n; ++axis)
    try_accept(Eigen::VectorXd::Unit(n, axis));

  Eigen::FullPivLU<Eigen::MatrixXd> lu;
  bool frame_ok = nq == n;
  if (frame_ok) {
    lu.compute(frame);
    frame_ok = lu.isInvertible();
  }

  const Eigen::Index keep = target - n;
  std::vector<Eigen::Index> kept, boxed;
  for (Eigen::Index j : order) {
    if (in_frame[static_cast<size_t>(j)])
      boxed.push_back(j);
    else if (static_cast<Eigen::Index>(kept.size()) < keep)
      kept.push_back(j);
    else
      boxed.push_back(j);
  }

  Eigen::MatrixXd out(n, target);
  for (Eigen::Index k = 0; k < keep; ++k) out.col(k) = g.col(kept[static_cast<size_t>(k)]);

  Eigen::MatrixXd boxed_cols(n, static_cast<Eigen::Index>(boxed.size()));
  for (size_t t = 0; t < boxed.size(); ++t)
    boxed_cols.col(static_cast<Eigen::Index>(t)) = g.col(boxed[t]);

  std::vector<ReducedMatrix> cands;
  const auto consider = [&](const Eigen::MatrixXd& l,
                            const Eigen::VectorXd& d, double log_det) {
    if (!d.allFinite() || !(d.array() >= 0.0).all()) return;
    ReducedMatrix cand{out, log_det + d.array().max(1e-300).log().sum()};
    cand.m.rightCols(n) = l * d.asDiagonal();
    cands.push_back(std::move(cand));
  };

  const Eigen::VectorXd axis_d = boxed_cols.cwiseAbs().rowwise().sum();
  consider(Eigen::MatrixXd::Identity(n, n), axis_d, 0.0);

  if (frame_ok) {
    Eigen::VectorXd dsum = Eigen::VectorXd::Zero(n);
    for (Eigen::Index t = 0; t < boxed_cols.cols(); ++t)
      dsum += lu.solve(boxed_cols.col(t)).cwiseAbs();
    consider(frame, dsum, std::log(std::abs(lu.determinant())));
  }

  if (boxed_cols.cols() > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(boxed_cols, Eigen::ComputeFullU);
    const Eigen::MatrixXd u = svd.matrixU();
    consider(u, (u.transpose() * boxed_cols).cwiseAbs().rowwise().sum(), 0.0);
  }

  if (cands.empty()) {
    ReducedMatrix fallback{out, 0.0};
    fallback.m.rightCols(n) = Eigen::MatrixXd(axis_d.asDiagonal());
    cands.push_back(std::move(fallback));
  }
  return cands;
}

Eigen::MatrixXd reduce_generator_matrix(const Eigen::MatrixXd& g,
                                        Eigen::Index target) {
  std::vector<ReducedMatrix> cands = reduced_matrix_candidates(g, target);
  size_t best = 0;
  for (size_t i = 1; i < cands.size(); ++i)
    if (cands[i].log_vol < cands[best].log_vol) best = i;
  return cands[best].m;
}

// Drops generator columns that are zero in both G and A; exact.
ConstrainedZonotope prune_zero_columns(const ConstrainedZonotope& x) {
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < x.num_generators(); ++j) {
    const bool zero_g = x.G.col(j).lpNorm<Eigen::Infinity>() == 0.0;
    const bool zero_a =
        x.num_constraints() == 0 || x.A.col(j).lpNorm<Eigen::Infinity>() == 0.0;
    if (!(zero_g && zero_a)) keep.push_back(j);
  }
  if (static_cast<Eigen::Index>(keep.size()) == x.num_generators()) return x;
  Eigen::MatrixXd g(x.dim(), static_cast<Eigen::Index>(keep.size()));
  Eigen::MatrixXd a(x.num_constraints(), static_cast<Eigen::Index>(keep.size()));
  for (size_t k = 0; k < keep.size(); ++k) {
    g.col(static_cast<Eigen::Index>(k)) = x.G.col(keep[k]);
    a.col(static_cast<Eigen::Index>(k)) = x.A.col(keep[k]);
  }
  return ConstrainedZonotope(g, x.c, a, x.b);
}

struct PivotChoice {
  Eigen::Index row{-1};
  Eigen::Index col{-1};
};

ConstrainedZonotope eliminate_constraint(const ConstrainedZonotope& x,
                                         Eigen::Index row, Eigen::Index col) {
  const double aij = x.A(row, col);
  const Eigen::VectorXd lam_g = x.G.col(col) / aij;
  const Eigen::VectorXd lam_a = x.A.col(col) / aij;

  Eigen::MatrixXd g = x.G - lam_g * x.A.row(row);
  Eigen::VectorXd c = x.c + lam_g * x.b(row);
  Eigen::MatrixXd a = x.A - lam_a * x.A.row(row);
  Eigen::VectorXd b = x.b - lam_a * x.b(row);

  const Eigen::Index ng = x.num_generators(), nh = x.num_constraints();
  Eigen::MatrixXd g2(x.dim(), ng - 1);
  Eigen::MatrixXd a2(nh - 1, ng - 1);
  Eigen::VectorXd b2(nh - 1);
  Eigen::Index jc = 0;
  for (Eigen::Index j = 0; j < ng; ++j) {
    if (j == col) continue;
    g2.col(jc) = g.col(j);
    Eigen::Index ic = 0;
    for (Eigen::Index i = 0; i < nh; ++i) {
      if (i == row) continue;
      a2(ic++, jc) = a(i, j);
    }
    ++jc;
  }
  Eigen::Index ic = 0;
  for (Eigen::Index i = 0; i < nh; ++i) {
    if (i == row) continue;
    b2(ic++) = b(i);
  }
  return ConstrainedZonotope(g2, c, a2, b2);
}

struct LpRescaleResult {
  ConstrainedZonotope set;
  // Per generator: how far the LP range with the box bound removed sticks
  // out of [-1, 1] after the reparameterization. Zero means pivoting that
  // generator away is exact; infinity means the range was unbounded.
  Eigen::VectorXd excess;
};

// Probes every generator with two LPs, its own box bound removed. The
// clamped ranges tighten the set exactly (constraint-based tightening);
// the overshoot beyond the box is kept for elimination pivot selection.
LpRescaleResult lp_rescale_with_excess(const ConstrainedZonotope& x,
                                       LpSolver& solver) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const Eigen::Index ng = x.num_generators();
  LpRescaleResult res{x, Eigen::VectorXd::Zero(ng)};
  if (x.num_constraints() == 0 || ng == 0) return res;

  LinearProgram lp = LinearProgram::boxed(ng, x.num_constraints());
  lp.eq_lhs = x.A;
  lp.eq_rhs = x.b;

  Eigen::VectorXd mid = Eigen::VectorXd::Zero(ng);
  Eigen::VectorXd rad = Eigen::VectorXd::Ones(ng);
  for (Eigen::Index j = 0; j < ng; ++j) {
    lp.lower(j) = -kInf;
    lp.upper(j) = kInf;
    lp.objective = Eigen::VectorXd::Zero(ng);
    lp.objective(j) = 1.0;

    double range[2] = {-kInf, kInf};
    bool usable = true;
    for (int side = 0; side < 2 && usable; ++side) {
      lp.maximize = side == 1;
      const LpSolution sol = solver.solve(lp);
      if (certified_infeasible(sol, x.b))
        throw EmptySetError("rescale: constraints infeasible");
      if (sol.status == LpStatus::kOptimal)
        range[side] = sol.objective_value;
      else if (sol.status != LpStatus::kUnbounded)
        usable = false;
    }
    lp.lower(j) = -1.0;
    lp.upper(j) = 1.0;
    // A range outside the box means the set grazes emptiness or the solve
    // stalled; skipping the tightening is sound either way, and a certified
    // empty set surfaces as such.
    if (usable && (range[0] > 1.0 + 1e-9 || range[1] < -1.0 - 1e-9)) {
      if (is_empty(x, solver))
        throw EmptySetError("rescale: constraints infeasible");
      usable = false;
    }
    if (!usable) {
      res.excess(j) = kInf;
      continue;
    }

    // Pad against the solver tolerance so the tightening stays an enclosure.
    const double mag =
        std::max(std::isfinite(range[0]) ? std::abs(range[0]) : 0.0,
                 std::isfinite(range[1]) ? std::abs(range[1]) : 0.0);
    const double pad = 1e-7 * (1.0 + mag);
    const double lo = std::max(-1.0, range[0] - pad);
    const double hi = std::min(1.0, std::max(range[1] + pad, lo));
    mid(j) = 0.5 * (lo + hi);
    rad(j) = 0.5 * (hi - lo);
    if (rad(j) < 1e-12) {
      res.excess(j) = 0.0;
    } else {
      const double over = std::max(std::abs(range[0] - mid(j)),
                                   std::abs(range[1] - mid(j))) /
                          rad(j);
      res.excess(j) = std::max(0.0, over - 1.0);
    }
  }

  res.set = ConstrainedZonotope(
      x.G * rad.asDiagonal(), x.c + x.G * mid,
      x.A * rad.asDiagonal(), x.b - x.A * mid);
  return res;
}

// Chooses the generator to pivot away. Exactly eliminable generators win
// outright; otherwise the least-excess candidates play off on the actual
// hull volume after elimination. The paired row is the largest pivot entry.
PivotChoice pick_elimination_pivot(const ConstrainedZonotope& x,
                                   const Eigen::VectorXd& excess,
                                   LpSolver& solver) {
  const double floor = 1e-9 * std::max(1.0, max_abs(x.A));
  struct Candidate {
    Eigen::Index row, col;
    double excess;
  };
  std::vector<Candidate> cands;
  for (Eigen::Index j = 0; j < x.num_generators(); ++j) {
    Eigen::Index row = -1;
    double best = floor;
    for (Eigen::Index i = 0; i < x.num_constraints(); ++i) {
      if (std::abs(x.A(i, j)) > best) {
        best = std::abs(x.A(i, j));
        row = i;
      }
    }
    if (row < 0) continue;
    cands.push_back({row, j, excess(j)});
  }
  if (cands.empty()) return PivotChoice{};

  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.excess < b.excess;
                   });
  if (cands[0].excess <= 1e-9) return {cands[0].row, cands[0].col};

  PivotChoice best{cands[0].row, cands[0].col};
  double best_vol = std::numeric_limits<double>::infinity();
  const size_t playoff = std::min<size_t>(3, cands.size());
  for (size_t k = 0; k < playoff; ++k) {
    if (!std::isfinite(cands[k].excess)) break;
    double vol;
    try {
      const ConstrainedZonotope trial =
          eliminate_constraint(x, cands[k].row, cands[k].col);
      vol = interval_hull(trial, solver).diam().array().max(1e-300).prod();
    } catch (const std::exception&) {
      continue;
    }
    if (vol < best_vol) {
      best_vol = vol;
      best = {cands[k].row, cands[k].col};
    }
  }
  return best;
}

// Removes constraint rows with (numerically) zero coefficients. A zero row
// with nonzero offset proves the set empty.
ConstrainedZonotope drop_null_rows(const ConstrainedZonotope& x) {
  const double floor = 1e-10 * std::max(1.0, max_abs(x.A));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < x.num_constraints(); ++i) {
    if (x.A.row(i).cwiseAbs().maxCoeff() > floor) {
      keep.push_back(i);
    } else if (std::abs(x.b(i)) > 1e-9 * std::max(1.0, x.b.cwiseAbs().maxCoeff())) {
      throw EmptySetError("reduce: inconsistent null constraint row");
    }
  }
  if (static_cast<Eigen::Index>(keep.size()) == x.num_constraints()) return x;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(keep.size()), x.num_generators());
  Eigen::VectorXd b(static_cast<Eigen::Index>(keep.size()));
  for (size_t k = 0; k < keep.size(); ++k) {
    a.row(static_cast<Eigen::Index>(k)) = x.A.row(keep[k]);
    b(static_cast<Eigen::Index>(k)) = x.b(keep[k]);
  }
  return ConstrainedZonotope(x.G, x.c, a, b);
}

}  // namespace

namespace {

// One elimination round: LP tightening, pivot choice, Gauss step, cleanup.
// Returns false when no usable pivot remains (only null rows left).
bool eliminate_once(ConstrainedZonotope& r, LpSolver& solver) {
  const LpRescaleResult t = lp_rescale_with_excess(rescale(r), solver);
  r = t.set;
  const PivotChoice p = pick_elimination_pivot(r, t.excess, solver);
  if (p.row < 0) {
    r = prune_zero_columns(drop_null_rows(r));
    return false;
  }
  r = prune_zero_columns(drop_null_rows(eliminate_constraint(r, p.row, p.col)));
  return true;
}

double hull_volume_or_inf(const ConstrainedZonotope& x, LpSolver& solver) {
  try {
    return interval_hull(x, solver).diam().array().max(1e-300).prod();
  } catch (const EmptySetError&) {
    throw;
  } catch (const std::exception&) {
    return std::numeric_limits<double>::infinity();
  }
}

// Boxes surplus generators through the lifted matrix, after an LP
// tightening pass so determined directions contribute nothing to the box.
// The frame candidates are judged by the hull volume of the resulting set,
// the quantity the filter actually pays for.
ConstrainedZonotope box_generators(const ConstrainedZonotope& x, int phi_g,
                                   LpSolver& solver) {
  if (x.num_generators() <= phi_g) return x;
  ConstrainedZonotope r = x;
  if (r.num_constraints() > 0)
    r = prune_zero_columns(lp_rescale_with_excess(rescale(r), solver).set);
  if (r.num_generators() <= phi_g) return r;

  // Constraint rows carry arbitrary historical scale; normalizing each one
  // (an exact reformulation) keeps the lifted frame selection meaningful.
  const Eigen::Index n = r.dim(), nh = r.num_constraints();
  for (Eigen::Index i = 0; i < nh; ++i) {
    const double s = r.A.row(i).lpNorm<Eigen::Infinity>();
    if (s > 0.0 && std::isfinite(s)) {
      r.A.row(i) /= s;
      r.b(i) /= s;
    }
  }
  Eigen::MatrixXd lifted(n + nh, r.num_generators());
  lifted.topRows(n) = r.G;
  lifted.bottomRows(nh) = r.A;
  const std::vector<ReducedMatrix> cands = reduced_matrix_candidates(
      lifted, std::max<Eigen::Index>(phi_g, n + nh));

  // A near-singular frame can box a tight hull into huge generators that
  // cancel only through the constraints, which downstream solves cannot
  // resolve. Reject frames whose unconstrained row extent blows up relative
  // to the input's; the axis frame always passes.
  const Eigen::VectorXd in_extent = lifted.cwiseAbs().rowwise().sum();
  const double extent_pad = 1e-9 * (1.0 + in_extent.maxCoeff());

  ConstrainedZonotope best;
  double best_vol = std::numeric_limits<double>::infinity();
  for (const ReducedMatrix& cand : cands) {
    const Eigen::VectorXd extent = cand.m.cwiseAbs().rowwise().sum();
    if ((extent.array() > 1e9 * in_extent.array() + extent_pad).any()) continue;
    ConstrainedZonotope next(cand.m.topRows(n), r.c, cand.m.bottomRows(nh),
                             r.b);
    const double vol = hull_volume_or_inf(next, solver);
    if (vol < best_vol) {
      best_vol = vol;
      best = std::move(next);
    }
  }
  if (!std::isfinite(best_vol))
    throw std::runtime_error("box_generators: no usable frame");
  return best;
}

}  // namespace

ConstrainedZonotope reduce(const ConstrainedZonotope& x,
                           const ReductionTargets& targets, LpSolver& solver) {
  if (targets.phi_c < 0 || targets.phi_g < static_cast<int>(x.dim()))
    throw std::invalid_argument("reduce: targets below set dimension");

  ConstrainedZonotope r = prune_zero_columns(drop_null_rows(x));

  // The lifted boxing below needs phi_g >= n + (final constraint count), so
  // the constraint ceiling shrinks when phi_g is tight.
  const Eigen::Index nh_cap =
      std::min<Eigen::Index>(targets.phi_c,
                             std::max<Eigen::Index>(0, targets.phi_g - r.dim()));

  while (r.num_constraints() > nh_cap) {
    if (!eliminate_once(r, solver)) {
      if (r.num_constraints() > nh_cap)
        throw std::runtime_error("reduce: no usable elimination pivot");
      break;
    }
  }
  if (r.num_generators() <= targets.phi_g) return r;

  // The budgets are ceilings. Boxing with every constraint kept can cost far
  // more volume than a few extra eliminations (often exact ones), so walk
  // the elimination chain down and keep the cheapest boxed result. Ties
  // favor retaining constraints.
  ConstrainedZonotope best = box_generators(r, targets.phi_g, solver);
  double best_vol = hull_volume_or_inf(best, solver);
  while (r.num_constraints() > 0 && eliminate_once(r, solver)) {
    const ConstrainedZonotope cand = box_generators(r, targets.phi_g, solver);
    const double vol = hull_volume_or_inf(cand, solver);
    if (vol < best_vol * (1.0 - 1e-9)) {
      best = cand;
      best_vol = vol;
    }
  }
  return best;
}

ConstrainedZonotope rescale(const ConstrainedZonotope& x, LpSolver& solver) {
  return lp_rescale_with_excess(x, solver).set;
}

Zonotope zonotope_reduce_to_parallelotope(const Zonotope& z) {
  const Eigen::Index n = z.dim();
  if (z.num_generators() == n) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(z.G);
    if (lu.isInvertible()) return z;
  }
  if (z.num_generators() > n)
    return Zonotope(reduce_generator_matrix(z.G, n), z.c);

  // Degenerate input: pad with zero columns so the frame machinery runs.
  // Flat inputs come back as flat parallelotopes, which is exact.
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n + 1);
  g.leftCols(z.num_generators()) = z.G;
  return Zonotope(reduce_generator_matrix(g, n), z.c);
}

}  // namespace czdc
