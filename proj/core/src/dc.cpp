#include "czdc/dc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace czdc {

AffineApprox linearize_at(const DifferentiableMap& f,
                          const Eigen::VectorXd& anchor) {
  if (anchor.size() != f.dim_in)
    throw std::invalid_argument("linearize_at: anchor dimension differs");
  return AffineApprox{f.value(anchor), f.jacobian(anchor), anchor};
}

DcDecomposition make_explicit_dc(DifferentiableMap a, DifferentiableMap b) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out)
    throw std::invalid_argument("make_explicit_dc: part dimensions differ");
  DcDecomposition dc;
  dc.a = std::move(a);
  dc.b = std::move(b);
  dc.provenance = DcProvenance::kExplicit;
  return dc;
}

double eig_lower_bound(const IntervalMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("eig_lower_bound: matrix not square");

  // Gershgorin over the interval entries.
  double gersh = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    double radius = 0.0;
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (j == i) continue;
      radius += std::max(std::abs(h.lo(i, j)), std::abs(h.hi(i, j)));
    }
    gersh = std::min(gersh, h.lo(i, i) - radius);
  }
  if (!std::isfinite(gersh)) return gersh;

  // Midpoint spectrum shifted by the radius spectral norm. Any symmetric
  // member is mid_s + E with |E(i,j)| bounded by the averaged radius plus
  // half the midpoint skew, and the spectral norm of a symmetric E is
  // monotone under the entrywise absolute value, so the shift is sound.
  const Eigen::MatrixXd mid = 0.5 * (h.lo + h.hi);
  const Eigen::MatrixXd rad = 0.5 * (h.hi - h.lo);
  const Eigen::MatrixXd mid_s = 0.5 * (mid + mid.transpose());
  const Eigen::MatrixXd rad_s =
      0.5 * (rad + rad.transpose()) +
      0.5 * (mid - mid.transpose()).cwiseAbs();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_mid(mid_s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_rad(rad_s);
  if (es_mid.info() != Eigen::Success || es_rad.info() != Eigen::Success)
    return gersh;
  const double spectral =
      es_mid.eigenvalues().minCoeff() - es_rad.eigenvalues().maxCoeff();
  return std::max(gersh, spectral);
}

DcDecomposition convexify(const DifferentiableMap& rho,
                          const IntervalVector& domain_box) {
  if (domain_box.size() != rho.dim_in)
    throw std::invalid_argument("convexify: box dimension differs");
  if (!rho.component_hessian)
    throw std::invalid_argument("convexify: map lacks an interval Hessian");

  Eigen::VectorXd lambda(rho.dim_out);
  for (Eigen::Index i = 0; i < rho.dim_out; ++i) {
    const IntervalMatrix h = rho.component_hessian(i, domain_box);
    lambda(i) = std::max(0.0, -eig_lower_bound(h));
  }

  const auto rho_value = rho.value;
  const auto rho_jacobian = rho.jacobian;

  DcDecomposition dc;
  dc.provenance = DcProvenance::kConvexified;
  dc.lambda = lambda;

  dc.b.dim_in = rho.dim_in;
  dc.b.dim_out = rho.dim_out;
  dc.b.value = [lambda](const Eigen::VectorXd& z) {
    return (0.5 * z.squaredNorm() * lambda).eval();
  };
  dc.b.jacobian = [lambda](const Eigen::VectorXd& z) {
    return (lambda * z.transpose()).eval();
  };

  dc.a.dim_in = rho.dim_in;
  dc.a.dim_out = rho.dim_out;
  dc.a.value = [rho_value, lambda](const Eigen::VectorXd& z) {
    return (rho_value(z) + 0.5 * z.squaredNorm() * lambda).eval();
  };
  dc.a.jacobian = [rho_jacobian, lambda](const Eigen::VectorXd& z) {
    return (rho_jacobian(z) + lambda * z.transpose()).eval();
  };
  return dc;
}

std::string to_string(EnclosureKind k) {
  return k == EnclosureKind::kBox ? "box" : "partope";
}

std::vector<Eigen::VectorXd> vertices(const Zonotope& p, int cap) {
  const Eigen::Index k = p.num_generators();
  if (k > cap)
    throw std::invalid_argument("vertices: generator count exceeds budget");
  std::vector<Eigen::VectorXd> out;
  out.reserve(static_cast<size_t>(1) << k);
  Eigen::VectorXd sigma(k);
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t t = 0; t < count; ++t) {
    for (Eigen::Index i = 0; i < k; ++i)
      sigma(i) = ((t >> (k - 1 - i)) & 1u) ? 1.0 : -1.0;
    out.push_back(p.c + p.G * sigma);
  }
  return out;
}

IntervalVector zonotope_box(const Zonotope& z) {
  const Eigen::VectorXd r = z.G.cwiseAbs().rowwise().sum();
  return IntervalVector(z.c - r, z.c + r);
}

Interval dc_bounds(const DcDecomposition& dc, const Zonotope& p,
                   Eigen::Index i, int vertex_cap) {
  const AffineApprox abar = linearize_at(dc.a, p.c);
  const AffineApprox bbar = linearize_at(dc.b, p.c);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Eigen::VectorXd& v : vertices(p, vertex_cap)) {
    lo = std::min(lo, abar(v)(i) - dc.b.value(v)(i));
    hi = std::max(hi, dc.a.value(v)(i) - bbar(v)(i));
  }
  if (lo > hi) lo = hi = 0.5 * (lo + hi);
  return Interval(lo, hi);
}

Zonotope linearization_enclosure(const DcDecomposition& dc,
                                 const AffineApprox& approx, const Zonotope& p,
                                 int vertex_cap) {
  const Eigen::Index m = approx.base.size();
  const AffineApprox abar = linearize_at(dc.a, approx.anchor);
  const AffineApprox bbar = linearize_at(dc.b, approx.anchor);

  Eigen::VectorXd emin = Eigen::VectorXd::Constant(
      m, std::numeric_limits<double>::infinity());
  Eigen::VectorXd emax = -emin;
  for (const Eigen::VectorXd& v : vertices(p, vertex_cap)) {
    const Eigen::VectorXd rbar = approx(v);
    const Eigen::VectorXd lower = abar(v) - dc.b.value(v) - rbar;
    const Eigen::VectorXd upper = dc.a.value(v) - bbar(v) - rbar;
    emin = emin.cwiseMin(lower);
    emax = emax.cwiseMax(upper);
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (emin(i) > emax(i)) emin(i) = emax(i) = 0.5 * (emin(i) + emax(i));
  }
  return Zonotope((0.5 * (emax - emin)).asDiagonal(), 0.5 * (emin + emax));
}

Zonotope tighten_parallelotope(const Zonotope& candidate,
                               const ConstrainedZonotope& content,
                               LpSolver& solver) {
  const Eigen::Index n = candidate.dim();
  if (candidate.num_generators() != n)
    throw std::invalid_argument("tighten_parallelotope: candidate not square");
  if (content.dim() != n)
    throw std::invalid_argument("tighten_parallelotope: dimensions differ");

  const Eigen::Index ng = content.num_generators();
  const Eigen::Index nh = content.num_constraints();

  // Variables [xi_c; xi_z] with every content point tied to a candidate
  // representation: G_c xi_c - G xi_z = c - c_c. Containment of the content
  // in the candidate guarantees feasibility, including flat candidates.
  LinearProgram lp = LinearProgram::boxed(n + ng, nh + n);
  lp.eq_lhs.topRightCorner(nh, ng) = content.A;
  lp.eq_rhs.head(nh) = content.b;
  lp.eq_lhs.bottomLeftCorner(n, n) = candidate.G;
  lp.eq_lhs.bottomRightCorner(n, ng) = -content.G;
  lp.eq_rhs.tail(n) = content.c - candidate.c;

  Eigen::VectorXd lo(n), hi(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lp.objective = Eigen::VectorXd::Zero(n + ng);
    lp.objective(i) = 1.0;

    lp.maximize = false;
    LpSolution smin = solver.solve(lp);
    if (smin.status == LpStatus::kInfeasible) {
      if (is_empty(content, solver))
        throw EmptySetError("tighten_parallelotope: empty content set");
      // Large residuals certify that some content point has no candidate
      // representation; small ones are numerical stall, handled below.
      if (smin.infeasibility > 1e-4 * (1.0 + lp.eq_rhs.lpNorm<1>()))
        throw std::invalid_argument(
            "tighten_parallelotope: candidate does not contain the set");
      smin.status = LpStatus::kError;
    }
    lp.maximize = true;
    LpSolution smax = solver.solve(lp);

    // A numerically stuck axis keeps its full extent, which is still sound:
    // the candidate contains the set by construction.
    if (smin.status != LpStatus::kOptimal ||
        smax.status != LpStatus::kOptimal) {
      lo(i) = -1.0;
      hi(i) = 1.0;
      continue;
    }
    lo(i) = smin.objective_value;
    hi(i) = std::max(smax.objective_value, lo(i));
  }

  const Eigen::VectorXd rad = 0.5 * (hi - lo);
  const Eigen::VectorXd mid = 0.5 * (lo + hi);
  return Zonotope(candidate.G * rad.asDiagonal(),
                  candidate.c + candidate.G * mid);
}

namespace {

// Candidate parallelotope frames for a rescaled set, in preference order:
// the principal directions of the generators, then a full reduction to a
// parallelotope, which folds the constraints into the frame.
std::vector<Zonotope> parallelotope_frames(const ConstrainedZonotope& zr,
                                           LpSolver& solver) {
  std::vector<Zonotope> frames;
  {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(zr.G, Eigen::ComputeFullU);
    const Eigen::MatrixXd u = svd.matrixU();
    Eigen::VectorXd r0 = (u.transpose() * zr.G).cwiseAbs().rowwise().sum();
    // Flooring near-flat axes keeps the tightening LP well conditioned; the
    // candidate only grows, so containment is unaffected.
    r0 = r0.cwiseMax(1e-7 * (1.0 + r0.maxCoeff()));
    frames.emplace_back(u * r0.asDiagonal(), zr.c);
  }
  if (zr.num_constraints() > 0) {
    try {
      const ConstrainedZonotope flat =
          reduce(zr, ReductionTargets{0, static_cast<int>(zr.dim())}, solver);
      Eigen::MatrixXd g = Eigen::MatrixXd::Zero(zr.dim(), zr.dim());
      g.leftCols(flat.num_generators()) = flat.G;
      frames.emplace_back(g, flat.c);
    } catch (const EmptySetError&) {
      throw;
    } catch (const std::exception&) {
      // The principal-direction frame remains available.
    }
  }
  return frames;
}

}  // namespace

std::vector<Zonotope> parallelotope_enclosures(const ConstrainedZonotope& z,
                                               LpSolver& solver) {
  ConstrainedZonotope zr = rescale(z, solver);
  std::vector<Zonotope> out;
  for (const Zonotope& frame : parallelotope_frames(zr, solver)) {
    try {
      out.push_back(tighten_parallelotope(frame, zr, solver));
    } catch (const EmptySetError&) {
      throw;
    } catch (const std::exception&) {
      // A frame that fails to tighten is dropped; the box below remains.
    }
  }
  out.push_back(box_to_zonotope(interval_hull(zr, solver)));
  return out;
}

PolytopeEnclosure enclose(const ConstrainedZonotope& z, EnclosureKind kind,
                          LpSolver& solver) {
  PolytopeEnclosure pe;
  pe.kind = kind;
  if (kind == EnclosureKind::kBox) {
    pe.zon = box_to_zonotope(interval_hull(z, solver));
    return pe;
  }
  ConstrainedZonotope zr = rescale(z, solver);
  for (const Zonotope& frame : parallelotope_frames(zr, solver)) {
    try {
      pe.zon = tighten_parallelotope(frame, zr, solver);
      return pe;
    } catch (const EmptySetError&) {
      throw;
    } catch (const std::exception&) {
      // Try the next frame; the interval hull below always applies.
    }
  }
  pe.zon = box_to_zonotope(interval_hull(zr, solver));
  return pe;
}

}  // namespace czdc
