#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "czdc/czset.hpp"
#include "czdc/interval.hpp"
#include "czdc/lp.hpp"

namespace czdc {

/**
 * @brief Vector map with callable value, Jacobian, and optionally an
 * interval Hessian per output component.
 *
 * component_hessian(i, box) must return a symmetric interval matrix that
 * encloses the Hessian of component i everywhere in the box; it may be a
 * null target when a stage never needs curvature bounds.
 */
struct DifferentiableMap {
  Eigen::Index dim_in{0};
  Eigen::Index dim_out{0};
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> value;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> jacobian;
  std::function<IntervalMatrix(Eigen::Index, const IntervalVector&)>
      component_hessian;
};

/**
 * @brief First-order expansion base + slope (z - anchor).
 *
 * For a componentwise convex map this is a global minorant; that is what
 * the bounding machinery below relies on.
 */
struct AffineApprox {
  Eigen::VectorXd base;
  Eigen::MatrixXd slope;
  Eigen::VectorXd anchor;

  Eigen::VectorXd operator()(const Eigen::VectorXd& z) const {
    return base + slope * (z - anchor);
  }
};

/// @brief Evaluates value and Jacobian of f at the anchor.
AffineApprox linearize_at(const DifferentiableMap& f,
                          const Eigen::VectorXd& anchor);

enum class DcProvenance { kExplicit, kConvexified };

/**
 * @brief Difference-of-convex split rho = a - b with both parts convex per
 * component on the working domain.
 */
struct DcDecomposition {
  DifferentiableMap a;
  DifferentiableMap b;
  DcProvenance provenance{DcProvenance::kExplicit};
  /// Quadratic shift per component when convexified; empty otherwise.
  Eigen::VectorXd lambda;
};

DcDecomposition make_explicit_dc(DifferentiableMap a, DifferentiableMap b);

/**
 * @brief Sound lower bound on the smallest eigenvalue of every symmetric
 * matrix inside the interval matrix, by Gershgorin discs.
 */
double eig_lower_bound(const IntervalMatrix& h);

/**
 * @brief Difference-of-convex split of an arbitrary C2 map over a box.
 *
 * Component i gets b_i(z) = lambda_i/2 z'z with lambda_i = max(0, -lb_i),
 * lb_i the Gershgorin eigenvalue bound of the interval Hessian over the
 * box, and a_i = rho_i + b_i. Gradients are assembled from rho's Jacobian,
 * not by differencing.
 */
DcDecomposition convexify(const DifferentiableMap& rho,
                          const IntervalVector& domain_box);

enum class EnclosureKind { kBox, kParallelotope };

std::string to_string(EnclosureKind k);

/**
 * @brief Polytope in generator form with explicit vertex enumeration. The
 * generators need not span the ambient space: fixed coordinates simply get
 * no generator.
 */
struct PolytopeEnclosure {
  EnclosureKind kind{EnclosureKind::kBox};
  Zonotope zon;
};

/**
 * @brief All 2^k corner points c + G sigma, sigma in {-1,+1}^k listed
 * lexicographically with -1 before +1. Throws when k exceeds the cap.
 */
std::vector<Eigen::VectorXd> vertices(const Zonotope& p, int cap = 16);

/// @brief Axis-aligned bounding box of a zonotope, closed form.
IntervalVector zonotope_box(const Zonotope& z);

/**
 * @brief Range bounds of component i of (a - b) over the polytope: the
 * minimum uses a's minorant at the polytope center, the maximum uses b's.
 */
Interval dc_bounds(const DcDecomposition& dc, const Zonotope& p,
                   Eigen::Index i, int vertex_cap = 16);

/**
 * @brief Interval remainder of a linearization, as a box-shaped zonotope.
 *
 * Given rho linearized at approx.anchor and a convex split of rho valid on
 * the polytope, returns R with rho(z) - approx(z) in R for every z in the
 * polytope. Bounds come from vertex enumeration of minorant differences.
 */
Zonotope linearization_enclosure(const DcDecomposition& dc,
                                 const AffineApprox& approx, const Zonotope& p,
                                 int vertex_cap = 16);

/**
 * @brief Shrinks a parallelotope candidate around a set it contains.
 *
 * One min and one max LP per axis couple the candidate's i-th coordinate
 * row to the set's. The result T satisfies content ⊆ T ⊆ candidate.
 * @throws EmptySetError when the content set is empty.
 * @throws std::invalid_argument when the candidate does not contain it.
 */
Zonotope tighten_parallelotope(const Zonotope& candidate,
                               const ConstrainedZonotope& content,
                               LpSolver& solver);

/**
 * @brief Sound parallelotope enclosures of a set, one per usable frame.
 *
 * Candidate frames (principal generator directions, then a full reduction
 * to a parallelotope) are each tightened onto the set; frames that fail to
 * tighten are dropped. Always returns at least the interval-hull box, as
 * the final entry. Callers pick by whatever metric fits their use.
 * @throws EmptySetError when the set is empty.
 */
std::vector<Zonotope> parallelotope_enclosures(const ConstrainedZonotope& z,
                                               LpSolver& solver);

/**
 * @brief Outer polytope of a set: its interval hull, or the first candidate
 * parallelotope frame that tightens onto it, with the hull as fallback.
 */
PolytopeEnclosure enclose(const ConstrainedZonotope& z, EnclosureKind kind,
                          LpSolver& solver);

}  // namespace czdc
