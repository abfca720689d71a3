#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "czdc/interval.hpp"
#include "czdc/lp.hpp"
#include "czdc/rng.hpp"

namespace czdc {

/// @brief Thrown when an operation needs a nonempty set but the set is empty.
class EmptySetError : public std::runtime_error {
 public:
  explicit EmptySetError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * @brief Zonotope {G xi + c : xi in [-1,1]^ng}.
 */
struct Zonotope {
  Eigen::MatrixXd G;
  Eigen::VectorXd c;

  Zonotope() = default;
  Zonotope(Eigen::MatrixXd generators, Eigen::VectorXd center);

  Eigen::Index dim() const { return c.size(); }
  Eigen::Index num_generators() const { return G.cols(); }
};

/**
 * @brief Constrained zonotope {G xi + c : A xi = b, xi in [-1,1]^ng}.
 *
 * The generator count ng is shared between G and A; nh constraint rows may
 * be zero, in which case the set is a plain zonotope.
 */
struct ConstrainedZonotope {
  Eigen::MatrixXd G;
  Eigen::VectorXd c;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;

  ConstrainedZonotope() = default;
  ConstrainedZonotope(Eigen::MatrixXd generators, Eigen::VectorXd center);
  ConstrainedZonotope(Eigen::MatrixXd generators, Eigen::VectorXd center,
                      Eigen::MatrixXd constraints, Eigen::VectorXd offsets);

  Eigen::Index dim() const { return c.size(); }
  Eigen::Index num_generators() const { return G.cols(); }
  Eigen::Index num_constraints() const { return A.rows(); }

  /// @brief Singleton set {x}.
  static ConstrainedZonotope point(const Eigen::VectorXd& x);
  static ConstrainedZonotope from_zonotope(const Zonotope& z);
};

/// @brief Targets for reduce(): keep at most phi_c constraints, phi_g generators.
struct ReductionTargets {
  int phi_c{0};
  int phi_g{0};
};

/// @brief Image {L x + m : x in X}; exact.
ConstrainedZonotope affine_map(const Eigen::MatrixXd& L,
                               const ConstrainedZonotope& x,
                               const Eigen::VectorXd& m);
ConstrainedZonotope affine_map(const Eigen::MatrixXd& L,
                               const ConstrainedZonotope& x);

/// @brief Minkowski sum X + Y; exact.
ConstrainedZonotope minkowski_sum(const ConstrainedZonotope& x,
                                  const ConstrainedZonotope& y);

/**
 * @brief Generalized intersection {x in X : M x in W}; exact.
 *
 * With M = I this is the plain intersection of X and W.
 */
ConstrainedZonotope generalized_intersection(const ConstrainedZonotope& x,
                                             const ConstrainedZonotope& w,
                                             const Eigen::MatrixXd& m);

/// @brief Cartesian product X x W; exact.
ConstrainedZonotope cartesian_product(const ConstrainedZonotope& x,
                                      const ConstrainedZonotope& w);

/**
 * @brief Tight axis-aligned bounding box, two LPs per dimension.
 *
 * Falls back to the closed-form zonotope box when there are no constraints.
 * @throws EmptySetError when the set is empty.
 */
IntervalVector interval_hull(const ConstrainedZonotope& x, LpSolver& solver);

/// @brief Box as a zonotope with diagonal generator matrix.
Zonotope box_to_zonotope(const IntervalVector& box);

/**
 * @brief Support value max {dir' x : x in X}.
 *
 * When support_point is non-null it receives a maximizing point.
 * @throws EmptySetError when the set is empty.
 */
double support(const ConstrainedZonotope& x, const Eigen::VectorXd& dir,
               LpSolver& solver, Eigen::VectorXd* support_point = nullptr);

/// @brief Membership test, one feasibility LP; tol widens the match on G xi = p - c.
bool contains_point(const ConstrainedZonotope& x, const Eigen::VectorXd& p,
                    LpSolver& solver, double tol = 1e-9);

bool is_empty(const ConstrainedZonotope& x, LpSolver& solver);

/**
 * @brief Random point of the set: the average of k support points along
 * random directions. k = 1 returns an extreme point.
 */
Eigen::VectorXd sample_point(const ConstrainedZonotope& x, SplitMix64& rng,
                             LpSolver& solver, int k = 2);

/**
 * @brief Set-preserving reparameterization onto tightened generator ranges.
 *
 * One forward pass of interval propagation over the constraints shrinks each
 * xi_j domain inside [-1,1]; the generators are rescaled so the domains are
 * [-1,1] again. The represented set is unchanged.
 * @throws EmptySetError when propagation proves the set empty.
 */
ConstrainedZonotope rescale(const ConstrainedZonotope& x);

/**
 * @brief LP-tight variant of rescale: every generator range is bounded by a
 * pair of LPs before the reparameterization, so fully determined directions
 * collapse and the later reductions box much smaller columns.
 * @throws EmptySetError when the constraints are infeasible.
 */
ConstrainedZonotope rescale(const ConstrainedZonotope& x, LpSolver& solver);

/**
 * @brief Order reduction to at most phi_c constraints and phi_g generators.
 *
 * Constraints are removed by Gauss elimination with a pivot chosen to
 * minimize an interval-based bound on the hull inflation; generators are
 * removed Method-4 style on the lifted zonotope. The result encloses the
 * input.
 */
ConstrainedZonotope reduce(const ConstrainedZonotope& x,
                           const ReductionTargets& targets, LpSolver& solver);

/**
 * @brief Parallelotope (n generators) enclosing a zonotope, Method-4 style.
 */
Zonotope zonotope_reduce_to_parallelotope(const Zonotope& z);

}  // namespace czdc
