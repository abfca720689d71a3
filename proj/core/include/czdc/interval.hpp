#pragma once

#include <Eigen/Dense>
#include <utility>

namespace czdc {

/**
 * @brief Outward inflation added to every interval arithmetic result.
 *
 * The library does not switch the FPU rounding mode; instead each operation
 * widens its result by this absolute margin so that roundoff cannot break
 * inclusion. The default is generous for the magnitudes handled here.
 */
double interval_inflation();

/// @brief Set the absolute inflation margin. Returns the previous value.
double set_interval_inflation(double eps);

/**
 * @brief Closed interval [lo, hi] on the real line.
 *
 * Invariant: lo <= hi. Constructing a reversed interval throws
 * std::invalid_argument.
 */
struct Interval {
  double lo{0.0};
  double hi{0.0};

  Interval() = default;
  Interval(double lo_, double hi_);

  /// @brief Degenerate interval [v, v].
  static Interval point(double v) { return Interval(v, v); }

  double mid() const { return 0.5 * (lo + hi); }
  double rad() const { return 0.5 * (hi - lo); }
  double diam() const { return hi - lo; }
  /// @brief Magnitude: max |x| over the interval.
  double mag() const;

  bool contains(double v, double tol = 0.0) const {
    return v >= lo - tol && v <= hi + tol;
  }
  bool contains(const Interval& other, double tol = 0.0) const {
    return other.lo >= lo - tol && other.hi <= hi + tol;
  }
};

Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
Interval operator-(const Interval& x);
Interval operator+(const Interval& x, double s);
Interval operator+(double s, const Interval& x);
Interval operator-(const Interval& x, double s);
Interval operator*(double s, const Interval& x);
Interval operator*(const Interval& x, double s);

/// @brief {x^2 : x in the interval}; never extends below 0.
Interval sqr(const Interval& x);
/// @brief Square root; requires lo >= 0.
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);

/// @brief Smallest interval containing both arguments.
Interval hull(const Interval& x, const Interval& y);
/// @brief Intersection; throws std::invalid_argument if disjoint.
Interval intersect(const Interval& x, const Interval& y);

/**
 * @brief Axis-aligned box as a vector of intervals over Eigen bound vectors.
 */
class IntervalVector {
 public:
  IntervalVector() = default;
  IntervalVector(Eigen::VectorXd lower, Eigen::VectorXd upper);
  explicit IntervalVector(Eigen::Index n)
      : lo_(Eigen::VectorXd::Zero(n)), hi_(Eigen::VectorXd::Zero(n)) {}

  Eigen::Index size() const { return lo_.size(); }
  Interval operator[](Eigen::Index i) const { return Interval(lo_(i), hi_(i)); }
  void set(Eigen::Index i, const Interval& v);

  const Eigen::VectorXd& lower() const { return lo_; }
  const Eigen::VectorXd& upper() const { return hi_; }
  Eigen::VectorXd mid() const { return 0.5 * (lo_ + hi_); }
  Eigen::VectorXd rad() const { return 0.5 * (hi_ - lo_); }
  Eigen::VectorXd diam() const { return hi_ - lo_; }

  bool contains(const Eigen::VectorXd& v, double tol = 0.0) const;

 private:
  Eigen::VectorXd lo_;
  Eigen::VectorXd hi_;
};

/**
 * @brief Elementwise interval matrix with matching lower/upper bounds.
 */
struct IntervalMatrix {
  Eigen::MatrixXd lo;
  Eigen::MatrixXd hi;

  IntervalMatrix() = default;
  IntervalMatrix(Eigen::MatrixXd lower, Eigen::MatrixXd upper);
  IntervalMatrix(Eigen::Index rows, Eigen::Index cols)
      : lo(Eigen::MatrixXd::Zero(rows, cols)),
        hi(Eigen::MatrixXd::Zero(rows, cols)) {}

  Eigen::Index rows() const { return lo.rows(); }
  Eigen::Index cols() const { return lo.cols(); }
  Interval operator()(Eigen::Index i, Eigen::Index j) const {
    return Interval(lo(i, j), hi(i, j));
  }
  void set(Eigen::Index i, Eigen::Index j, const Interval& v);

  Eigen::MatrixXd mid() const { return 0.5 * (lo + hi); }
  Eigen::MatrixXd rad() const { return 0.5 * (hi - lo); }
};

}  // namespace czdc
