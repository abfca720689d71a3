#include "czdc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace czdc {

namespace {

double g_inflation = 1e-12;

Interval inflate(double lo, double hi) {
  return Interval(lo - g_inflation, hi + g_inflation);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

}  // namespace

double interval_inflation() { return g_inflation; }

double set_interval_inflation(double eps) {
  if (eps < 0.0) throw std::invalid_argument("inflation must be >= 0");
  return std::exchange(g_inflation, eps);
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo <= hi)) throw std::invalid_argument("interval bounds reversed");
}

double Interval::mag() const { return std::max(std::abs(lo), std::abs(hi)); }

Interval operator+(const Interval& x, const Interval& y) {
  return inflate(x.lo + y.lo, x.hi + y.hi);
}

Interval operator-(const Interval& x, const Interval& y) {
  return inflate(x.lo - y.hi, x.hi - y.lo);
}

Interval operator*(const Interval& x, const Interval& y) {
  const double p1 = x.lo * y.lo;
  const double p2 = x.lo * y.hi;
  const double p3 = x.hi * y.lo;
  const double p4 = x.hi * y.hi;
  return inflate(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator-(const Interval& x) { return Interval(-x.hi, -x.lo); }

Interval operator+(const Interval& x, double s) {
  return inflate(x.lo + s, x.hi + s);
}
Interval operator+(double s, const Interval& x) { return x + s; }
Interval operator-(const Interval& x, double s) { return x + (-s); }

Interval operator*(double s, const Interval& x) {
  if (s >= 0.0) return inflate(s * x.lo, s * x.hi);
  return inflate(s * x.hi, s * x.lo);
}
Interval operator*(const Interval& x, double s) { return s * x; }

Interval sqr(const Interval& x) {
  const double a = x.lo * x.lo;
  const double b = x.hi * x.hi;
  double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (x.lo <= 0.0 && x.hi >= 0.0) lo = 0.0;
  return Interval(std::max(0.0, lo - g_inflation), hi + g_inflation);
}

Interval sqrt(const Interval& x) {
  if (x.lo < 0.0) throw std::invalid_argument("sqrt of negative interval");
  return Interval(std::max(0.0, std::sqrt(x.lo) - g_inflation),
                  std::sqrt(x.hi) + g_inflation);
}

Interval exp(const Interval& x) {
  return inflate(std::exp(x.lo), std::exp(x.hi));
}

namespace {

// Range of cos over [a, b]: endpoint values, widened to +/-1 whenever the
// interval covers an extremum of the cosine.
Interval cos_range(double a, double b) {
  if (b - a >= kTwoPi) return Interval(-1.0, 1.0);
  double lo = std::min(std::cos(a), std::cos(b));
  double hi = std::max(std::cos(a), std::cos(b));
  // max of cos at 2k*pi, min at (2k+1)*pi
  const double k_max = std::ceil(a / kTwoPi);
  if (k_max * kTwoPi <= b) hi = 1.0;
  const double k_min = std::ceil((a - kPi) / kTwoPi);
  if (k_min * kTwoPi + kPi <= b) lo = -1.0;
  return Interval(lo, hi);
}

}  // namespace

Interval cos(const Interval& x) {
  const Interval r = cos_range(x.lo, x.hi);
  return Interval(std::max(-1.0, r.lo - g_inflation),
                  std::min(1.0, r.hi + g_inflation));
}

Interval sin(const Interval& x) {
  // sin(t) = cos(t - pi/2); shift is exact enough at these magnitudes
  const Interval r = cos_range(x.lo - kPi / 2.0, x.hi - kPi / 2.0);
  return Interval(std::max(-1.0, r.lo - 2.0 * g_inflation),
                  std::min(1.0, r.hi + 2.0 * g_inflation));
}

Interval hull(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lo, y.lo), std::max(x.hi, y.hi));
}

Interval intersect(const Interval& x, const Interval& y) {
  const double lo = std::max(x.lo, y.lo);
  const double hi = std::min(x.hi, y.hi);
  if (lo > hi) throw std::invalid_argument("disjoint intervals");
  return Interval(lo, hi);
}

IntervalVector::IntervalVector(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lo_(std::move(lower)), hi_(std::move(upper)) {
  if (lo_.size() != hi_.size())
    throw std::invalid_argument("interval vector bound sizes differ");
  if ((lo_.array() > hi_.array()).any())
    throw std::invalid_argument("interval vector bounds reversed");
}

void IntervalVector::set(Eigen::Index i, const Interval& v) {
  lo_(i) = v.lo;
  hi_(i) = v.hi;
}

bool IntervalVector::contains(const Eigen::VectorXd& v, double tol) const {
  if (v.size() != lo_.size()) return false;
  return (v.array() >= lo_.array() - tol).all() &&
         (v.array() <= hi_.array() + tol).all();
}

IntervalMatrix::IntervalMatrix(Eigen::MatrixXd lower, Eigen::MatrixXd upper)
    : lo(std::move(lower)), hi(std::move(upper)) {
  if (lo.rows() != hi.rows() || lo.cols() != hi.cols())
    throw std::invalid_argument("interval matrix bound shapes differ");
  if ((lo.array() > hi.array()).any())
    throw std::invalid_argument("interval matrix bounds reversed");
}

void IntervalMatrix::set(Eigen::Index i, Eigen::Index j, const Interval& v) {
  lo(i, j) = v.lo;
  hi(i, j) = v.hi;
}

}  // namespace czdc
