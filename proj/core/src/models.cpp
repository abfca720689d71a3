#include "czdc/models.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace czdc {

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

DifferentiableMap zero_map(Eigen::Index dim_in, Eigen::Index dim_out) {
  DifferentiableMap z;
  z.dim_in = dim_in;
  z.dim_out = dim_out;
  z.value = [dim_out](const Eigen::VectorXd&) {
    return Eigen::VectorXd::Zero(dim_out).eval();
  };
  z.jacobian = [dim_in, dim_out](const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Zero(dim_out, dim_in).eval();
  };
  z.component_hessian = [dim_in](Eigen::Index, const IntervalVector&) {
    return IntervalMatrix(dim_in, dim_in);
  };
  return z;
}

// ---------------------------------------------------------------------------
// quad2d: state (x1, x2), process noise (w1, w2), scalar output.
// ---------------------------------------------------------------------------

DifferentiableMap quad2d_f() {
  DifferentiableMap f;
  f.dim_in = 4;
  f.dim_out = 2;
  f.value = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), w1 = z(2), w2 = z(3);
    return vec2(-0.7 * x2 + 0.1 * x2 * x2 + 0.1 * x1 * x2 + 0.1 * std::exp(x1) + w1,
                x1 + x2 - 0.1 * x1 * x1 + 0.2 * x1 * x2 + w2);
  };
  f.jacobian = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1);
    Eigen::MatrixXd j(2, 4);
    j << 0.1 * x2 + 0.1 * std::exp(x1), -0.7 + 0.2 * x2 + 0.1 * x1, 1.0, 0.0,
        1.0 - 0.2 * x1 + 0.2 * x2, 1.0 + 0.2 * x1, 0.0, 1.0;
    return j;
  };
  f.component_hessian = [](Eigen::Index i, const IntervalVector& z) {
    IntervalMatrix h(4, 4);
    if (i == 0) {
      h.set(0, 0, 0.1 * exp(z[0]));
      h.set(0, 1, Interval::point(0.1));
      h.set(1, 0, Interval::point(0.1));
      h.set(1, 1, Interval::point(0.2));
    } else {
      h.set(0, 0, Interval::point(-0.2));
      h.set(0, 1, Interval::point(0.2));
      h.set(1, 0, Interval::point(0.2));
      h.set(1, 1, Interval::point(0.0));
    }
    return h;
  };
  return f;
}

DcDecomposition quad2d_f_dc() {
  DifferentiableMap a;
  a.dim_in = 4;
  a.dim_out = 2;
  a.value = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), w1 = z(2), w2 = z(3);
    return vec2(0.1 * x1 * x1 + 0.1 * x1 * x2 + 0.1 * x2 * x2 +
                    0.1 * std::exp(x1) + w1,
                0.1 * x2 * x2 + x1 + x2 + w2);
  };
  a.jacobian = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1);
    Eigen::MatrixXd j(2, 4);
    j << 0.2 * x1 + 0.1 * x2 + 0.1 * std::exp(x1), 0.1 * x1 + 0.2 * x2, 1.0, 0.0,
        1.0, 0.2 * x2 + 1.0, 0.0, 1.0;
    return j;
  };

  DifferentiableMap b;
  b.dim_in = 4;
  b.dim_out = 2;
  b.value = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1);
    return vec2(0.1 * x1 * x1 + 0.7 * x2,
                0.1 * x1 * x1 + 0.1 * x2 * x2 - 0.2 * x1 * x2);
  };
  b.jacobian = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1);
    Eigen::MatrixXd j(2, 4);
    j << 0.2 * x1, 0.7, 0.0, 0.0,
        0.2 * x1 - 0.2 * x2, 0.2 * x2 - 0.2 * x1, 0.0, 0.0;
    return j;
  };
  return make_explicit_dc(std::move(a), std::move(b));
}

DifferentiableMap quad2d_h() {
  DifferentiableMap h;
  h.dim_in = 3;
  h.dim_out = 1;
  h.value = [](const Eigen::VectorXd& z) {
    Eigen::VectorXd y(1);
    y << z(0) + z(1) + z(2);
    return y;
  };
  h.jacobian = [](const Eigen::VectorXd&) {
    Eigen::MatrixXd j(1, 3);
    j << 1.0, 1.0, 1.0;
    return j;
  };
  h.component_hessian = [](Eigen::Index, const IntervalVector&) {
    return IntervalMatrix(3, 3);
  };
  return h;
}

// ---------------------------------------------------------------------------
// attitude: quaternion x, gyro input u measured as u = true rate + w,
// reference-vector outputs, unit-norm invariant.
// ---------------------------------------------------------------------------

constexpr double kTs = 0.2;
constexpr double kHalfTs = 0.1;        // s = Ts / 2
constexpr double kS2 = kHalfTs * kHalfTs;

const std::array<Eigen::Matrix4d, 3>& omega_basis() {
  static const std::array<Eigen::Matrix4d, 3> e = [] {
    std::array<Eigen::Matrix4d, 3> m;
    m[0] << 0, 0, 0, 1,
            0, 0, 1, 0,
            0, -1, 0, 0,
            -1, 0, 0, 0;
    m[1] << 0, 0, -1, 0,
            0, 0, 0, 1,
            1, 0, 0, 0,
            0, -1, 0, 0;
    m[2] << 0, 1, 0, 0,
            -1, 0, 0, 0,
            0, 0, 0, 1,
            0, 0, -1, 0;
    return m;
  }();
  return e;
}

Eigen::Matrix4d omega_of(const Eigen::Vector3d& nu) {
  const auto& e = omega_basis();
  return nu(0) * e[0] + nu(1) * e[1] + nu(2) * e[2];
}

// phi(q) = cos(s sqrt(q)) and psi(q) = sinc(s sqrt(q)) with their first two
// q-derivatives; q = |nu|^2. The closed forms cancel near q = 0, so small
// arguments switch to truncated power series in q.
double att_psi(double q) {
  const double p = kHalfTs * std::sqrt(std::max(q, 0.0));
  if (p < 1e-6) return 1.0 - p * p / 6.0;
  return std::sin(p) / p;
}

double att_phi(double q) { return std::cos(kHalfTs * std::sqrt(std::max(q, 0.0))); }

double att_psi1(double q) {
  if (q > 1e-4) return (att_phi(q) - att_psi(q)) / (2.0 * q);
  const double t = kS2;
  return -t / 6.0 + t * t * q / 60.0 - t * t * t * q * q / 1680.0;
}

// Interval ranges of the same functions over [q]. psi goes through its
// monotone closed form; the derivative series use an alternating-series
// remainder, valid because s^2 q stays far below the first factorial step.
Interval att_q_interval(const IntervalVector& z) {
  Interval q = Interval::point(0.0);
  for (int l = 0; l < 3; ++l) q = q + sqr(z[4 + l] - z[7 + l]);
  return Interval(std::max(0.0, q.lo), q.hi);
}

Interval att_psi_iv(const Interval& q) {
  // sinc falls monotonically on [0, pi]; s sqrt(q) stays well inside.
  if (kS2 * q.hi >= 9.0)
    throw std::invalid_argument("attitude rate interval out of range");
  const double eps = interval_inflation();
  return Interval(att_psi(q.hi) - eps, att_psi(q.lo) + eps);
}

Interval att_series_iv(const Interval& q, const double* coef, int terms,
                       double next_mag) {
  Interval acc = Interval::point(coef[terms - 1]);
  for (int k = terms - 2; k >= 0; --k) acc = coef[k] + q * acc;
  const double ratio = kS2 * q.hi / 6.0;
  if (ratio >= 0.5)
    throw std::invalid_argument("attitude rate interval out of range");
  const double rem = next_mag * std::pow(q.hi, terms) / (1.0 - ratio);
  return acc + Interval(-rem, rem);
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Interval att_psi1_iv(const Interval& q) {
  static const auto coef = [] {
    std::array<double, 9> c{};
    for (int k = 0; k < 9; ++k)
      c[static_cast<size_t>(k)] = ((k % 2 == 0) ? -1.0 : 1.0) * (k + 1) *
                                  std::pow(kS2, k + 1) / factorial(2 * k + 3);
    return c;
  }();
  const double next = 10.0 * std::pow(kS2, 10) / factorial(21);
  return att_series_iv(q, coef.data(), 9, next);
}

Interval att_psi2_iv(const Interval& q) {
  static const auto coef = [] {
    std::array<double, 9> c{};
    for (int k = 0; k < 9; ++k)
      c[static_cast<size_t>(k)] = ((k % 2 == 0) ? 1.0 : -1.0) * (k + 2) * (k + 1) *
                                  std::pow(kS2, k + 2) / factorial(2 * k + 5);
    return c;
  }();
  const double next = 11.0 * 10.0 * std::pow(kS2, 11) / factorial(23);
  return att_series_iv(q, coef.data(), 9, next);
}

DifferentiableMap attitude_f() {
  DifferentiableMap f;
  f.dim_in = 10;
  f.dim_out = 4;
  f.value = [](const Eigen::VectorXd& z) {
    const Eigen::Vector4d x = z.head<4>();
    const Eigen::Vector3d nu = z.segment<3>(4) - z.tail<3>();
    const double q = nu.squaredNorm();
    const Eigen::Vector4d next = att_phi(q) * x -
                                 kHalfTs * att_psi(q) * (omega_of(nu) * x);
    return Eigen::VectorXd(next);
  };
  f.jacobian = [](const Eigen::VectorXd& z) {
    const Eigen::Vector4d x = z.head<4>();
    const Eigen::Vector3d nu = z.segment<3>(4) - z.tail<3>();
    const double q = nu.squaredNorm();
    const double phi = att_phi(q), psi = att_psi(q);
    const double phi1 = -0.5 * kS2 * psi, psi1 = att_psi1(q);
    const Eigen::Matrix4d om = omega_of(nu);
    const Eigen::Vector4d omx = om * x;

    Eigen::MatrixXd j(4, 10);
    j.leftCols<4>() = phi * Eigen::Matrix4d::Identity() - kHalfTs * psi * om;
    for (int l = 0; l < 3; ++l) {
      const Eigen::Vector4d col = 2.0 * nu(l) * phi1 * x -
                                  2.0 * kHalfTs * nu(l) * psi1 * omx -
                                  kHalfTs * psi * (omega_basis()[l] * x);
      j.col(4 + l) = col;
      j.col(7 + l) = -col;
    }
    return j;
  };
  f.component_hessian = [](Eigen::Index i, const IntervalVector& z) {
    const auto& e = omega_basis();
    const Interval q = att_q_interval(z);
    const Interval psi = att_psi_iv(q);
    const Interval psi1 = att_psi1_iv(q);
    const Interval psi2 = att_psi2_iv(q);
    const Interval phi1 = -0.5 * kS2 * psi;
    const Interval phi2 = -0.5 * kS2 * psi1;
    const Interval beta = kHalfTs * psi;

    std::array<Interval, 3> nu, alpha, betal;
    for (int l = 0; l < 3; ++l) {
      nu[l] = z[4 + l] - z[7 + l];
      alpha[l] = 2.0 * (phi1 * nu[l]);
      betal[l] = 2.0 * kHalfTs * (psi1 * nu[l]);
    }

    // Row i of Omega(nu), of each E_l x, and of Omega x, as intervals.
    std::array<Interval, 4> omega_row;
    for (int j = 0; j < 4; ++j) {
      Interval s = Interval::point(0.0);
      for (int l = 0; l < 3; ++l) s = s + e[l](i, j) * nu[l];
      omega_row[j] = s;
    }
    std::array<Interval, 3> ex_i;
    for (int l = 0; l < 3; ++l) {
      Interval s = Interval::point(0.0);
      for (int j = 0; j < 4; ++j) s = s + e[l](i, j) * z[j];
      ex_i[l] = s;
    }
    Interval omega_i = Interval::point(0.0);
    for (int j = 0; j < 4; ++j) omega_i = omega_i + omega_row[j] * z[j];

    IntervalMatrix h(10, 10);
    for (int j = 0; j < 4; ++j) {
      for (int l = 0; l < 3; ++l) {
        Interval hxn = -(betal[l] * omega_row[j]) - beta * e[l](i, j);
        if (j == static_cast<int>(i)) hxn = hxn + alpha[l];
        h.set(j, 4 + l, hxn);
        h.set(4 + l, j, hxn);
        h.set(j, 7 + l, -hxn);
        h.set(7 + l, j, -hxn);
      }
    }
    for (int l = 0; l < 3; ++l) {
      for (int m = 0; m < 3; ++m) {
        Interval a_lm = 4.0 * (phi2 * (nu[l] * nu[m]));
        Interval b_lm = kHalfTs * (4.0 * (psi2 * (nu[l] * nu[m])));
        if (l == m) {
          a_lm = a_lm + 2.0 * phi1;
          b_lm = b_lm + kHalfTs * (2.0 * psi1);
        }
        const Interval hnn = a_lm * z[static_cast<Eigen::Index>(i)] -
                             b_lm * omega_i - betal[l] * ex_i[m] -
                             betal[m] * ex_i[l];
        h.set(4 + l, 4 + m, hnn);
        h.set(7 + l, 7 + m, hnn);
        h.set(4 + l, 7 + m, -hnn);
        h.set(7 + m, 4 + l, -hnn);
      }
    }
    return h;
  };
  return f;
}

DifferentiableMap attitude_h() {
  DifferentiableMap h;
  h.dim_in = 10;
  h.dim_out = 6;
  h.value = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3);
    Eigen::VectorXd y(6);
    y << x1 * x1 - x2 * x2 - x3 * x3 + x4 * x4,
        2.0 * x1 * x2 - 2.0 * x3 * x4,
        2.0 * x1 * x3 + 2.0 * x2 * x4,
        2.0 * x1 * x2 + 2.0 * x3 * x4,
        -x1 * x1 + x2 * x2 - x3 * x3 + x4 * x4,
        -2.0 * x1 * x4 + 2.0 * x2 * x3;
    return (y + z.tail<6>()).eval();
  };
  h.jacobian = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 10);
    j.block<6, 4>(0, 0) << 2 * x1, -2 * x2, -2 * x3, 2 * x4,
        2 * x2, 2 * x1, -2 * x4, -2 * x3,
        2 * x3, 2 * x4, 2 * x1, 2 * x2,
        2 * x2, 2 * x1, 2 * x4, 2 * x3,
        -2 * x1, 2 * x2, -2 * x3, 2 * x4,
        -2 * x4, 2 * x3, 2 * x2, -2 * x1;
    j.rightCols<6>().setIdentity();
    return j;
  };
  h.component_hessian = [](Eigen::Index i, const IntervalVector&) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    switch (i) {
      case 0: m.diagonal() << 2, -2, -2, 2; break;
      case 1: m(0, 1) = m(1, 0) = 2; m(2, 3) = m(3, 2) = -2; break;
      case 2: m(0, 2) = m(2, 0) = 2; m(1, 3) = m(3, 1) = 2; break;
      case 3: m(0, 1) = m(1, 0) = 2; m(2, 3) = m(3, 2) = 2; break;
      case 4: m.diagonal() << -2, 2, -2, 2; break;
      default: m(0, 3) = m(3, 0) = -2; m(1, 2) = m(2, 1) = 2; break;
    }
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(10, 10);
    full.topLeftCorner<4, 4>() = m;
    return IntervalMatrix(full, full);
  };
  return h;
}

// Convex split of the bilinear outputs as differences of squares; the two
// quadratic-form outputs are already differences of convex diagonals.
DcDecomposition attitude_h_dc() {
  DifferentiableMap a;
  a.dim_in = 10;
  a.dim_out = 6;
  a.value = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3);
    auto sq = [](double t) { return t * t; };
    Eigen::VectorXd y(6);
    y << sq(x1) + sq(x4),
        0.5 * sq(x1 + x2) + 0.5 * sq(x3 - x4),
        0.5 * sq(x1 + x3) + 0.5 * sq(x2 + x4),
        0.5 * sq(x1 + x2) + 0.5 * sq(x3 + x4),
        sq(x2) + sq(x4),
        0.5 * sq(x2 + x3) + 0.5 * sq(x1 - x4);
    return (y + z.tail<6>()).eval();
  };
  a.jacobian = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 10);
    j.block<6, 4>(0, 0) << 2 * x1, 0, 0, 2 * x4,
        x1 + x2, x1 + x2, x3 - x4, x4 - x3,
        x1 + x3, x2 + x4, x1 + x3, x2 + x4,
        x1 + x2, x1 + x2, x3 + x4, x3 + x4,
        0, 2 * x2, 0, 2 * x4,
        x1 - x4, x2 + x3, x2 + x3, x4 - x1;
    j.rightCols<6>().setIdentity();
    return j;
  };

  DifferentiableMap b;
  b.dim_in = 10;
  b.dim_out = 6;
  b.value = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3);
    auto sq = [](double t) { return t * t; };
    Eigen::VectorXd y(6);
    y << sq(x2) + sq(x3),
        0.5 * sq(x1 - x2) + 0.5 * sq(x3 + x4),
        0.5 * sq(x1 - x3) + 0.5 * sq(x2 - x4),
        0.5 * sq(x1 - x2) + 0.5 * sq(x3 - x4),
        sq(x1) + sq(x3),
        0.5 * sq(x2 - x3) + 0.5 * sq(x1 + x4);
    return y;
  };
  b.jacobian = [](const Eigen::VectorXd& z) {
    const double x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 10);
    j.block<6, 4>(0, 0) << 0, 2 * x2, 2 * x3, 0,
        x1 - x2, x2 - x1, x3 + x4, x3 + x4,
        x1 - x3, x2 - x4, x3 - x1, x4 - x2,
        x1 - x2, x2 - x1, x3 - x4, x4 - x3,
        2 * x1, 0, 2 * x3, 0,
        x1 + x4, x2 - x3, x3 - x2, x1 + x4;
    return j;
  };
  return make_explicit_dc(std::move(a), std::move(b));
}

DifferentiableMap attitude_g() {
  DifferentiableMap g;
  g.dim_in = 4;
  g.dim_out = 1;
  g.value = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd v(1);
    v << x.squaredNorm() - 1.0;
    return v;
  };
  g.jacobian = [](const Eigen::VectorXd& x) {
    return (2.0 * x.transpose()).eval();
  };
  g.component_hessian = [](Eigen::Index, const IntervalVector&) {
    const Eigen::MatrixXd two = 2.0 * Eigen::MatrixXd::Identity(4, 4);
    return IntervalMatrix(two, two);
  };
  return g;
}

IntervalVector box_from(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  return IntervalVector(lo, hi);
}

}  // namespace

SystemModel build_quad2d() {
  SystemModel mm;
  mm.name = "quad2d";
  mm.n = 2;
  mm.p = 0;
  mm.q = 2;
  mm.r = 1;
  mm.m = 1;
  mm.f = quad2d_f();
  mm.h = quad2d_h();
  mm.f_dc = quad2d_f_dc();
  {
    DifferentiableMap ha = mm.h;
    mm.h_dc = make_explicit_dc(std::move(ha), zero_map(3, 1));
  }
  mm.f_noise_affine = true;
  mm.h_noise_affine = true;

  mm.W = ConstrainedZonotope(0.1 * Eigen::MatrixXd::Identity(2, 2),
                             Eigen::VectorXd::Zero(2));
  mm.V = ConstrainedZonotope(0.2 * Eigen::MatrixXd::Identity(1, 1),
                             Eigen::VectorXd::Zero(1));
  mm.X0 = ConstrainedZonotope(3.0 * Eigen::MatrixXd::Identity(2, 2),
                              Eigen::VectorXd::Zero(2));
  mm.x0_true = Eigen::Vector2d(1.0, 1.0);

  mm.true_input = [](int) { return Eigen::VectorXd(0); };

  Eigen::VectorXd flo(4), fhi(4);
  flo << -4, -4, -0.1, -0.1;
  fhi << 4, 4, 0.1, 0.1;
  mm.f_domain = box_from(flo, fhi);
  Eigen::VectorXd hlo(3), hhi(3);
  hlo << -4, -4, -0.2;
  hhi << 4, 4, 0.2;
  mm.h_domain = box_from(hlo, hhi);
  return mm;
}

SystemModel build_attitude() {
  SystemModel mm;
  mm.name = "attitude";
  mm.n = 4;
  mm.p = 3;
  mm.q = 3;
  mm.r = 6;
  mm.m = 6;
  mm.f = attitude_f();
  mm.h = attitude_h();
  mm.h_dc = attitude_h_dc();
  mm.g = attitude_g();
  {
    DifferentiableMap ga = *mm.g;
    mm.g_dc = make_explicit_dc(std::move(ga), zero_map(4, 1));
  }
  mm.f_noise_affine = false;
  mm.h_noise_affine = true;

  mm.W = ConstrainedZonotope(3e-3 * Eigen::MatrixXd::Identity(3, 3),
                             Eigen::VectorXd::Zero(3));
  mm.V = ConstrainedZonotope(0.15 * Eigen::MatrixXd::Identity(6, 6),
                             Eigen::VectorXd::Zero(6));
  Eigen::VectorXd c0(4);
  c0 << 0.1, 0.9, 0.1, 0.1;
  mm.X0 = ConstrainedZonotope(0.18 * Eigen::MatrixXd::Identity(4, 4), c0);
  mm.XF = ConstrainedZonotope(Eigen::MatrixXd::Identity(4, 4),
                              Eigen::VectorXd::Zero(4));

  mm.true_input = [](int k) {
    const double t = 2.0 * M_PI / 12.0 * k * kTs;
    Eigen::VectorXd u(3);
    u << std::sin(t), std::sin(t - 6.0), std::sin(t - 12.0);
    return (0.3 * u).eval();
  };
  mm.input_measured_with_noise = true;
  Eigen::VectorXd x0(4);
  x0 << 0.0, 1.0, 0.0, 0.0;
  mm.x0_true = x0;

  Eigen::VectorXd flo(10), fhi(10);
  flo << -1.2, -1.2, -1.2, -1.2, -0.35, -0.35, -0.35, -0.003, -0.003, -0.003;
  fhi << 1.2, 1.2, 1.2, 1.2, 0.35, 0.35, 0.35, 0.003, 0.003, 0.003;
  mm.f_domain = box_from(flo, fhi);
  Eigen::VectorXd hlo(10), hhi(10);
  hlo << -1.2, -1.2, -1.2, -1.2, -0.15, -0.15, -0.15, -0.15, -0.15, -0.15;
  hhi << 1.2, 1.2, 1.2, 1.2, 0.15, 0.15, 0.15, 0.15, 0.15, 0.15;
  mm.h_domain = box_from(hlo, hhi);
  return mm;
}

SystemModel build_model(const std::string& name) {
  if (name == "quad2d") return build_quad2d();
  if (name == "attitude") return build_attitude();
  throw std::invalid_argument("unknown model '" + name + "'");
}

ModelDefaults defaults_for(const std::string& name) {
  // quad2d's scalar sum measurement leaves one direction weakly observed;
  // the box polytope keeps the forecast remainder from accumulating there.
  if (name == "quad2d") return {40, 100, 3, 8, EnclosureKind::kBox};
  if (name == "attitude") return {200, 5, 10, 30, EnclosureKind::kParallelotope};
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::vector<std::string> model_names() { return {"quad2d", "attitude"}; }

}  // namespace czdc
