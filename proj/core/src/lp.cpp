#include "czdc/lp.hpp"


#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace czdc {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    default:
      return "error";
  }
}

LinearProgram LinearProgram::boxed(Eigen::Index n, Eigen::Index m) {
  LinearProgram lp;
  lp.objective = Eigen::VectorXd::Zero(n);
  lp.eq_lhs = Eigen::MatrixXd::Zero(m, n);
  lp.eq_rhs = Eigen::VectorXd::Zero(m);
  lp.lower = Eigen::VectorXd::Constant(n, -1.0);
  lp.upper = Eigen::VectorXd::Constant(n, 1.0);
  return lp;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-10;
// Ratio-test ties within this window resolve to the larger pivot element,
// trading a bound overshoot of at most the window for basis conditioning.
constexpr double kRatioTieTol = 1e-9;

enum class VarState : unsigned char { kBasic, kAtLower, kAtUpper, kFree };

// One simplex run over n structural variables plus m artificials.
class Simplex {
 public:
  Simplex(const LinearProgram& lp, const LpOptions& opts)
      : lp_(lp), opts_(opts), n_(lp.num_vars()), m_(lp.num_rows()),
        price_tol_(opts.tol_opt) {}

  LpSolution run() {
    LpSolution sol;
    if (!validate(sol)) return sol;

    init();
    if (failed_) return finish(LpStatus::kError);

    // Phase 1: minimize the sum of artificial values.
    cost_ = Eigen::VectorXd::Zero(n_ + m_);
    cost_.tail(m_).setOnes();
    const LpStatus ph1 = iterate();
    if (ph1 != LpStatus::kOptimal) return finish(LpStatus::kError);

    // Judge feasibility on refactorized values: the product-form inverse can
    // overstate the artificial sum after a long pivot run, and a false
    // "infeasible" is far more damaging downstream than a slightly loose
    // feasible answer.
    if (m_ > 0) {
      refactorize();
      if (failed_) return finish(LpStatus::kError);
    }
    double feas_level = cost_at_point();
    const double feas_gate =
        10.0 * opts_.tol_feas * (1.0 + lp_.eq_rhs.lpNorm<1>());

    // A marginal verdict often means the pricing cutoff stopped short, not
    // that the rows are inconsistent. Retighten and push once more; when the
    // retry itself stalls, the first measurement stands.
    if (feas_level > feas_gate && feas_level < 1e6 * feas_gate) {
      price_tol_ = opts_.tol_opt * 1e-4;
      const LpStatus again = iterate();
      price_tol_ = opts_.tol_opt;
      if (failed_) return finish(LpStatus::kError);
      if (again == LpStatus::kOptimal && m_ > 0) {
        refactorize();
        if (failed_) return finish(LpStatus::kError);
        feas_level = cost_at_point();
      }
    }
    if (feas_level > feas_gate) {
      LpSolution sol = finish(LpStatus::kInfeasible);
      sol.infeasibility = feas_level;
      return sol;
    }
    drive_out_artificials();
    if (failed_) return finish(LpStatus::kError);

    // Phase 2: original objective with artificials pinned to zero.
    cost_.setZero();
    cost_.head(n_) = lp_.maximize ? (-lp_.objective).eval() : lp_.objective;
    for (Eigen::Index a = 0; a < m_; ++a) {
      lo_(n_ + a) = 0.0;
      up_(n_ + a) = 0.0;
    }
    const LpStatus ph2 = iterate();
    return finish(ph2);
  }

 private:
  bool validate(LpSolution& sol) {
    const auto bad = [](const auto& v) { return !((v.array() == v.array()).all()); };
    if (lp_.eq_lhs.cols() != n_ || lp_.eq_rhs.size() != m_ ||
        lp_.lower.size() != n_ || lp_.upper.size() != n_) {
      sol.status = LpStatus::kError;
      return false;
    }
    if (bad(lp_.objective) || bad(lp_.eq_lhs) || bad(lp_.eq_rhs) ||
        bad(lp_.lower) || bad(lp_.upper) || !lp_.objective.allFinite() ||
        !lp_.eq_lhs.allFinite() || !lp_.eq_rhs.allFinite()) {
      sol.status = LpStatus::kError;
      return false;
    }
    if ((lp_.lower.array() > lp_.upper.array()).any()) {
      sol.status = LpStatus::kInfeasible;
      return false;
    }
    return true;
  }

  void init() {
    lo_.resize(n_ + m_);
    up_.resize(n_ + m_);
    lo_.head(n_) = lp_.lower;
    up_.head(n_) = lp_.upper;
    lo_.tail(m_).setZero();
    up_.tail(m_).setConstant(kInf);

    x_ = Eigen::VectorXd::Zero(n_ + m_);
    state_.assign(static_cast<size_t>(n_ + m_), VarState::kAtLower);
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (lo_(j) > -kInf) {
        state_[j] = VarState::kAtLower;
        x_(j) = lo_(j);
      } else if (up_(j) < kInf) {
        state_[j] = VarState::kAtUpper;
        x_(j) = up_(j);
      } else {
        state_[j] = VarState::kFree;
        x_(j) = 0.0;
      }
    }

    // Artificial basis with signs chosen so the start is feasible.
    Eigen::VectorXd r = lp_.eq_rhs;
    if (n_ > 0) r -= lp_.eq_lhs * x_.head(n_);
    art_sign_.resize(m_);
    basis_.resize(static_cast<size_t>(m_));
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      art_sign_(i) = (r(i) >= 0.0) ? 1.0 : -1.0;
      binv_(i, i) = art_sign_(i);
      basis_[static_cast<size_t>(i)] = n_ + i;
      state_[static_cast<size_t>(n_ + i)] = VarState::kBasic;
      x_(n_ + i) = std::abs(r(i));
    }
  }

  Eigen::VectorXd column(Eigen::Index j) const {
    if (j < n_) return lp_.eq_lhs.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
    e(j - n_) = art_sign_(j - n_);
    return e;
  }

  double cost_at_point() const { return cost_.dot(x_); }

  void recompute_basics() {
    Eigen::VectorXd rhs = lp_.eq_rhs;
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (state_[static_cast<size_t>(j)] != VarState::kBasic && x_(j) != 0.0)
        rhs -= lp_.eq_lhs.col(j) * x_(j);
    }
    const Eigen::VectorXd xb = binv_ * rhs;
    for (Eigen::Index i = 0; i < m_; ++i) x_(basis_[static_cast<size_t>(i)]) = xb(i);
  }

  void refactorize() {
    Eigen::MatrixXd b(m_, m_);
    for (Eigen::Index i = 0; i < m_; ++i) b.col(i) = column(basis_[static_cast<size_t>(i)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
    if (!lu.isInvertible()) {
      failed_ = true;
      return;
    }
    binv_ = lu.inverse();
    recompute_basics();
  }

  // Returns kOptimal when no improving nonbasic variable remains.
  LpStatus iterate() {
    const Eigen::Index total = n_ + m_;
    const long bland_after = 5 * std::max<long>(total, 1);
    const long max_iters =
        opts_.max_iter_factor * std::max<long>(total, 10) + 1000;

    recompute_basics();
    for (long iter = 0;; ++iter) {
      if (iter > max_iters) return LpStatus::kError;
      ++iterations_;
      const bool bland = iter >= bland_after;

      // Pricing.
      Eigen::VectorXd cb(m_);
      for (Eigen::Index i = 0; i < m_; ++i) cb(i) = cost_(basis_[static_cast<size_t>(i)]);
      const Eigen::VectorXd y = binv_.transpose() * cb;

      Eigen::Index enter = -1;
      int dir = 0;
      double best = price_tol_;
      for (Eigen::Index j = 0; j < total; ++j) {
        const VarState st = state_[static_cast<size_t>(j)];
        if (st == VarState::kBasic) continue;
        if (lo_(j) == up_(j)) continue;
        double d = cost_(j);
        if (j < n_) {
          d -= lp_.eq_lhs.col(j).dot(y);
        } else {
          d -= art_sign_(j - n_) * y(j - n_);
        }
        int cand_dir = 0;
        if ((st == VarState::kAtLower || st == VarState::kFree) && d < -price_tol_)
          cand_dir = +1;
        else if ((st == VarState::kAtUpper || st == VarState::kFree) && d > price_tol_)
          cand_dir = -1;
        if (cand_dir == 0) continue;
        if (bland) {
          enter = j;
          dir = cand_dir;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          enter = j;
          dir = cand_dir;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;

      const Eigen::VectorXd w = binv_ * column(enter);

      // Ratio test: entering moves by t >= 0 in direction dir.
      double t_best = (lo_(enter) > -kInf && up_(enter) < kInf)
                          ? up_(enter) - lo_(enter)
                          : kInf;
      Eigen::Index leave = -1;
      double leave_delta = 0.0;
      for (Eigen::Index i = 0; i < m_; ++i) {
        const double delta = -dir * w(i);
        if (std::abs(delta) <= kPivotTol) continue;
        const Eigen::Index bi = basis_[static_cast<size_t>(i)];
        double t;
        if (delta > 0.0) {
          if (up_(bi) >= kInf) continue;
          t = (up_(bi) - x_(bi)) / delta;
        } else {
          if (lo_(bi) <= -kInf) continue;
          t = (x_(bi) - lo_(bi)) / (-delta);
        }
        if (t < 0.0) t = 0.0;
        if (t < t_best - kRatioTieTol) {
          t_best = t;
          leave = i;
          leave_delta = delta;
        } else if (leave >= 0 && t <= t_best + kRatioTieTol) {
          const Eigen::Index cur = basis_[static_cast<size_t>(leave)];
          if (bland ? bi < cur : std::abs(delta) > std::abs(leave_delta)) {
            leave = i;
            leave_delta = delta;
          }
        }
      }

      if (!(t_best < kInf)) return LpStatus::kUnbounded;

      if (leave < 0) {
        // Bound flip: the entering variable runs to its opposite bound.
        x_(enter) = (dir > 0) ? up_(enter) : lo_(enter);
        state_[static_cast<size_t>(enter)] =
            (dir > 0) ? VarState::kAtUpper : VarState::kAtLower;
        recompute_basics();
        continue;
      }

      // Pivot.
      const Eigen::Index out = basis_[static_cast<size_t>(leave)];
      x_(enter) += dir * t_best;
      x_(out) = (leave_delta > 0.0) ? up_(out) : lo_(out);
      state_[static_cast<size_t>(out)] =
          (leave_delta > 0.0) ? VarState::kAtUpper : VarState::kAtLower;
      state_[static_cast<size_t>(enter)] = VarState::kBasic;
      basis_[static_cast<size_t>(leave)] = enter;

      const double piv = w(leave);
      binv_.row(leave) /= piv;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (i == leave) continue;
        binv_.row(i) -= w(i) * binv_.row(leave);
      }
      if (++pivots_ % opts_.refactor_period == 0) {
        refactorize();
        if (failed_) return LpStatus::kError;
      } else {
        recompute_basics();
      }
    }
  }

  // Pivots zero-valued basic artificials out of the basis where possible.
  void drive_out_artificials() {
    for (Eigen::Index i = 0; i < m_ && !failed_; ++i) {
      if (basis_[static_cast<size_t>(i)] < n_) continue;
      Eigen::Index enter = -1;
      double best = 0.0;
      Eigen::VectorXd row = binv_.row(i);
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (state_[static_cast<size_t>(j)] == VarState::kBasic) continue;
        if (lo_(j) == up_(j)) continue;
        const double a = row.dot(lp_.eq_lhs.col(j));
        if (std::abs(a) > std::max(best, 1e-7)) {
          best = std::abs(a);
          enter = j;
        }
      }
      if (enter < 0) continue;  // redundant row; artificial stays pinned

      const Eigen::VectorXd w = binv_ * column(enter);
      const Eigen::Index out = basis_[static_cast<size_t>(i)];
      state_[static_cast<size_t>(out)] = VarState::kAtLower;
      x_(out) = 0.0;
      state_[static_cast<size_t>(enter)] = VarState::kBasic;
      basis_[static_cast<size_t>(i)] = enter;
      const double piv = w(i);
      if (std::abs(piv) < 1e-12) {
        failed_ = true;
        return;
      }
      binv_.row(i) /= piv;
      for (Eigen::Index k = 0; k < m_; ++k) {
        if (k == i) continue;
        binv_.row(k) -= w(k) * binv_.row(i);
      }
      recompute_basics();
    }
  }

  // Residual of the equality rows at the current point, artificials included.
  Eigen::VectorXd row_residual() const {
    Eigen::VectorXd res = lp_.eq_rhs;
    if (n_ > 0) res -= lp_.eq_lhs * x_.head(n_);
    for (Eigen::Index a = 0; a < m_; ++a) res(a) -= art_sign_(a) * x_(n_ + a);
    return res;
  }

  LpSolution finish(LpStatus status) {
    LpSolution sol;
    sol.iterations = static_cast<int>(iterations_);
    if (status != LpStatus::kOptimal) {
      sol.status = status;
      return sol;
    }
    sol.status = status;

    // The product-form inverse drifts over long pivot runs. Rebuild the basis
    // factorization, then polish the basic values with two refinement passes
    // so the audit below measures the basis, not the pivot history.
    if (m_ > 0) {
      refactorize();
      if (failed_) {
        sol.status = LpStatus::kError;
        return sol;
      }
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd dx = binv_ * row_residual();
        for (Eigen::Index i = 0; i < m_; ++i)
          x_(basis_[static_cast<size_t>(i)]) += dx(i);
      }
    }

    // Clamp roundoff at the bounds, then audit feasibility. Refinement can
    // nudge a basic variable past its bound by a roundoff-sized amount; the
    // clamp repairs that, so the audits only reject basis-level failures.
    Eigen::VectorXd xs = x_.head(n_);
    for (Eigen::Index j = 0; j < n_; ++j)
      xs(j) = std::min(std::max(xs(j), lp_.lower(j)), lp_.upper(j));
    const double slack =
        100.0 * opts_.tol_feas * (1.0 + lp_.eq_rhs.lpNorm<1>());
    if (m_ > 0 && (lp_.eq_lhs * xs - lp_.eq_rhs).lpNorm<Eigen::Infinity>() > slack) {
      sol.status = LpStatus::kError;
      return sol;
    }
    for (Eigen::Index j = 0; j < n_; ++j) {
      const double bslack =
          100.0 * opts_.tol_feas * (1.0 + std::abs(x_(j)));
      if (x_(j) < lp_.lower(j) - bslack || x_(j) > lp_.upper(j) + bslack) {
        sol.status = LpStatus::kError;
        return sol;
      }
    }
    sol.point = xs;
    sol.objective_value = lp_.objective.dot(xs);
    return sol;
  }

  const LinearProgram& lp_;
  const LpOptions& opts_;
  Eigen::Index n_;
  Eigen::Index m_;

  Eigen::VectorXd lo_, up_, x_, cost_, art_sign_;
  std::vector<Eigen::Index> basis_;
  std::vector<VarState> state_;
  Eigen::MatrixXd binv_;
  double price_tol_{0.0};
  long pivots_{0};
  long iterations_{0};
  bool failed_{false};
};

}  // namespace

LpSolver::LpSolver(LpOptions options) : options_(options) {}

LpSolution LpSolver::solve(const LinearProgram& lp) {
  // Row equilibration keeps the feasibility tolerances meaningful when rows
  // arrive at wildly different magnitudes. Only the constraint rows scale;
  // the variable space and objective are untouched, so the returned point
  // and objective value need no mapping back.
  if (lp.num_rows() > 0 && lp.eq_lhs.cols() == lp.num_vars()) {
    bool changed = false;
    LinearProgram scaled = lp;
    for (Eigen::Index i = 0; i < scaled.eq_lhs.rows(); ++i) {
      const double m = scaled.eq_lhs.row(i).lpNorm<Eigen::Infinity>();
      if (std::isfinite(m) && m > 0.0 && (m > 16.0 || m < 1.0 / 16.0)) {
        scaled.eq_lhs.row(i) /= m;
        scaled.eq_rhs(i) /= m;
        changed = true;
      }
    }
    if (changed) {
      Simplex simplex(scaled, options_);
      return simplex.run();
    }
  }
  Simplex simplex(lp, options_);
  return simplex.run();
}

}  // namespace czdc
