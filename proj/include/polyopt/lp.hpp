#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyopt/linalg.hpp"
#include "polyopt/rational.hpp"

namespace polyopt {

/// min objective·z  s.t.  G z >= h,  E z = f,  z free.
struct LinearProgram {
  RatVector objective;
  RatMatrix G;
  RatVector h;
  RatMatrix E;  // zero rows when absent
  RatVector f;

  std::size_t vars() const { return objective.dim(); }

  void check() const {
    if (G.rows() != h.dim() || (G.rows() && G.cols() != vars()))
      throw std::invalid_argument("lp: inequality block dimension mismatch");
    if (E.rows() != f.dim() || (E.rows() && E.cols() != vars()))
      throw std::invalid_argument("lp: equality block dimension mismatch");
  }

  static LinearProgram inequality_form(RatVector c, RatMatrix G, RatVector h) {
    LinearProgram lp{std::move(c), std::move(G), std::move(h),
                     RatMatrix(0, 0), RatVector(0)};
    lp.E = RatMatrix(0, lp.vars());
    lp.check();
    return lp;
  }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

/// Every status carries an exact certificate:
///   Optimal    — point, value, duals with y >= 0 on inequalities,
///                y^T G + nu^T E = c, complementary slackness, y^T h + nu^T f = value.
///   Unbounded  — feasible point and ray with G ray >= 0, E ray = 0, c·ray < 0.
///   Infeasible — Farkas multipliers lambda >= 0 (inequalities), mu free
///                (equalities) with lambda^T G + mu^T E = 0, lambda^T h + mu^T f > 0.
struct LpOutcome {
  LpStatus status;
  RatVector point;
  Rational value;
  RatVector ineq_duals;
  RatVector eq_duals;
  RatVector ray;
  RatVector farkas_ineq;
  RatVector farkas_eq;
};

namespace detail {

// Dense tableau simplex over the standard form
//   min c_hat·x  s.t.  D x + I a = b_hat,  x, a >= 0,
// built from the free-variable LP via z = u - w and surplus variables.
// Bland's smallest-index rule throughout, which guarantees termination.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    lp.check();
    k_ = lp.vars();
    mi_ = lp.G.rows();
    me_ = lp.E.rows();
    n_struct_ = 2 * k_ + mi_;
    const std::size_t m = mi_ + me_;
    sigma_.assign(m, 1);
    // rows: [G | -G | -I] u,w,s = h  then  [E | -E | 0] = f
    tab_.assign(m, std::vector<Rational>(n_struct_ + m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      const bool ineq = i < mi_;
      const RatVector r = ineq ? lp.G.row(i) : lp.E.row(i - mi_);
      const Rational rhs = ineq ? lp.h[i] : lp.f[i - mi_];
      if (rhs.sign() < 0) sigma_[i] = -1;
      const Rational sg(sigma_[i]);
      for (std::size_t j = 0; j < k_; ++j) {
        tab_[i][j] = sg * r[j];
        tab_[i][k_ + j] = -sg * r[j];
      }
      if (ineq) tab_[i][2 * k_ + i] = -sg;
      tab_[i][n_struct_ + i] = Rational(1);  // artificial
      tab_[i][cols() - 1] = sg * rhs;
    }
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) basis_[i] = n_struct_ + i;
    live_row_.assign(m, true);
  }

  LpOutcome run() {
    // Phase 1: minimize the artificial sum. Artificials never re-enter the
    // basis (a zero-artificial solution reaches the optimum without them).
    std::vector<Rational> cost(cols() - 1);
    for (std::size_t j = n_struct_; j < cols() - 1; ++j) cost[j] = Rational(1);
    set_objective(cost);
    if (pivot_until_optimal())
      throw std::logic_error("simplex: phase 1 cannot be unbounded");
    if (objective_value().sign() > 0) return infeasible_outcome();
    evict_artificials();

    // Phase 2: the real objective.
    std::vector<Rational> cost2(cols() - 1);
    for (std::size_t j = 0; j < k_; ++j) {
      cost2[j] = lp_.objective[j];
      cost2[k_ + j] = -lp_.objective[j];
    }
    set_objective(cost2);
    const auto unbounded_col = pivot_until_optimal();
    if (unbounded_col) return unbounded_outcome(*unbounded_col);
    return optimal_outcome();
  }

 private:
  std::size_t cols() const { return n_struct_ + sigma_.size() + 1; }

  void set_objective(const std::vector<Rational>& cost) {
    obj_.assign(cols(), Rational(0));
    for (std::size_t j = 0; j + 1 < cols(); ++j) obj_[j] = cost[j];
    // Eliminate basic columns so obj_ holds reduced costs.
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (!live_row_[i]) continue;
      const Rational f = obj_[basis_[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!tab_[i][j].is_zero()) obj_[j] -= f * tab_[i][j];
      }
    }
  }

  Rational objective_value() const { return -obj_[cols() - 1]; }

  // Returns the entering column if the objective is unbounded, nullopt at
  // optimality.
  std::optional<std::size_t> pivot_until_optimal() {
    for (;;) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < n_struct_; ++j) {
        if (obj_[j].sign() < 0) { enter = j; break; }  // Bland: smallest index
      }
      if (enter == cols()) return std::nullopt;
      std::size_t leave = tab_.size();
      Rational best;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (!live_row_[i] || tab_[i][enter].sign() <= 0) continue;
        const Rational ratio = tab_[i][cols() - 1] / tab_[i][enter];
        if (leave == tab_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == tab_.size()) return enter;  // unbounded direction
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = tab_[row][col].reciprocal();
    for (auto& x : tab_[row]) x *= inv;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == row || !live_row_[i]) continue;
      const Rational f = tab_[i][col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!tab_[row][j].is_zero()) tab_[i][j] -= f * tab_[row][j];
      }
    }
    const Rational f = obj_[col];
    if (!f.is_zero()) {
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!tab_[row][j].is_zero()) obj_[j] -= f * tab_[row][j];
      }
    }
    basis_[row] = col;
  }

  // After a zero-value phase 1, pivot basic artificials out; rows where no
  // structural pivot exists are dependent and get dropped.
  void evict_artificials() {
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (!live_row_[i] || basis_[i] < n_struct_) continue;
      std::size_t col = n_struct_;
      for (std::size_t j = 0; j < n_struct_; ++j) {
        if (!tab_[i][j].is_zero()) { col = j; break; }
      }
      if (col < n_struct_) {
        pivot(i, col);
      } else {
        live_row_[i] = false;
      }
    }
  }

  RatVector current_point() const {
    RatVector z(k_);
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (!live_row_[i] || basis_[i] >= 2 * k_) continue;
      const Rational val = tab_[i][cols() - 1];
      if (basis_[i] < k_) {
        z[basis_[i]] += val;
      } else {
        z[basis_[i] - k_] -= val;
      }
    }
    return z;
  }

  // Duals of the original rows, recovered from the reduced costs of the
  // artificial columns: for artificial cost ca, redcost(a_i) = ca - yhat_i.
  // Rows dropped as dependent get dual zero.
  RatVector row_duals(const Rational& artificial_cost) const {
    RatVector y(sigma_.size());
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (!live_row_[i]) continue;
      const Rational yhat = artificial_cost - obj_[n_struct_ + i];
      y[i] = Rational(sigma_[i]) * yhat;
    }
    return y;
  }

  LpOutcome infeasible_outcome() const {
    const RatVector lam = row_duals(Rational(1));
    LpOutcome out;
    out.status = LpStatus::Infeasible;
    out.farkas_ineq = RatVector(mi_);
    out.farkas_eq = RatVector(me_);
    for (std::size_t i = 0; i < mi_; ++i) out.farkas_ineq[i] = lam[i];
    for (std::size_t r = 0; r < me_; ++r) out.farkas_eq[r] = lam[mi_ + r];
    return out;
  }

  LpOutcome unbounded_outcome(std::size_t enter) const {
    LpOutcome out;
    out.status = LpStatus::Unbounded;
    out.point = current_point();
    RatVector dir(k_);
    if (enter < k_) dir[enter] += Rational(1);
    else if (enter < 2 * k_) dir[enter - k_] -= Rational(1);
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (!live_row_[i] || basis_[i] >= 2 * k_) continue;
      const Rational step = -tab_[i][enter];
      if (basis_[i] < k_) dir[basis_[i]] += step;
      else dir[basis_[i] - k_] -= step;
    }
    out.ray = dir;
    return out;
  }

  LpOutcome optimal_outcome() const {
    LpOutcome out;
    out.status = LpStatus::Optimal;
    out.point = current_point();
    out.value = dot(lp_.objective, out.point);
    const RatVector y = row_duals(Rational(0));
    out.ineq_duals = RatVector(mi_);
    out.eq_duals = RatVector(me_);
    for (std::size_t i = 0; i < mi_; ++i) out.ineq_duals[i] = y[i];
    for (std::size_t r = 0; r < me_; ++r) out.eq_duals[r] = y[mi_ + r];
    return out;
  }

  const LinearProgram& lp_;
  std::size_t k_, mi_, me_, n_struct_;
  std::vector<int> sigma_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> obj_;
  std::vector<std::size_t> basis_;
  std::vector<bool> live_row_;
};

}  // namespace detail

inline LpOutcome lp_solve(const LinearProgram& lp) {
  return detail::Simplex(lp).run();
}

/// Re-verifies an outcome's certificate by direct arithmetic, independent of
/// the solver's internals.
inline bool certify(const LinearProgram& lp, const LpOutcome& out) {
  lp.check();
  const auto primal_feasible = [&](const RatVector& z) {
    if (z.dim() != lp.vars()) return false;
    const RatVector gz = mat_vec(lp.G, z);
    for (std::size_t i = 0; i < gz.dim(); ++i)
      if (gz[i] < lp.h[i]) return false;
    const RatVector ez = mat_vec(lp.E, z);
    for (std::size_t r = 0; r < ez.dim(); ++r)
      if (ez[r] != lp.f[r]) return false;
    return true;
  };
  switch (out.status) {
    case LpStatus::Optimal: {
      if (!primal_feasible(out.point)) return false;
      if (dot(lp.objective, out.point) != out.value) return false;
      if (out.ineq_duals.dim() != lp.G.rows() || out.eq_duals.dim() != lp.E.rows())
        return false;
      for (std::size_t i = 0; i < out.ineq_duals.dim(); ++i)
        if (out.ineq_duals[i].sign() < 0) return false;
      // y^T G + nu^T E = c
      RatVector lhs = vec_mat(out.ineq_duals, lp.G);
      if (lp.E.rows()) lhs += vec_mat(out.eq_duals, lp.E);
      if (lhs != lp.objective) return false;
      // complementary slackness
      const RatVector gz = mat_vec(lp.G, out.point);
      for (std::size_t i = 0; i < gz.dim(); ++i)
        if (!(out.ineq_duals[i] * (gz[i] - lp.h[i])).is_zero()) return false;
      // strong duality
      Rational dual_value = dot(out.ineq_duals, lp.h);
      if (lp.E.rows()) dual_value += dot(out.eq_duals, lp.f);
      return dual_value == out.value;
    }
    case LpStatus::Unbounded: {
      if (!primal_feasible(out.point)) return false;
      if (out.ray.dim() != lp.vars()) return false;
      const RatVector gr = mat_vec(lp.G, out.ray);
      for (std::size_t i = 0; i < gr.dim(); ++i)
        if (gr[i].sign() < 0) return false;
      const RatVector er = mat_vec(lp.E, out.ray);
      for (std::size_t r = 0; r < er.dim(); ++r)
        if (!er[r].is_zero()) return false;
      return dot(lp.objective, out.ray).sign() < 0;
    }
    case LpStatus::Infeasible: {
      if (out.farkas_ineq.dim() != lp.G.rows() || out.farkas_eq.dim() != lp.E.rows())
        return false;
      for (std::size_t i = 0; i < out.farkas_ineq.dim(); ++i)
        if (out.farkas_ineq[i].sign() < 0) return false;
      RatVector comb = vec_mat(out.farkas_ineq, lp.G);
      if (lp.E.rows()) comb += vec_mat(out.farkas_eq, lp.E);
      if (!comb.is_zero()) return false;
      Rational rhs = dot(out.farkas_ineq, lp.h);
      if (lp.E.rows()) rhs += dot(out.farkas_eq, lp.f);
      return rhs.sign() > 0;
    }
  }
  return false;
}

/// Feasibility of {z : Gz >= h, Ez = f}; returns a point when nonempty.
inline std::optional<RatVector> feasible_point(const RatMatrix& G, const RatVector& h,
                                               const RatMatrix& E, const RatVector& f) {
  LinearProgram lp{RatVector(G.cols() ? G.cols() : E.cols()), G, h, E, f};
  const LpOutcome out = lp_solve(lp);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  return out.point;
}

}  // namespace polyopt
