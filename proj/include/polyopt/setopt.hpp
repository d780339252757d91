#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyopt/linalg.hpp"
#include "polyopt/lp.hpp"
#include "polyopt/polyhedron.hpp"
#include "polyopt/rational.hpp"

namespace polyopt {

/// Set optimization data: minimize F_C(x) = F(x) + C over x, where
/// y ∈ F_C(x) ⟺ Ax + By >= b, ordered by set inclusion ⊇.
struct Problem {
  std::size_t n = 0, q = 0, m = 0;
  RatMatrix A;  // m x n
  RatMatrix B;  // m x q
  RatVector b;  // m
  Cone C;       // in R^q

  Problem() = default;
  Problem(RatMatrix a, RatMatrix bm, RatVector rhs, Cone cone)
      : n(a.cols()), q(bm.cols()), m(a.rows()),
        A(std::move(a)), B(std::move(bm)), b(std::move(rhs)), C(std::move(cone)) {
    if (B.rows() != m || b.dim() != m)
      throw std::invalid_argument("problem: row count mismatch between A, B, b");
    if (n == 0 || q == 0)
      throw std::invalid_argument("problem: n and q must be >= 1");
    if (C.dim() != q)
      throw std::invalid_argument("problem: cone dimension must match q");
  }

  /// A valid encoding of some F(x) + C has B c >= 0 for every c ∈ C; a
  /// violating instance cannot have any feasible point (so it is treated as
  /// infeasible without solving an LP).
  bool cone_compatible() const {
    const HRep nonneg(B, RatVector(m));
    for (const auto& c : C.generators)
      if (!nonneg.satisfies_ray(c)) return false;
    return true;
  }

  /// H-rep of the graph {(x,y) : Ax + By >= b} in R^{n+q}.
  HRep graph() const {
    RatMatrix m_(m, n + q);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) m_(i, j) = A(i, j);
      for (std::size_t j = 0; j < q; ++j) m_(i, n + j) = B(i, j);
    }
    return HRep(std::move(m_), b);
  }
};

/// Candidate finite infimizer: minimizing points S_bar and nonzero minimizing
/// directions S_hat.
struct SolutionPair {
  std::vector<RatVector> S_bar;
  std::vector<RatVector> S_hat;
};

enum class SolveStatus { Infeasible, NoSolution, Solution };

struct SolveResult {
  SolveStatus status;
  SolutionPair pair;           // Solution only
  HRep upper_h;                // Solution only
  VRep upper_v;                // Solution only
  RatVector no_solution_witness;  // NoSolution only: x with (0+F_C)(x) ⊋ (0+F_C)(0)
};

/// y ∈ F_C(x) ⟺ By >= b - Ax; empty iff x ∉ dom F.
inline HRep evaluate(const Problem& p, const RatVector& x) {
  if (x.dim() != p.n) throw std::invalid_argument("evaluate: dim(x) != n");
  return HRep(p.B, p.b - mat_vec(p.A, x));
}

inline bool in_domain(const Problem& p, const RatVector& x) {
  return !hrep_is_empty(evaluate(p, x));
}

inline bool is_feasible(const Problem& p) {
  if (!p.cone_compatible()) return false;
  return !hrep_is_empty(p.graph());
}

/// Same (A, B, C) with b = 0; its F_C is the recession mapping 0+F_C.
inline Problem homogeneous(const Problem& p) {
  return Problem(p.A, p.B, RatVector(p.m), p.C);
}

/// Upper image P = C + ∪_x F(x): the y-projection of the graph.
inline std::pair<HRep, VRep> upper_image(const Problem& p) {
  std::vector<std::size_t> keep(p.q);
  for (std::size_t j = 0; j < p.q; ++j) keep[j] = p.n + j;
  HRep h = project(p.graph(), keep);
  VRep v = h_to_v(h);
  return {std::move(h), std::move(v)};
}

/// From the lifted form M_x x + M_y y + M_z z >= c: eliminate z to get the
/// plain (A, B, b) graph description. k = 0 passes the data through intact.
inline Problem from_prep(const RatMatrix& mx, const RatMatrix& my, const RatMatrix& mz,
                         const RatVector& c, Cone cone) {
  const std::size_t rows = mx.rows(), n = mx.cols(), q = my.cols(), k = mz.cols();
  if (my.rows() != rows || (k && mz.rows() != rows) || c.dim() != rows)
    throw std::invalid_argument("from_prep: row count mismatch");
  if (k == 0) return Problem(mx, my, c, std::move(cone));
  RatMatrix lifted(rows, n + q + k);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) lifted(i, j) = mx(i, j);
    for (std::size_t j = 0; j < q; ++j) lifted(i, n + j) = my(i, j);
    for (std::size_t j = 0; j < k; ++j) lifted(i, n + q + j) = mz(i, j);
  }
  std::vector<std::size_t> keep(n + q);
  for (std::size_t j = 0; j < n + q; ++j) keep[j] = j;
  const HRep graph = project(HRep(std::move(lifted), c), keep);
  RatMatrix a(graph.rows(), n), b_(graph.rows(), q);
  for (std::size_t i = 0; i < graph.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = graph.M(i, j);
    for (std::size_t j = 0; j < q; ++j) b_(i, j) = graph.M(i, n + j);
  }
  return Problem(std::move(a), std::move(b_), graph.v, std::move(cone));
}

struct Boundedness {
  bool bounded = false;
  std::optional<RatVector> lower_bound;  // l with {l} + C ⊇ P, when bounded
};

/// Decides ∃l : {l} + C ⊇ P. Needs every ray of P inside C, and then a point
/// l with G l <= min over P's vertices (G the cone's inequality matrix).
inline Boundedness is_bounded(const Problem& p) {
  if (!is_feasible(p))
    throw std::invalid_argument("is_bounded: problem is infeasible");
  const VRep pv = upper_image(p).second;
  for (const auto& r : pv.rays)
    if (!p.C.contains_vector(r)) return {};
  for (const auto& l : pv.lines)
    if (!p.C.contains_vector(l) || !p.C.contains_vector(-l)) return {};
  const RatMatrix& g = p.C.hrep.M;
  if (g.rows() == 0) {
    // C = R^q: any vertex works as a lower bound.
    return {true, pv.points.front()};
  }
  RatVector best(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t k = 0; k < pv.points.size(); ++k) {
      const Rational val = dot(g.row(i), pv.points[k]);
      if (k == 0 || val < best[i]) best[i] = val;
    }
  }
  // l with G l <= best, i.e. -G l >= -best.
  RatMatrix neg(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) neg(i, j) = -g(i, j);
  const auto l = feasible_point(neg, -best, RatMatrix(0, g.cols()), RatVector(0));
  if (!l) return {};
  return {true, *l};
}

/// LP(ybar): variables (x, y^1..y^m), objective Σ_i B_i y^i, constraints
/// Ax + By^i >= b for each i plus Ax + B ybar >= b; m(m+1) rows total.
inline LinearProgram build_lp(const Problem& p, const RatVector& ybar) {
  if (ybar.dim() != p.q) throw std::invalid_argument("build_lp: dim(ybar) != q");
  const std::size_t vars = p.n + p.m * p.q;
  RatVector c(vars);
  for (std::size_t i = 0; i < p.m; ++i)
    for (std::size_t j = 0; j < p.q; ++j) c[p.n + i * p.q + j] = p.B(i, j);
  RatMatrix g(p.m * (p.m + 1), vars);
  RatVector h(p.m * (p.m + 1));
  std::size_t row = 0;
  for (std::size_t blk = 0; blk < p.m; ++blk) {
    for (std::size_t i = 0; i < p.m; ++i, ++row) {
      for (std::size_t j = 0; j < p.n; ++j) g(row, j) = p.A(i, j);
      for (std::size_t j = 0; j < p.q; ++j) g(row, p.n + blk * p.q + j) = p.B(i, j);
      h[row] = p.b[i];
    }
  }
  const RatVector by = mat_vec(p.B, ybar);
  for (std::size_t i = 0; i < p.m; ++i, ++row) {
    for (std::size_t j = 0; j < p.n; ++j) g(row, j) = p.A(i, j);
    h[row] = p.b[i] - by[i];
  }
  return LinearProgram::inequality_form(std::move(c), std::move(g), std::move(h));
}

namespace detail {

// Variables of the containment system: (x, lambda_1..lambda_m, y) where
// lambda_i ∈ R^m. F_C(x) ⊇ F_C(xbar) is expressed row by row through LP
// duality: lambda_i >= 0, lambda_i^T B = B_i, lambda_i^T (b - A xbar) >= b_i - A_i x.
// The trailing y block ranges over F_C(x) to probe strictness.
struct ContainmentSystem {
  LinearProgram lp;  // objective unset; G/h and E/f filled
  std::size_t n, m, q;

  std::size_t x_at(std::size_t j) const { return j; }
  std::size_t lambda_at(std::size_t i, std::size_t r) const { return n + i * m + r; }
  std::size_t y_at(std::size_t j) const { return n + m * m + j; }
};

inline ContainmentSystem containment_system(const Problem& p, const RatVector& xbar) {
  const std::size_t n = p.n, m = p.m, q = p.q;
  const std::size_t vars = n + m * m + q;
  const RatVector rhs_bar = p.b - mat_vec(p.A, xbar);  // b - A xbar

  // Inequalities: lambda >= 0 (m*m), the m coupling rows, and Ax + By >= b.
  RatMatrix g(m * m + m + m, vars);
  RatVector h(m * m + m + m);
  std::size_t row = 0;
  ContainmentSystem cs{{}, n, m, q};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < m; ++r, ++row) g(row, cs.lambda_at(i, r)) = Rational(1);
  for (std::size_t i = 0; i < m; ++i, ++row) {
    // lambda_i^T (b - A xbar) + A_i x >= b_i
    for (std::size_t r = 0; r < m; ++r) g(row, cs.lambda_at(i, r)) = rhs_bar[r];
    for (std::size_t j = 0; j < n; ++j) g(row, cs.x_at(j)) = p.A(i, j);
    h[row] = p.b[i];
  }
  for (std::size_t i = 0; i < m; ++i, ++row) {
    for (std::size_t j = 0; j < n; ++j) g(row, cs.x_at(j)) = p.A(i, j);
    for (std::size_t j = 0; j < q; ++j) g(row, cs.y_at(j)) = p.B(i, j);
    h[row] = p.b[i];
  }
  // Equalities: lambda_i^T B = B_i for each row i.
  RatMatrix e(m * q, vars);
  RatVector f(m * q);
  row = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < q; ++j, ++row) {
      for (std::size_t r = 0; r < m; ++r) e(row, cs.lambda_at(i, r)) = p.B(r, j);
      f[row] = p.B(i, j);
    }
  }
  cs.lp = LinearProgram{RatVector(vars), std::move(g), std::move(h), std::move(e), std::move(f)};
  return cs;
}

}  // namespace detail

/// Witness that xbar is not minimal: a dominating point x with
/// F_C(x) ⊋ F_C(xbar), plus the graph row whose bound strictly improves.
struct DominationWitness {
  RatVector x;
  std::size_t strict_row = 0;
};

/// Searches for x with F_C(x) ⊋ F_C(xbar) through the Farkas encoding of
/// containment; strictness is probed by minimizing each graph row's value of
/// B_j y over y ∈ F_C(x) jointly with the containment constraints.
inline std::optional<DominationWitness> find_dominator(const Problem& p,
                                                       const RatVector& xbar) {
  if (xbar.dim() != p.n)
    throw std::invalid_argument("find_dominator: dim(xbar) != n");
  if (!in_domain(p, xbar))
    throw std::invalid_argument("find_dominator: xbar is not in dom F");
  auto cs = detail::containment_system(p, xbar);
  const RatVector a_xbar = mat_vec(p.A, xbar);
  for (std::size_t j = 0; j < p.m; ++j) {
    RatVector c(cs.lp.vars());
    for (std::size_t t = 0; t < p.q; ++t) c[cs.y_at(t)] = p.B(j, t);
    cs.lp.objective = c;
    const LpOutcome out = lp_solve(cs.lp);
    if (out.status == LpStatus::Infeasible)
      throw std::logic_error("find_dominator: containment system must be feasible");
    const Rational bound = p.b[j] - a_xbar[j];
    if (out.status == LpStatus::Optimal) {
      if (out.value >= bound) continue;
      DominationWitness w;
      w.strict_row = j;
      w.x = RatVector(p.n);
      for (std::size_t t = 0; t < p.n; ++t) w.x[t] = out.point[cs.x_at(t)];
      return w;
    }
    // Unbounded: walk far enough along the ray to break the bound.
    const Rational at_point = dot(cs.lp.objective, out.point);
    const Rational rate = dot(cs.lp.objective, out.ray);
    if (rate.sign() >= 0)
      throw std::logic_error("find_dominator: unbounded ray without negative rate");
    Rational step(1);
    const Rational gap = at_point - bound;
    if (gap.sign() > 0) step = gap / (-rate) + Rational(1);
    DominationWitness w;
    w.strict_row = j;
    w.x = RatVector(p.n);
    for (std::size_t t = 0; t < p.n; ++t)
      w.x[t] = out.point[cs.x_at(t)] + step * out.ray[cs.x_at(t)];
    return w;
  }
  return std::nullopt;
}

/// xbar minimizes (P): no x has F_C(x) ⊋ F_C(xbar). Requires xbar ∈ dom F.
inline bool is_minimizing_point(const Problem& p, const RatVector& xbar) {
  return !find_dominator(p, xbar).has_value();
}

/// Nonzero xhat ∈ dom 0+F minimizing the homogeneous problem.
inline bool is_minimizing_direction(const Problem& p, const RatVector& xhat) {
  if (xhat.dim() != p.n)
    throw std::invalid_argument("is_minimizing_direction: dim(xhat) != n");
  if (xhat.is_zero())
    throw std::invalid_argument("is_minimizing_direction: direction must be nonzero");
  const Problem hom = homogeneous(p);
  if (!in_domain(hom, xhat))
    throw std::invalid_argument("is_minimizing_direction: xhat is not in dom 0+F");
  return is_minimizing_point(hom, xhat);
}

/// The six equivalent conditions of the existence criterion, each evaluated
/// by its own route. They must agree on every feasible problem.
struct Prop4 {
  bool exists_covered_minimizer = false;   // (i)
  bool all_vertices_covered = false;       // (ii)
  bool lp_optimal_somewhere = false;       // (iii)
  bool lp_optimal_everywhere = false;      // (iv)
  bool lp_hom_optimal = false;             // (v)
  bool zero_minimizes_homogeneous = false; // (vi)

  bool all_true() const {
    return exists_covered_minimizer && all_vertices_covered && lp_optimal_somewhere &&
           lp_optimal_everywhere && lp_hom_optimal && zero_minimizes_homogeneous;
  }
  bool all_false() const {
    return !(exists_covered_minimizer || all_vertices_covered || lp_optimal_somewhere ||
             lp_optimal_everywhere || lp_hom_optimal || zero_minimizes_homogeneous);
  }
  bool consistent() const { return all_true() || all_false(); }
};

namespace detail {

inline RatVector x_component(const Problem& p, const RatVector& lp_point) {
  RatVector x(p.n);
  for (std::size_t j = 0; j < p.n; ++j) x[j] = lp_point[j];
  return x;
}

inline Prop4 prop4_with(const Problem& p, const VRep& upper) {
  Prop4 r;
  if (upper.empty()) throw std::logic_error("prop4: feasible problem with empty upper image");
  std::vector<bool> optimal;
  std::vector<bool> covered;
  for (const auto& ybar : upper.points) {
    const LpOutcome out = lp_solve(build_lp(p, ybar));
    const bool opt = out.status == LpStatus::Optimal;
    optimal.push_back(opt);
    // By the optimal-extraction argument the x part is a minimizer; coverage
    // ybar ∈ F_C(xbar) is re-checked directly.
    covered.push_back(opt &&
                      evaluate(p, x_component(p, out.point)).satisfies_point(ybar));
  }
  r.lp_optimal_somewhere = optimal.front();
  r.lp_optimal_everywhere =
      std::all_of(optimal.begin(), optimal.end(), [](bool x) { return x; });
  r.exists_covered_minimizer = covered.front();
  r.all_vertices_covered =
      std::all_of(covered.begin(), covered.end(), [](bool x) { return x; });
  const Problem hom = homogeneous(p);
  r.lp_hom_optimal = lp_solve(build_lp(hom, RatVector(p.q))).status == LpStatus::Optimal;
  r.zero_minimizes_homogeneous = is_minimizing_point(hom, RatVector(p.n));
  return r;
}

}  // namespace detail

inline Prop4 prop4(const Problem& p) {
  if (!is_feasible(p)) throw std::invalid_argument("prop4: problem is infeasible");
  return detail::prop4_with(p, upper_image(p).second);
}

/// Overload for callers that already hold the upper image generators.
inline Prop4 prop4(const Problem& p, const VRep& upper) {
  return detail::prop4_with(p, upper);
}

/// Confirms a NoSolution witness: x ∈ dom 0+F with (0+F_C)(x) ⊋ (0+F_C)(0),
/// i.e. Ax >= 0 and some graph row's B_j y drops below 0 on {y : By >= -Ax}.
inline bool confirm_no_solution_witness(const Problem& p, const RatVector& x) {
  if (x.dim() != p.n) return false;
  const RatVector ax = mat_vec(p.A, x);
  for (std::size_t i = 0; i < p.m; ++i)
    if (ax[i].sign() < 0) return false;
  for (std::size_t j = 0; j < p.m; ++j) {
    const LpOutcome out =
        lp_solve(LinearProgram::inequality_form(p.B.row(j), p.B, -ax));
    if (out.status == LpStatus::Unbounded) return true;
    if (out.status == LpStatus::Optimal && out.value.sign() < 0) return true;
  }
  return false;
}

/// Existence test plus solution construction: V-rep the upper image, then one
/// LP per vertex (minimizing points) and one homogeneous LP per ray
/// (minimizing directions, zero extractions dropped).
inline SolveResult solve(const Problem& p) {
  SolveResult res;
  if (!is_feasible(p)) {
    res.status = SolveStatus::Infeasible;
    return res;
  }
  auto [uh, uv] = upper_image(p);
  const Prop4 flags = detail::prop4_with(p, uv);
  if (!flags.consistent())
    throw std::logic_error("solve: the six equivalent conditions disagree");
  const Problem hom = homogeneous(p);
  if (flags.all_false()) {
    const LpOutcome out = lp_solve(build_lp(hom, RatVector(p.q)));
    if (out.status != LpStatus::Unbounded)
      throw std::logic_error("solve: homogeneous LP must be unbounded without a solution");
    res.status = SolveStatus::NoSolution;
    res.no_solution_witness = detail::x_component(p, primitive(out.ray));
    if (!confirm_no_solution_witness(p, res.no_solution_witness))
      throw std::logic_error("solve: extracted witness failed its containment check");
    return res;
  }
  res.status = SolveStatus::Solution;
  for (const auto& ybar : uv.points) {
    const LpOutcome out = lp_solve(build_lp(p, ybar));
    if (out.status != LpStatus::Optimal)
      throw std::logic_error("solve: vertex LP lost optimality");
    res.pair.S_bar.push_back(detail::x_component(p, out.point));
  }
  std::vector<RatVector> ray_targets = uv.rays;
  for (const auto& l : uv.lines) {
    ray_targets.push_back(l);
    ray_targets.push_back(-l);
  }
  for (const auto& yhat : ray_targets) {
    const LpOutcome out = lp_solve(build_lp(hom, yhat));
    if (out.status != LpStatus::Optimal)
      throw std::logic_error("solve: ray LP lost optimality");
    RatVector xhat = detail::x_component(p, out.point);
    if (!xhat.is_zero()) res.pair.S_hat.push_back(primitive(xhat));
  }
  sort_unique(res.pair.S_bar);
  sort_unique(res.pair.S_hat);
  res.upper_h = std::move(uh);
  res.upper_v = std::move(uv);
  return res;
}

/// Independent checks of a claimed solution; failures are entries, not errors.
struct VerifyReport {
  bool infimum_attained = false;   // P = C + conv ∪ F(x) + cone ∪ (0+F)(x)
  bool points_minimal = false;
  bool directions_minimal = false;
  std::vector<std::string> notes;

  bool pass() const { return infimum_attained && points_minimal && directions_minimal; }
};

inline VerifyReport verify(const Problem& p, const SolutionPair& pair) {
  VerifyReport rep;

  // (a) infimum attainment as exact polyhedral equality.
  try {
    if (pair.S_bar.empty()) throw std::invalid_argument("S_bar is empty");
    std::vector<VRep> parts;
    for (const auto& x : pair.S_bar) {
      VRep val = h_to_v(evaluate(p, x));
      if (val.empty()) throw std::invalid_argument("a point of S_bar is outside dom F");
      parts.push_back(std::move(val));
    }
    std::vector<RatVector> cone_gens;
    const Problem hom = homogeneous(p);
    for (const auto& xhat : pair.S_hat) {
      const VRep val = h_to_v(evaluate(hom, xhat));
      if (val.empty()) throw std::invalid_argument("a direction of S_hat is outside dom 0+F");
      for (const auto& pt : val.points)
        if (!pt.is_zero()) cone_gens.push_back(pt);
      for (const auto& r : val.rays) cone_gens.push_back(r);
      for (const auto& l : val.lines) {
        cone_gens.push_back(l);
        cone_gens.push_back(-l);
      }
    }
    const VRep rhs = minkowski_and_hulls(parts, cone_gens);
    const auto [ph, pv] = upper_image(p);
    rep.infimum_attained = contains(ph, rhs) && contains(v_to_h(rhs), pv);
    if (!rep.infimum_attained)
      rep.notes.push_back("infimum not attained: hull of the pair differs from the upper image");
  } catch (const std::exception& e) {
    rep.infimum_attained = false;
    rep.notes.push_back(std::string("infimum check: ") + e.what());
  }

  // (b) every S_bar element is a minimizing point.
  rep.points_minimal = true;
  for (std::size_t i = 0; i < pair.S_bar.size(); ++i) {
    try {
      if (!is_minimizing_point(p, pair.S_bar[i])) {
        rep.points_minimal = false;
        rep.notes.push_back("S_bar[" + std::to_string(i) + "] is not a minimizing point");
      }
    } catch (const std::exception& e) {
      rep.points_minimal = false;
      rep.notes.push_back("S_bar[" + std::to_string(i) + "]: " + e.what());
    }
  }
  if (pair.S_bar.empty()) {
    rep.points_minimal = false;
    rep.notes.push_back("S_bar must be nonempty");
  }

  // (c) every S_hat element is a minimizing direction.
  rep.directions_minimal = true;
  for (std::size_t i = 0; i < pair.S_hat.size(); ++i) {
    try {
      if (!is_minimizing_direction(p, pair.S_hat[i])) {
        rep.directions_minimal = false;
        rep.notes.push_back("S_hat[" + std::to_string(i) + "] is not a minimizing direction");
      }
    } catch (const std::exception& e) {
      rep.directions_minimal = false;
      rep.notes.push_back("S_hat[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return rep;
}

}  // namespace polyopt
