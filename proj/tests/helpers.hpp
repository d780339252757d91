#pragma once

// Shared test utilities: deterministic random instance generators and the
// brute-force LP oracle used to cross-check the simplex implementation.
// Everything here is independent of the solver internals it checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "polyopt/polyopt.hpp"

namespace testutil {

using namespace polyopt;

inline Cone orthant_cone(std::size_t q) {
  std::vector<RatVector> gens;
  for (std::size_t j = 0; j < q; ++j) {
    RatVector e(q);
    e[j] = Rational(1);
    gens.push_back(std::move(e));
  }
  return Cone::from_generators(q, std::move(gens));
}

inline RatVector rv(std::initializer_list<long> xs) {
  RatVector v(xs.size());
  std::size_t i = 0;
  for (long x : xs) v[i++] = Rational(x);
  return v;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  Rational ratio(int bound, int den_bound) {
    return Rational(uniform(-bound, bound), uniform(1, den_bound));
  }
  RatVector int_vector(std::size_t dim, int bound) {
    RatVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(uniform(-bound, bound));
    return v;
  }
  RatMatrix int_matrix(std::size_t rows, std::size_t cols, int lo, int hi) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(uniform(lo, hi));
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Brute-force LP oracle by basic-solution enumeration. Sound and complete for
// pointed feasible regions (our generator adds a lower bound per variable);
// vertices come from nonsingular k-subsets of rows, improving extreme rays
// from rank-(k-1) subsets.
struct OracleResult {
  LpStatus status;
  Rational value;
};

inline void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                    std::size_t from, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, fn);
    cur.pop_back();
  }
}

inline OracleResult lp_oracle(const LinearProgram& lp) {
  const std::size_t k = lp.vars(), m = lp.G.rows();
  bool any_feasible = false;
  std::optional<Rational> best;
  std::vector<std::size_t> cur;
  auto try_vertex = [&](const std::vector<std::size_t>& rows) {
    RatMatrix g(k, k);
    RatVector h(k);
    for (std::size_t i = 0; i < k; ++i) {
      g.set_row(i, lp.G.row(rows[i]));
      h[i] = lp.h[rows[i]];
    }
    if (rank(g) != k) return;
    const auto z = solve_linear(g, h);
    if (!z) return;
    const RatVector gz = mat_vec(lp.G, *z);
    for (std::size_t i = 0; i < m; ++i)
      if (gz[i] < lp.h[i]) return;
    any_feasible = true;
    const Rational val = dot(lp.objective, *z);
    if (!best || val < *best) best = val;
  };
  if (m >= k) subsets(m, k, cur, 0, try_vertex);
  if (!any_feasible) return {LpStatus::Infeasible, Rational(0)};

  bool unbounded = false;
  auto try_ray = [&](const std::vector<std::size_t>& rows) {
    if (unbounded) return;
    RatMatrix g(k >= 1 ? k - 1 : 0, k);
    for (std::size_t i = 0; i + 1 < k; ++i) g.set_row(i, lp.G.row(rows[i]));
    const auto basis = null_space(g);
    if (basis.size() != 1) return;
    for (const RatVector& r : {basis[0], -basis[0]}) {
      const RatVector gr = mat_vec(lp.G, r);
      bool ok = true;
      for (std::size_t i = 0; i < m; ++i)
        if (gr[i].sign() < 0) { ok = false; break; }
      if (ok && dot(lp.objective, r).sign() < 0) unbounded = true;
    }
  };
  if (k == 1) {
    std::vector<std::size_t> none;
    try_ray(none);
  } else if (m >= k - 1) {
    subsets(m, k - 1, cur, 0, try_ray);
  }
  if (unbounded) return {LpStatus::Unbounded, Rational(0)};
  return {LpStatus::Optimal, *best};
}

// ---------------------------------------------------------------------------
// Instance generators. All desk scale; callers filter for feasibility.

/// Pointed random LP: a lower bound per variable plus a few general rows.
inline LinearProgram random_pointed_lp(Rng& rng) {
  const std::size_t k = rng.uniform(1, 5);
  const std::size_t extra = rng.uniform(0, 4);
  RatMatrix g(k + extra, k);
  RatVector h(k + extra);
  for (std::size_t i = 0; i < k; ++i) {
    g(i, i) = Rational(1);
    h[i] = Rational(rng.uniform(-3, 3));
  }
  for (std::size_t i = 0; i < extra; ++i) {
    for (std::size_t j = 0; j < k; ++j) g(k + i, j) = Rational(rng.uniform(-3, 3));
    h[k + i] = Rational(rng.uniform(-3, 3));
  }
  return LinearProgram::inequality_form(rng.int_vector(k, 3), std::move(g), std::move(h));
}

inline HRep random_hrep(Rng& rng) {
  const std::size_t d = rng.uniform(1, 3);
  const std::size_t rows = rng.uniform(0, 6);
  RatMatrix m = rng.int_matrix(rows, d, -4, 4);
  RatVector v = rng.int_vector(rows, 4);
  return HRep(std::move(m), std::move(v));
}

/// Random problem with a compatible cone: candidate generators violating
/// B c >= 0 are discarded so the instance encodes a genuine F(x) + C.
inline Problem random_problem(Rng& rng) {
  const std::size_t n = rng.uniform(1, 3), q = rng.uniform(1, 3);
  const std::size_t m = rng.uniform(1, 6);
  RatMatrix b_mat(m, q);
  const bool orthant = rng.uniform(0, 2) == 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < q; ++j)
      b_mat(i, j) = Rational(orthant ? rng.uniform(0, 3) : rng.uniform(-3, 3));
  RatMatrix a = rng.int_matrix(m, n, -3, 3);
  RatVector b = rng.int_vector(m, 3);
  std::vector<RatVector> gens;
  if (orthant) {
    for (std::size_t j = 0; j < q; ++j) {
      RatVector e(q);
      e[j] = Rational(1);
      gens.push_back(std::move(e));
    }
  } else {
    const HRep nonneg(b_mat, RatVector(m));
    const int want = rng.uniform(0, 3);
    for (int t = 0; t < want; ++t) {
      const RatVector c = rng.int_vector(q, 2);
      if (!c.is_zero() && nonneg.satisfies_ray(c)) gens.push_back(c);
    }
  }
  return Problem(std::move(a), std::move(b_mat), std::move(b),
                 Cone::from_generators(q, std::move(gens)));
}

inline Problem random_feasible_problem(Rng& rng) {
  for (;;) {
    Problem p = random_problem(rng);
    if (is_feasible(p)) return p;
  }
}

/// Bounded by construction: C = R^q_+ and an identity block bounding y below.
inline Problem random_bounded_problem(Rng& rng) {
  const std::size_t n = rng.uniform(1, 3), q = rng.uniform(1, 3);
  const std::size_t extra = rng.uniform(0, 3);
  const std::size_t m = q + extra;
  RatMatrix a(m, n), b_mat(m, q);
  RatVector b(m);
  for (std::size_t j = 0; j < q; ++j) {
    b_mat(j, j) = Rational(1);
    b[j] = Rational(rng.uniform(-3, 3));
  }
  for (std::size_t i = 0; i < extra; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(q + i, j) = Rational(rng.uniform(-3, 3));
    for (std::size_t j = 0; j < q; ++j) b_mat(q + i, j) = Rational(rng.uniform(0, 3));
    b[q + i] = Rational(rng.uniform(-3, 3));
  }
  std::vector<RatVector> gens;
  for (std::size_t j = 0; j < q; ++j) {
    RatVector e(q);
    e[j] = Rational(1);
    gens.push_back(std::move(e));
  }
  return Problem(std::move(a), std::move(b_mat), std::move(b),
                 Cone::from_generators(q, std::move(gens)));
}

inline Problem random_feasible_bounded_problem(Rng& rng) {
  for (;;) {
    Problem p = random_bounded_problem(rng);
    if (is_feasible(p)) return p;
  }
}

inline VlpProblem random_vlp(Rng& rng) {
  const std::size_t n = rng.uniform(1, 3), q = rng.uniform(1, 3);
  const std::size_t mrows = rng.uniform(0, 4);
  RatMatrix m = rng.int_matrix(q, n, -3, 3);
  RatMatrix a = rng.int_matrix(mrows, n, -3, 3);
  RatVector b = rng.int_vector(mrows, 3);
  std::vector<RatVector> gens;
  const int kind = rng.uniform(0, 2);
  if (kind == 0) {
    for (std::size_t j = 0; j < q; ++j) {
      RatVector e(q);
      e[j] = Rational(1);
      gens.push_back(std::move(e));
    }
  } else if (kind == 1) {
    const int want = rng.uniform(1, 3);
    for (int t = 0; t < want; ++t) {
      const RatVector c = rng.int_vector(q, 2);
      if (!c.is_zero()) gens.push_back(c);
    }
  }  // kind == 2: the zero cone
  return VlpProblem(std::move(m), std::move(a), std::move(b),
                    Cone::from_generators(q, std::move(gens)));
}

// Paper Example 1: gr F_C = {(x, y) : y1 >= -x, y2 >= x, x >= 0}, C = R^2_+.
inline Problem example1() {
  RatMatrix a{{Rational(1)}, {Rational(-1)}, {Rational(1)}};
  RatMatrix b{{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
              {Rational(0), Rational(0)}};
  return Problem(std::move(a), std::move(b), RatVector(3), orthant_cone(2));
}

// Paper Example 5: gr F_C = cone{(1,0,0), (1,2,-1), (0,1,0), (0,0,1)}, i.e.
// {y1 >= 0, y1 + 2 y2 >= 0, x >= 0, x + y2 >= 0}, C = R^2_+.
inline Problem example5() {
  RatMatrix a{{Rational(0)}, {Rational(0)}, {Rational(1)}, {Rational(1)}};
  RatMatrix b{{Rational(1), Rational(0)}, {Rational(1), Rational(2)},
              {Rational(0), Rational(0)}, {Rational(0), Rational(1)}};
  return Problem(std::move(a), std::move(b), RatVector(4), orthant_cone(2));
}

}  // namespace testutil
