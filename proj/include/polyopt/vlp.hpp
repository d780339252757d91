#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "polyopt/linalg.hpp"
#include "polyopt/polyhedron.hpp"
#include "polyopt/setopt.hpp"

namespace polyopt {

/// min_C M x  s.t.  A x >= b.
struct VlpProblem {
  RatMatrix M;  // q x n objective matrix
  RatMatrix A;  // m x n
  RatVector b;  // m
  Cone C;       // in R^q

  VlpProblem(RatMatrix m_, RatMatrix a_, RatVector b_, Cone c_)
      : M(std::move(m_)), A(std::move(a_)), b(std::move(b_)), C(std::move(c_)) {
    if (M.rows() == 0 || M.cols() == 0)
      throw std::invalid_argument("vlp: objective matrix must be nonempty");
    if (A.rows() != b.dim())
      throw std::invalid_argument("vlp: constraint row count mismatch");
    if (A.rows() && A.cols() != M.cols())
      throw std::invalid_argument("vlp: variable count mismatch between M and A");
    if (C.dim() != M.rows())
      throw std::invalid_argument("vlp: cone dimension must match objective rows");
  }

  std::size_t n() const { return M.cols(); }
  std::size_t q() const { return M.rows(); }
};

/// The set optimization embedding: F(x) = {Mx} on {Ax >= b}, so the graph of
/// F_C is {Ax >= b} ∪ {G(y - Mx) >= 0} with G the cone's inequality matrix.
/// A pair solves the embedded problem iff it solves the VLP.
inline Problem to_setopt(const VlpProblem& v) {
  const std::size_t n = v.n(), q = v.q();
  const RatMatrix& g = v.C.hrep.M;
  const std::size_t rows = v.A.rows() + g.rows();
  RatMatrix a(rows, n), b_mat(rows, q);
  RatVector rhs(rows);
  for (std::size_t i = 0; i < v.A.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v.A(i, j);
    rhs[i] = v.b[i];
  }
  // -G M x + G y >= 0
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const std::size_t at = v.A.rows() + r;
    for (std::size_t j = 0; j < n; ++j) {
      Rational s;
      for (std::size_t t = 0; t < q; ++t) s += g(r, t) * v.M(t, j);
      a(at, j) = -s;
    }
    for (std::size_t t = 0; t < q; ++t) b_mat(at, t) = g(r, t);
  }
  return Problem(std::move(a), std::move(b_mat), std::move(rhs), v.C);
}

/// Condition L(P) ∩ (-C) ⊆ C on a nonempty upper image.
inline bool condition3(const HRep& p_upper, const Cone& c) {
  if (p_upper.dim() != c.dim())
    throw std::invalid_argument("condition3: dimension mismatch");
  if (hrep_is_empty(p_upper))
    throw std::invalid_argument("condition3: upper image is empty");
  const auto basis = lineality_space(p_upper);
  const HRep span = v_to_h(VRep(p_upper.dim(), {RatVector(p_upper.dim())}, {}, basis));
  RatMatrix neg(c.hrep.rows(), c.dim());
  for (std::size_t i = 0; i < c.hrep.rows(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) neg(i, j) = -c.hrep.M(i, j);
  const HRep minus_c(std::move(neg), RatVector(c.hrep.rows()));
  const VRep meet = h_to_v(intersect(span, minus_c));
  return contains(c.hrep, meet);
}

/// Existence of a VLP solution: feasibility plus condition3 on the upper
/// image. Agrees with the full solve on the embedded problem.
inline bool cor2_exists(const VlpProblem& v) {
  const Problem p = to_setopt(v);
  if (!is_feasible(p)) return false;
  return condition3(upper_image(p).first, v.C);
}

}  // namespace polyopt
