#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "polyopt/rational.hpp"

namespace polyopt {

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : e_(dim) {}
  RatVector(std::initializer_list<Rational> xs) : e_(xs) {}
  explicit RatVector(std::vector<Rational> xs) : e_(std::move(xs)) {}

  std::size_t dim() const { return e_.size(); }
  const Rational& operator[](std::size_t i) const { return e_.at(i); }
  Rational& operator[](std::size_t i) { return e_.at(i); }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(),
                       [](const Rational& x) { return x.is_zero(); });
  }

  friend bool operator==(const RatVector&, const RatVector&) = default;

  /// Lexicographic order on entries; dimension breaks ties first.
  friend bool operator<(const RatVector& a, const RatVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

  RatVector& operator+=(const RatVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < dim(); ++i) e_[i] += o[i];
    return *this;
  }
  RatVector& operator-=(const RatVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < dim(); ++i) e_[i] -= o[i];
    return *this;
  }
  RatVector& operator*=(const Rational& s) {
    for (auto& x : e_) x *= s;
    return *this;
  }
  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& s, RatVector v) { return v *= s; }
  RatVector operator-() const {
    RatVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = -e_[i];
    return r;
  }

  friend Rational dot(const RatVector& a, const RatVector& b) {
    a.check_dim(b);
    Rational s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim(); ++i) os << (i ? ", " : "") << e_[i];
    os << ')';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const RatVector& v) {
    return os << v.str();
  }

 private:
  void check_dim(const RatVector& o) const {
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
  }
  std::vector<Rational> e_;
};

/// Dense matrix of rationals; dimensions are fixed at construction.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      e_.insert(e_.end(), r.begin(), r.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const {
    return e_.at(i * cols_ + j);
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return e_.at(i * cols_ + j);
  }

  RatVector row(std::size_t i) const {
    RatVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  RatVector col(std::size_t j) const {
    RatVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(std::size_t i, const RatVector& r) {
    if (r.dim() != cols_) throw std::invalid_argument("row dimension mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.dim())
    throw std::invalid_argument("mat_vec dimension mismatch");
  RatVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline RatVector vec_mat(const RatVector& v, const RatMatrix& m) {
  if (m.rows() != v.dim())
    throw std::invalid_argument("vec_mat dimension mismatch");
  RatVector r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s;
    for (std::size_t i = 0; i < m.rows(); ++i) s += v[i] * m(i, j);
    r[j] = s;
  }
  return r;
}

/// In-place Gauss-Jordan to reduced row echelon form. Returns the pivot
/// columns (their count is the rank).
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Rational inv = m(r, c).reciprocal();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

/// Basis of {x : Mx = 0}, canonical via RREF free-variable parametrization.
inline std::vector<RatVector> null_space(RatMatrix m) {
  const std::size_t n = m.cols();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    RatVector v(n);
    v[fc] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves Mx = b exactly; empty result if the system is inconsistent.
/// With multiple solutions, free variables are set to zero.
inline std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
  if (m.rows() != b.dim())
    throw std::invalid_argument("solve_linear dimension mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

/// Scales to the unique integer vector with coprime entries and the same
/// orientation (positive multiplier only); the zero vector is unchanged.
/// Safe for rays and directions, where a sign flip would change the object.
inline RatVector primitive(const RatVector& v) {
  mpz_class den_lcm(1), num_gcd(0);
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i].is_zero()) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), v[i].den().get_mpz_t());
    den_lcm = l;
  }
  RatVector scaled = Rational(den_lcm) * v;
  for (std::size_t i = 0; i < scaled.dim(); ++i) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), scaled[i].num().get_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return scaled;
  return Rational(mpz_class(1), num_gcd) * scaled;
}

/// primitive() plus a sign flip making the first nonzero entry positive.
/// Only valid for objects invariant under negation (lines, equality rows).
inline RatVector primitive_signed(const RatVector& v) {
  RatVector p = primitive(v);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i].is_zero()) continue;
    if (p[i].sign() < 0) return -p;
    break;
  }
  return p;
}

inline void sort_unique(std::vector<RatVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace polyopt
