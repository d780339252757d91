#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyopt/linalg.hpp"
#include "polyopt/lp.hpp"
#include "polyopt/rational.hpp"

namespace polyopt {

/// Inequality form {z : Mz >= v}. Zero rows are legal (R^d needs none) and
/// the empty polyhedron is representable by an infeasible system.
struct HRep {
  RatMatrix M;
  RatVector v;

  HRep() = default;
  HRep(RatMatrix m, RatVector rhs) : M(std::move(m)), v(std::move(rhs)) {
    if (M.rows() != v.dim()) throw std::invalid_argument("hrep: row count mismatch");
    if (M.cols() == 0) throw std::invalid_argument("hrep: ambient dimension must be >= 1");
  }

  std::size_t dim() const { return M.cols(); }
  std::size_t rows() const { return M.rows(); }

  static HRep full_space(std::size_t d) { return HRep(RatMatrix(0, d), RatVector(0)); }

  /// Canonical infeasible system: 0 >= 1.
  static HRep empty_set(std::size_t d) {
    HRep h(RatMatrix(1, d), RatVector(1));
    h.v[0] = Rational(1);
    return h;
  }

  bool satisfies_point(const RatVector& p) const {
    const RatVector mp = mat_vec(M, p);
    for (std::size_t i = 0; i < rows(); ++i)
      if (mp[i] < v[i]) return false;
    return true;
  }
  bool satisfies_ray(const RatVector& r) const {
    const RatVector mr = mat_vec(M, r);
    for (std::size_t i = 0; i < rows(); ++i)
      if (mr[i].sign() < 0) return false;
    return true;
  }
  bool satisfies_line(const RatVector& l) const {
    return mat_vec(M, l).is_zero();
  }

  /// Rows scaled to primitive integers, trivially-true rows dropped, sorted,
  /// deduplicated. An explicit contradiction collapses to the canonical
  /// infeasible form. No LP is run; semantic redundancy is left alone.
  HRep canonicalized() const {
    std::vector<RatVector> rows_;
    for (std::size_t i = 0; i < rows(); ++i) {
      RatVector full(dim() + 1);
      for (std::size_t j = 0; j < dim(); ++j) full[j] = M(i, j);
      full[dim()] = v[i];
      full = primitive(full);
      bool zero_lhs = true;
      for (std::size_t j = 0; j < dim(); ++j)
        if (!full[j].is_zero()) { zero_lhs = false; break; }
      if (zero_lhs) {
        if (full[dim()].sign() > 0) return empty_set(dim());
        continue;
      }
      rows_.push_back(std::move(full));
    }
    sort_unique(rows_);
    RatMatrix m(rows_.size(), dim());
    RatVector rhs(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) m(i, j) = rows_[i][j];
      rhs[i] = rows_[i][dim()];
    }
    return HRep(std::move(m), std::move(rhs));
  }

  friend bool operator==(const HRep&, const HRep&) = default;
};

/// Generator form conv(points) + cone(rays) + span(lines).
/// The represented set is empty iff points is empty.
struct VRep {
  std::size_t dim_ = 1;
  std::vector<RatVector> points, rays, lines;

  VRep() = default;
  explicit VRep(std::size_t d) : dim_(d) {
    if (d == 0) throw std::invalid_argument("vrep: ambient dimension must be >= 1");
  }
  VRep(std::size_t d, std::vector<RatVector> pts, std::vector<RatVector> rys = {},
       std::vector<RatVector> lns = {})
      : dim_(d), points(std::move(pts)), rays(std::move(rys)), lines(std::move(lns)) {
    validate();
  }

  std::size_t dim() const { return dim_; }
  bool empty() const { return points.empty(); }

  static VRep empty_set(std::size_t d) { return VRep(d); }

  void validate() const {
    if (points.empty() && !(rays.empty() && lines.empty()))
      throw std::invalid_argument("vrep: rays or lines without a point");
    for (const auto& p : points)
      if (p.dim() != dim_) throw std::invalid_argument("vrep: point dimension mismatch");
    for (const auto& r : rays) {
      if (r.dim() != dim_) throw std::invalid_argument("vrep: ray dimension mismatch");
      if (r.is_zero()) throw std::invalid_argument("vrep: zero ray");
    }
    for (const auto& l : lines) {
      if (l.dim() != dim_) throw std::invalid_argument("vrep: line dimension mismatch");
      if (l.is_zero()) throw std::invalid_argument("vrep: zero line");
    }
  }

  /// Points sorted, rays scaled to primitive integers (orientation kept),
  /// lines replaced by the canonical reduced basis of their span.
  VRep canonicalized() const {
    VRep out(dim_);
    out.points = points;
    sort_unique(out.points);
    for (const auto& r : rays) out.rays.push_back(primitive(r));
    sort_unique(out.rays);
    if (!lines.empty()) {
      RatMatrix lm(lines.size(), dim_);
      for (std::size_t i = 0; i < lines.size(); ++i) lm.set_row(i, lines[i]);
      rref(lm);
      for (std::size_t i = 0; i < lm.rows(); ++i) {
        RatVector row = lm.row(i);
        if (!row.is_zero()) out.lines.push_back(primitive_signed(row));
      }
      sort_unique(out.lines);
    }
    return out;
  }

  friend bool operator==(const VRep&, const VRep&) = default;
};

namespace detail {

struct GeneratorCone {
  std::vector<RatVector> lines;
  std::vector<RatVector> rays;
};

// Double description: minimal generators of {w : Aw >= 0}.
//
// Maintains a line basis L and extreme rays R (extreme modulo span L) for the
// cone of the rows processed so far, starting from the whole space. Rows are
// inserted in lexicographic order. When a row cuts the lineality space, one
// pivot line turns into a ray and everything else is projected parallel to it;
// otherwise the classic positive/zero/negative split applies, with adjacency
// of a positive/negative pair decided by a rank computation on their common
// tight rows.
class DoubleDescription {
 public:
  explicit DoubleDescription(const RatMatrix& a) : dim_(a.cols()) {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      RatVector r = primitive(a.row(i));
      if (!r.is_zero()) rows.push_back(std::move(r));
    }
    sort_unique(rows);
    for (std::size_t i = 0; i < dim_; ++i) {
      RatVector e(dim_);
      e[i] = Rational(1);
      lines_.push_back(std::move(e));
    }
    for (const auto& r : rows) insert(r);
  }

  GeneratorCone result() const {
    GeneratorCone g;
    g.lines = lines_;
    for (const auto& r : rays_) g.rays.push_back(r.v);
    return g;
  }

 private:
  struct Ray {
    RatVector v;
    // slack[t] is a positive multiple of (processed row t)·v; every use relies
    // on the sign/zero pattern only, which rescaling to primitive preserves.
    std::vector<Rational> slack;
  };

  void insert(const RatVector& a) {
    std::size_t pivot = lines_.size();
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (!dot(a, lines_[i]).is_zero()) { pivot = i; break; }
    }
    if (pivot < lines_.size()) {
      lift_line_to_ray(a, pivot);
    } else {
      cut_rays(a);
    }
    processed_.push_back(a);
  }

  // A line with a·l != 0 becomes a ray on the feasible side; remaining lines
  // and all rays are shifted along it into the hyperplane a·w = 0 resp. kept
  // feasible. Prior slacks are unchanged since the pivot line was in the
  // lineality space of every processed row.
  void lift_line_to_ray(const RatVector& a, std::size_t pivot) {
    RatVector l0 = lines_[pivot];
    Rational al0 = dot(a, l0);
    if (al0.sign() < 0) {
      l0 = -l0;
      al0 = -al0;
    }
    std::vector<RatVector> new_lines;
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (i == pivot) continue;
      const Rational f = dot(a, lines_[i]) / al0;
      new_lines.push_back(primitive_signed(lines_[i] - f * l0));
    }
    lines_ = std::move(new_lines);
    for (auto& r : rays_) {
      const Rational f = dot(a, r.v) / al0;
      if (!f.is_zero()) r.v = primitive(r.v - f * l0);
      r.slack.push_back(Rational(0));
    }
    Ray nr;
    nr.v = primitive(l0);
    nr.slack.assign(processed_.size(), Rational(0));
    nr.slack.push_back(dot(a, nr.v));
    rays_.push_back(std::move(nr));
  }

  void cut_rays(const RatVector& a) {
    std::vector<std::size_t> pos, neg, zero;
    std::vector<Rational> s(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      s[i] = dot(a, rays_[i].v);
      const int sg = s[i].sign();
      if (sg > 0) pos.push_back(i);
      else if (sg < 0) neg.push_back(i);
      else zero.push_back(i);
    }
    std::vector<Ray> next;
    for (auto i : pos) {
      Ray r = rays_[i];
      r.slack.push_back(s[i]);
      next.push_back(std::move(r));
    }
    for (auto i : zero) {
      Ray r = rays_[i];
      r.slack.push_back(Rational(0));
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto n : neg) {
        if (!adjacent(p, n)) continue;
        Ray nr;
        nr.v = s[p] * rays_[n].v - s[n] * rays_[p].v;
        nr.slack.resize(processed_.size() + 1);
        for (std::size_t t = 0; t < processed_.size(); ++t)
          nr.slack[t] = s[p] * rays_[n].slack[t] - s[n] * rays_[p].slack[t];
        nr.slack[processed_.size()] = Rational(0);
        rescale(nr);
        next.push_back(std::move(nr));
      }
    }
    rays_ = std::move(next);
  }

  // p and n are adjacent iff the rows tight at both span a space of rank
  // d - dim(lineality) - 2, i.e. their minimal common face has dimension
  // dim(lineality) + 2.
  bool adjacent(std::size_t p, std::size_t n) const {
    if (dim_ < lines_.size() + 2) return false;
    std::vector<std::size_t> tight;
    for (std::size_t t = 0; t < processed_.size(); ++t) {
      if (rays_[p].slack[t].is_zero() && rays_[n].slack[t].is_zero())
        tight.push_back(t);
    }
    const std::size_t want = dim_ - lines_.size() - 2;
    if (tight.size() < want) return false;
    RatMatrix sub(tight.size(), dim_);
    for (std::size_t i = 0; i < tight.size(); ++i) sub.set_row(i, processed_[tight[i]]);
    return rank(std::move(sub)) == want;
  }

  static void rescale(Ray& r) {
    Rational factor;
    const RatVector pv = primitive(r.v);
    for (std::size_t i = 0; i < pv.dim(); ++i) {
      if (!r.v[i].is_zero()) { factor = pv[i] / r.v[i]; break; }
    }
    r.v = pv;
    for (auto& s : r.slack) s *= factor;
  }

  std::size_t dim_;
  std::vector<RatVector> lines_;
  std::vector<Ray> rays_;
  std::vector<RatVector> processed_;
};

inline GeneratorCone dd_cone(const RatMatrix& a) {
  return DoubleDescription(a).result();
}

}  // namespace detail

inline bool hrep_is_empty(const HRep& h) {
  return !feasible_point(h.M, h.v, RatMatrix(0, h.dim()), RatVector(0)).has_value();
}

namespace detail {

// Removes rows implied by the others, one LP per row. The system must be
// feasible.
inline HRep prune_redundant_rows(HRep h) {
  h = h.canonicalized();
  std::vector<bool> keep(h.rows(), true);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::vector<std::size_t> others;
    for (std::size_t t = 0; t < h.rows(); ++t)
      if (t != i && keep[t]) others.push_back(t);
    RatMatrix g(others.size(), h.dim());
    RatVector rhs(others.size());
    for (std::size_t t = 0; t < others.size(); ++t) {
      g.set_row(t, h.M.row(others[t]));
      rhs[t] = h.v[others[t]];
    }
    const LpOutcome out =
        lp_solve(LinearProgram::inequality_form(h.M.row(i), std::move(g), std::move(rhs)));
    if (out.status == LpStatus::Optimal && out.value >= h.v[i]) keep[i] = false;
  }
  std::size_t kept = 0;
  for (bool k : keep) kept += k;
  RatMatrix m(kept, h.dim());
  RatVector v(kept);
  std::size_t at = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (!keep[i]) continue;
    m.set_row(at, h.M.row(i));
    v[at] = h.v[i];
    ++at;
  }
  return HRep(std::move(m), std::move(v));
}

}  // namespace detail

/// Exact minimal generator form via double description on the homogenization
/// {(z,t) : Mz - vt >= 0, t >= 0}; empty input yields the empty VRep.
inline VRep h_to_v(const HRep& h) {
  const std::size_t d = h.dim();
  RatMatrix lifted(h.rows() + 1, d + 1);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < d; ++j) lifted(i, j) = h.M(i, j);
    lifted(i, d) = -h.v[i];
  }
  lifted(h.rows(), d) = Rational(1);
  const auto gen = detail::dd_cone(lifted);

  VRep out(d);
  auto drop_last = [d](const RatVector& w) {
    RatVector z(d);
    for (std::size_t j = 0; j < d; ++j) z[j] = w[j];
    return z;
  };
  for (const auto& r : gen.rays) {
    if (r[d].sign() > 0) {
      out.points.push_back(Rational(1) / r[d] * drop_last(r));
    } else {
      RatVector z = drop_last(r);
      if (!z.is_zero()) out.rays.push_back(std::move(z));
    }
  }
  if (out.points.empty()) return VRep::empty_set(d);
  for (const auto& l : gen.lines) out.lines.push_back(drop_last(l));
  return out.canonicalized();
}

/// Exact irredundant inequality form via double description on the polar
/// cone of the homogenization.
inline HRep v_to_h(const VRep& p) {
  p.validate();
  const std::size_t d = p.dim();
  if (p.empty()) return HRep::empty_set(d);
  // Polar side: (a, beta) with a·pt + beta >= 0, a·ray >= 0, a·line = 0.
  RatMatrix sys(p.points.size() + p.rays.size() + 2 * p.lines.size(), d + 1);
  std::size_t row = 0;
  for (const auto& pt : p.points) {
    for (std::size_t j = 0; j < d; ++j) sys(row, j) = pt[j];
    sys(row, d) = Rational(1);
    ++row;
  }
  for (const auto& r : p.rays) {
    for (std::size_t j = 0; j < d; ++j) sys(row, j) = r[j];
    ++row;
  }
  for (const auto& l : p.lines) {
    for (std::size_t j = 0; j < d; ++j) {
      sys(row, j) = l[j];
      sys(row + 1, j) = -l[j];
    }
    row += 2;
  }
  const auto polar = detail::dd_cone(sys);

  std::vector<std::pair<RatVector, Rational>> rows_;
  auto add_row = [&](const RatVector& g) {
    RatVector a(d);
    bool nonzero = false;
    for (std::size_t j = 0; j < d; ++j) {
      a[j] = g[j];
      nonzero = nonzero || !a[j].is_zero();
    }
    if (nonzero) rows_.emplace_back(std::move(a), -g[d]);
  };
  for (const auto& g : polar.rays) add_row(g);
  for (const auto& g : polar.lines) {
    add_row(g);
    add_row(-g);
  }
  RatMatrix m(rows_.size(), d);
  RatVector v(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    m.set_row(i, rows_[i].first);
    v[i] = rows_[i].second;
  }
  // Ray representatives are only canonical modulo the polar lineality, so
  // their rows can be implied by the equality pairs; prune them away.
  return detail::prune_redundant_rows(HRep(std::move(m), std::move(v)));
}

/// Coordinate projection by Fourier-Motzkin elimination with an LP redundancy
/// filter after every eliminated variable. `keep` holds 0-based coordinate
/// indices; output coordinates follow their ascending original order.
inline HRep project(const HRep& input, std::vector<std::size_t> keep) {
  const std::size_t d = input.dim();
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("project: duplicate index in keep set");
  for (auto k : keep)
    if (k >= d) throw std::invalid_argument("project: keep index out of range");
  if (keep.empty()) throw std::invalid_argument("project: keep set must be nonempty");

  if (hrep_is_empty(input)) return HRep::empty_set(keep.size());

  std::vector<bool> keep_mask(d, false);
  for (auto k : keep) keep_mask[k] = true;

  HRep cur = detail::prune_redundant_rows(input);
  for (std::size_t var = d; var-- > 0;) {
    if (keep_mask[var]) continue;
    std::vector<std::size_t> pos, neg;
    std::vector<RatVector> rows_;
    for (std::size_t i = 0; i < cur.rows(); ++i) {
      RatVector full(d + 1);
      for (std::size_t j = 0; j < d; ++j) full[j] = cur.M(i, j);
      full[d] = cur.v[i];
      const int sg = cur.M(i, var).sign();
      const std::size_t at = rows_.size();
      rows_.push_back(std::move(full));
      if (sg > 0) pos.push_back(at);
      else if (sg < 0) neg.push_back(at);
    }
    std::vector<RatVector> combined;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!rows_[i][var].is_zero()) continue;
      combined.push_back(rows_[i]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        // coefficient of `var` cancels: r = a_p * row_n - a_n * row_p
        const Rational ap = rows_[p][var], an = rows_[n][var];
        combined.push_back(primitive(ap * rows_[n] - an * rows_[p]));
      }
    }
    RatMatrix m(combined.size(), d);
    RatVector v(combined.size());
    for (std::size_t i = 0; i < combined.size(); ++i) {
      for (std::size_t j = 0; j < d; ++j) m(i, j) = combined[i][j];
      v[i] = combined[i][d];
    }
    cur = detail::prune_redundant_rows(HRep(std::move(m), std::move(v)));
  }

  RatMatrix m(cur.rows(), keep.size());
  for (std::size_t i = 0; i < cur.rows(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) m(i, j) = cur.M(i, keep[j]);
  return HRep(std::move(m), cur.v).canonicalized();
}

/// {z : Mz >= 0} for nonempty input; the zero cone for empty input.
inline HRep recession_cone(const HRep& h) {
  if (hrep_is_empty(h)) {
    const std::size_t d = h.dim();
    RatMatrix m(2 * d, d);
    for (std::size_t i = 0; i < d; ++i) {
      m(i, i) = Rational(1);
      m(d + i, i) = Rational(-1);
    }
    return HRep(std::move(m), RatVector(2 * d));
  }
  return HRep(h.M, RatVector(h.rows())).canonicalized();
}

/// Basis of L(P) = 0+P ∩ (-0+P) = {z : Mz = 0}; requires P nonempty.
inline std::vector<RatVector> lineality_space(const HRep& h) {
  if (hrep_is_empty(h))
    throw std::invalid_argument("lineality_space: empty polyhedron");
  auto basis = null_space(h.M);
  for (auto& b : basis) b = primitive_signed(b);
  sort_unique(basis);
  return basis;
}

/// True iff every generator of q satisfies p's system (rays and lines against
/// the homogeneous part). The empty set is contained in everything.
inline bool contains(const HRep& p, const VRep& q) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("contains: ambient dimension mismatch");
  for (const auto& pt : q.points)
    if (!p.satisfies_point(pt)) return false;
  for (const auto& r : q.rays)
    if (!p.satisfies_ray(r)) return false;
  for (const auto& l : q.lines)
    if (!p.satisfies_line(l)) return false;
  return true;
}

inline bool equal(const HRep& p, const VRep& q) {
  return contains(p, q) && contains(v_to_h(q), h_to_v(p));
}

inline bool equal_sets(const HRep& p, const HRep& q) {
  return contains(p, h_to_v(q)) && contains(q, h_to_v(p));
}

inline HRep intersect(const HRep& a, const HRep& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  RatMatrix m(a.rows() + b.rows(), a.dim());
  RatVector v(a.rows() + b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    m.set_row(i, a.M.row(i));
    v[i] = a.v[i];
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    m.set_row(a.rows() + i, b.M.row(i));
    v[a.rows() + i] = b.v[i];
  }
  return HRep(std::move(m), std::move(v));
}

/// Polyhedral convex ordering cone, kept in both forms. Empty generator list
/// means the zero cone {0}; the cached inequality form is homogeneous.
struct Cone {
  std::size_t dim_ = 1;
  std::vector<RatVector> generators;
  HRep hrep;

  std::size_t dim() const { return dim_; }

  static Cone from_generators(std::size_t d, std::vector<RatVector> gens) {
    Cone c;
    c.dim_ = d;
    for (auto& g : gens) {
      if (g.dim() != d) throw std::invalid_argument("cone: generator dimension mismatch");
      if (g.is_zero()) continue;
      c.generators.push_back(primitive(g));
    }
    sort_unique(c.generators);
    c.hrep = v_to_h(VRep(d, {RatVector(d)}, c.generators));
    for (std::size_t i = 0; i < c.hrep.rows(); ++i) {
      if (!c.hrep.v[i].is_zero())
        throw std::logic_error("cone: inequality form not homogeneous");
    }
    return c;
  }

  static Cone from_hrep(RatMatrix g) {
    if (g.cols() == 0) throw std::invalid_argument("cone: ambient dimension must be >= 1");
    Cone c;
    c.dim_ = g.cols();
    const std::size_t nrows = g.rows();
    c.hrep = HRep(std::move(g), RatVector(nrows)).canonicalized();
    const VRep gen = h_to_v(c.hrep);
    c.generators = gen.rays;
    for (const auto& l : gen.lines) {
      c.generators.push_back(l);
      c.generators.push_back(-l);
    }
    sort_unique(c.generators);
    return c;
  }

  bool contains_vector(const RatVector& y) const { return hrep.satisfies_ray(y); }
};

/// conv(union of the parts' points) + cone(union of the parts' rays, the
/// parts' lines and the extra generators); cone of nothing contributes {0}.
inline VRep minkowski_and_hulls(const std::vector<VRep>& parts,
                                const std::vector<RatVector>& extra_cone_gens) {
  if (parts.empty()) throw std::invalid_argument("minkowski_and_hulls: no parts");
  const std::size_t d = parts.front().dim();
  VRep out(d);
  for (const auto& part : parts) {
    if (part.dim() != d)
      throw std::invalid_argument("minkowski_and_hulls: dimension mismatch");
    out.points.insert(out.points.end(), part.points.begin(), part.points.end());
    out.rays.insert(out.rays.end(), part.rays.begin(), part.rays.end());
    out.lines.insert(out.lines.end(), part.lines.begin(), part.lines.end());
  }
  for (const auto& g : extra_cone_gens) {
    if (g.dim() != d)
      throw std::invalid_argument("minkowski_and_hulls: generator dimension mismatch");
    if (!g.is_zero()) out.rays.push_back(g);
  }
  if (out.points.empty())
    throw std::invalid_argument("minkowski_and_hulls: no part contributes a point");
  return out.canonicalized();
}

/// A1 ≼_C A2, i.e. (A1 + C) ⊇ (A2 + C).
inline bool set_dominates(const VRep& a1, const VRep& a2, const Cone& c) {
  if (a1.dim() != a2.dim() || a1.dim() != c.dim())
    throw std::invalid_argument("set_dominates: dimension mismatch");
  if (a1.empty()) return a2.empty();
  if (a2.empty()) return true;
  auto plus_cone = [&](const VRep& a) {
    VRep s = a;
    s.rays.insert(s.rays.end(), c.generators.begin(), c.generators.end());
    return s.canonicalized();
  };
  return contains(v_to_h(plus_cone(a1)), plus_cone(a2));
}

/// A_i is C-minimal in the family iff A_j ≼_C A_i always implies A_i ≼_C A_j.
inline bool c_minimal_in_family(const std::vector<VRep>& family, const Cone& c,
                                std::size_t i) {
  if (i >= family.size())
    throw std::invalid_argument("c_minimal_in_family: index out of range");
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (j == i) continue;
    if (set_dominates(family[j], family[i], c) &&
        !set_dominates(family[i], family[j], c))
      return false;
  }
  return true;
}

}  // namespace polyopt
