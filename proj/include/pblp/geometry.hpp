#pragma once

// Exact 2D geometry of the weight simplex. All polygons live in the
// (w1, w2) projection; the full simplex is the triangle (0,0), (1,0), (0,1).

#include "pblp/lp.hpp"
#include "pblp/problem.hpp"
#include "pblp/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace pblp {

/// { (w1, w2) : a1 w1 + a2 w2 <= rhs }
struct HalfPlane {
  Rational a1, a2, rhs;

  HalfPlane(Rational a1_, Rational a2_, Rational rhs_)
      : a1(std::move(a1_)), a2(std::move(a2_)), rhs(std::move(rhs_)) {
    if (a1 == 0 && a2 == 0) throw std::invalid_argument("half-plane with zero normal");
  }

  Rational slack(const Point2& p) const { return rhs - a1 * p.x - a2 * p.y; }
  bool contains(const Point2& p) const { return slack(p) >= 0; }

  /// Same set, scaled so the first nonzero normal entry is +-1.
  HalfPlane normalized() const {
    const Rational s = abs(a1 != 0 ? a1 : a2);
    return {a1 / s, a2 / s, rhs / s};
  }
};

inline Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Convex polygon with canonical vertex order: counterclockwise, no repeated
/// or collinear vertices, lexicographically smallest vertex first. Empty,
/// point and segment polygons are allowed.
class ConvexPolygon2 {
 public:
  ConvexPolygon2() = default;

  /// `ring` must be in counterclockwise convex cyclic order; repeated and
  /// collinear points are dropped.
  static ConvexPolygon2 from_ring(std::vector<Point2> ring) {
    ConvexPolygon2 poly;
    std::vector<Point2> dedup;
    for (auto& p : ring)
      if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    if (dedup.size() <= 2) {
      std::sort(dedup.begin(), dedup.end());
      dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
      poly.vertices_ = std::move(dedup);
      return poly;
    }
    Rational area2 = 0;
    for (std::size_t i = 0; i < dedup.size(); ++i) {
      const auto& a = dedup[i];
      const auto& b = dedup[(i + 1) % dedup.size()];
      area2 += a.x * b.y - b.x * a.y;
    }
    if (area2 == 0) {
      auto [lo, hi] = std::minmax_element(dedup.begin(), dedup.end());
      poly.vertices_ = {*lo};
      if (!(*lo == *hi)) poly.vertices_.push_back(*hi);
      return poly;
    }
    if (area2 < 0) throw std::invalid_argument("polygon ring is clockwise");
    bool changed = true;
    while (changed && dedup.size() > 3) {
      changed = false;
      for (std::size_t i = 0; i < dedup.size(); ++i) {
        const auto& prev = dedup[(i + dedup.size() - 1) % dedup.size()];
        const auto& next = dedup[(i + 1) % dedup.size()];
        if (cross(prev, dedup[i], next) == 0) {
          dedup.erase(dedup.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
    auto first = std::min_element(dedup.begin(), dedup.end());
    std::rotate(dedup.begin(), first, dedup.end());
    poly.vertices_ = std::move(dedup);
    return poly;
  }

  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return vertices_.empty(); }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Twice the signed area; positive exactly for full-dimensional polygons.
  Rational twice_area() const {
    Rational a = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[(i + 1) % vertices_.size()];
      a += p.x * q.y - q.x * p.y;
    }
    return a;
  }

  Rational area() const { return twice_area() / 2; }
  bool full_dimensional() const { return vertices_.size() >= 3; }

  bool contains(const Point2& p) const {
    if (vertices_.empty()) return false;
    if (vertices_.size() == 1) return vertices_[0] == p;
    if (vertices_.size() == 2) {
      const auto& a = vertices_[0];
      const auto& b = vertices_[1];
      return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
             std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) < 0) return false;
    return true;
  }

  /// Edge half-planes of a full-dimensional polygon.
  std::vector<HalfPlane> halfplanes() const {
    std::vector<HalfPlane> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& p = vertices_[i];
      const auto& q = vertices_[(i + 1) % vertices_.size()];
      Rational a1 = q.y - p.y;
      Rational a2 = p.x - q.x;
      Rational rhs = a1 * p.x + a2 * p.y;
      out.emplace_back(std::move(a1), std::move(a2), std::move(rhs));
    }
    return out;
  }

  friend bool operator==(const ConvexPolygon2&, const ConvexPolygon2&) = default;

 private:
  std::vector<Point2> vertices_;
};

inline ConvexPolygon2 weight_simplex() {
  return ConvexPolygon2::from_ring({{0, 0}, {1, 0}, {0, 1}});
}

/// Sutherland-Hodgman step against one half-plane.
inline ConvexPolygon2 clip_polygon(const ConvexPolygon2& poly, const HalfPlane& h) {
  const auto& v = poly.vertices();
  if (v.empty()) return poly;
  std::vector<Point2> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    const Rational sp = h.slack(p);
    const Rational sq = h.slack(q);
    if (sp >= 0) out.push_back(p);
    if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
      const Rational t = sp / (sp - sq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return ConvexPolygon2::from_ring(std::move(out));
}

inline ConvexPolygon2 intersect(const ConvexPolygon2& a, const ConvexPolygon2& b) {
  if (!b.full_dimensional()) throw std::invalid_argument("intersect: second polygon must be 2D");
  ConvexPolygon2 out = a;
  for (const auto& h : b.halfplanes()) out = clip_polygon(out, h);
  return out;
}

/// Half-planes cutting W(y) out of the simplex relative to `others`:
/// (y - y')'(w1, w2, 1 - w1 - w2) <= 0 for each y', followed by the three
/// simplex bounds. A y' differing from y by a constant shift gives either
/// no constraint (y' worse) or an empty one (y' better).
inline std::vector<HalfPlane> component_halfplanes(const Image3& y, std::span<const Image3> others) {
  std::vector<HalfPlane> out;
  for (const auto& other : others) {
    const Rational d1 = y[0] - other[0];
    const Rational d2 = y[1] - other[1];
    const Rational d3 = y[2] - other[2];
    const Rational a1 = d1 - d3;
    const Rational a2 = d2 - d3;
    const Rational rhs = -d3;
    if (a1 == 0 && a2 == 0) {
      if (rhs < 0) out.push_back(HalfPlane(1, 1, -1));  // infeasible on the simplex
      continue;
    }
    out.push_back(HalfPlane(a1, a2, rhs).normalized());
  }
  out.push_back(HalfPlane(-1, 0, 0));
  out.push_back(HalfPlane(0, -1, 0));
  out.push_back(HalfPlane(1, 1, 1));
  return out;
}

inline ConvexPolygon2 component_vertices(const Image3& y, std::span<const Image3> others) {
  ConvexPolygon2 poly = weight_simplex();
  for (const auto& h : component_halfplanes(y, others)) {
    poly = clip_polygon(poly, h);
    if (poly.empty()) break;
  }
  return poly;
}

/// Dual description of W(y) as P (v, w) >= q over v, w >= 0.
///
/// The feasible system is first rewritten in >= form (<= rows negated, =
/// rows split into two), giving m' rows A' x >= b'. Columns are
/// (v_1 .. v_m', w1, w2, w3); rows are, in order:
///   n rows      C'w - A''v >= 0        (dual feasibility of WS(w))
///   2 rows      b''v - y'w >= 0, -(b''v - y'w) >= 0   (strong duality)
///   2 rows      1'w >= 1, -1'w >= -1
struct ComponentHrep {
  Matrix P;
  Vector q;
  std::size_t dual_count = 0;  // m'
  std::size_t variable_count = 0;

  std::size_t w_column(std::size_t k) const { return dual_count + k; }
};

inline ComponentHrep component_hrep_eq9(const Tolp& t, const Image3& y) {
  const auto& sys = t.system;
  const std::size_t n = sys.variable_count;
  Matrix a_ge;
  Vector b_ge;
  for (std::size_t i = 0; i < sys.row_count(); ++i) {
    Vector row = sys.matrix[i];
    Rational rhs = sys.rhs[i];
    if (sys.senses[i] != Sense::LE) {
      a_ge.push_back(row);
      b_ge.push_back(rhs);
    }
    if (sys.senses[i] != Sense::GE) {
      for (auto& v : row) v = -v;
      a_ge.push_back(std::move(row));
      b_ge.push_back(-rhs);
    }
  }
  const std::size_t m = a_ge.size();
  ComponentHrep h;
  h.dual_count = m;
  h.variable_count = n;
  const std::size_t cols = m + 3;
  h.P.assign(n + 4, Vector(cols, Rational(0)));
  h.q.assign(n + 4, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) h.P[j][i] = -a_ge[i][j];
    for (std::size_t k = 0; k < 3; ++k) h.P[j][m + k] = t.objectives[k][j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    h.P[n][i] = b_ge[i];
    h.P[n + 1][i] = -b_ge[i];
  }
  for (std::size_t k = 0; k < 3; ++k) {
    h.P[n][m + k] = -y[k];
    h.P[n + 1][m + k] = y[k];
    h.P[n + 2][m + k] = 1;
    h.P[n + 3][m + k] = -1;
  }
  h.q[n + 2] = 1;
  h.q[n + 3] = -1;
  return h;
}

/// LP over (v, w) >= 0 with constraints P (v, w) >= q and the given objective.
inline LinearProgram hrep_program(const ComponentHrep& h, Vector objective) {
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.constraint_matrix = h.P;
  lp.rhs = h.q;
  lp.senses.assign(h.P.size(), Sense::GE);
  return lp;
}

/// True when some v >= 0 completes w to a point of the H-representation.
inline bool hrep_admits(const ComponentHrep& h, const Weight3& w) {
  const std::size_t m = h.dual_count;
  LinearProgram lp;
  lp.objective.assign(m, Rational(0));
  for (std::size_t r = 0; r < h.P.size(); ++r) {
    Vector row(h.P[r].begin(), h.P[r].begin() + static_cast<std::ptrdiff_t>(m));
    Rational rhs = h.q[r];
    for (std::size_t k = 0; k < 3; ++k) rhs -= h.P[r][m + k] * w[k];
    lp.constraint_matrix.push_back(std::move(row));
    lp.rhs.push_back(std::move(rhs));
    lp.senses.push_back(Sense::GE);
  }
  return solve_lp(lp).optimal();
}

}  // namespace pblp
