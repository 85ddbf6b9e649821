#pragma once

// Parameter intervals and breakpoints of PBLP^1 / PBLP^2.
//
// Each extreme image y of the triobjective problem stays in a minimal
// solution set for exactly those lambda whose weight segment (see
// segment_for_lambda) meets its component W(y). Two independent routes
// compute that interval:
//
//  * AlgorithmOne solves two LPs per image. Case Two optimizes w1 + w2 over
//    the dual description of W(y) (w1 + w2 = 1/(1+lambda) on the segment).
//    Case One linearizes w1 (1+lambda) + w2 = 1 with
//      l1 = (1+lambda)/(2+lambda),  l2 = 1/(2+lambda),
//    and solves the LP dual of  max_{w in W(y)} l1 w1 + l2 w2  <=  l2
//    (and of the reversed inequality) over the variables (x, x_opt, x_w, l).
//  * AdaptedWsd evaluates lambda at the vertices of W(y):
//    case One lambda = w3/w1, case Two lambda = w3/(1-w3).

#include "pblp/geometry.hpp"
#include "pblp/lp.hpp"
#include "pblp/problem.hpp"
#include "pblp/wsd.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pblp {

enum class Method { AlgorithmOne, AdaptedWsd };

inline const char* to_string(Method m) {
  return m == Method::AlgorithmOne ? "lp" : "adapted";
}

class EmptyComponent : public Error {
 public:
  using Error::Error;
};

class NoFiniteVertex : public Error {
 public:
  NoFiniteVertex() : Error("component has no vertex with a finite parameter value") {}
};

struct IntervalBounds {
  Rational lower;
  ExtendedRational upper;

  friend bool operator==(const IntervalBounds&, const IntervalBounds&) = default;
};

struct ParameterInterval {
  Rational lower;
  ExtendedRational upper;
  Image3 image;
  Vector witness;

  bool contains(const Rational& lambda) const { return lower <= lambda && ExtendedRational(lambda) <= upper; }
  IntervalBounds bounds() const { return {lower, upper}; }
};

struct AxisSegment {
  Rational lower;
  ExtendedRational upper;
  bool lower_closed = true;
  bool upper_closed = false;
  /// Indices into ParametricSolution::intervals.
  std::vector<std::size_t> witnesses;

  bool singleton() const { return upper.is_finite() && upper.value() == lower; }
  bool contains(const Rational& lambda) const {
    const bool above = lower_closed ? lower <= lambda : lower < lambda;
    const ExtendedRational l(lambda);
    const bool below = upper_closed ? l <= upper : l < upper;
    return above && below;
  }

  friend bool operator==(const AxisSegment&, const AxisSegment&) = default;
};

struct ParametricSolution {
  Case which = Case::Two;
  Method method = Method::AlgorithmOne;
  /// One per extreme image, in decomposition order.
  std::vector<ParameterInterval> intervals;
  /// Sorted, distinct.
  std::vector<Rational> breakpoints;
  /// Ordered, pairwise disjoint, covering [0, inf).
  std::vector<AxisSegment> axis;
  /// LPs solved while computing intervals (zero for AdaptedWsd).
  std::size_t lp_solves = 0;

  const AxisSegment& segment_at(const Rational& lambda) const {
    for (const auto& s : axis)
      if (s.contains(lambda)) return s;
    throw std::out_of_range("lambda outside the parameter axis");
  }
};

inline Rational lambda_from_l1(const Rational& l1) { return (2 * l1 - 1) / (1 - l1); }

/// Optimal w1 + w2 over the dual description: maximum when `upper` is false
/// (gives lambda_l), minimum otherwise (gives lambda_u).
inline Rational solve_wsc_case2(const ComponentHrep& h, bool upper, std::size_t* solves = nullptr) {
  Vector objective(h.dual_count + 3, Rational(0));
  const Rational sign = upper ? Rational(1) : Rational(-1);
  objective[h.w_column(0)] = sign;
  objective[h.w_column(1)] = sign;
  const LpResult r = solve_lp(hrep_program(h, std::move(objective)));
  if (solves) ++*solves;
  if (r.status == LpStatus::Infeasible) throw EmptyComponent("weight set component is empty");
  if (r.status == LpStatus::Unbounded) throw std::logic_error("w1 + w2 unbounded over the simplex");
  return sign * *r.value;
}

inline IntervalBounds interval_lp_case2(const ComponentHrep& h, std::size_t* solves = nullptr) {
  const Rational s_max = solve_wsc_case2(h, false, solves);
  if (s_max == 0) throw EmptyComponent("weight set component lies in w3 = 1");
  const Rational s_min = solve_wsc_case2(h, true, solves);
  IntervalBounds b{1 / s_max - 1, ExtendedRational::infinity()};
  if (s_min != 0) b.upper = 1 / s_min - 1;
  return b;
}

/// The case-One interval LP over (x >= 0, x_opt free, x_w free, l >= 0).
///
///   rows i:   a_i x + b_i x_opt  (sense_i)  0
///   rows k:  -(Cx)_k - y_k x_opt + x_w -+ (l1, l2, 0)_k >= 0
///             x_w -+ l2 = 0,   l1 + l2 = 1
///
/// With the minus signs it certifies max_{W(y)} l1 w1 + l2 w2 <= l2 and is
/// maximized in l1 (lambda_l); with the plus signs it certifies
/// min_{W(y)} l1 w1 + l2 w2 >= l2 and is minimized in l1 (lambda_u).
inline LinearProgram wsc_case1_program(const Tolp& t, const Image3& y, bool upper) {
  const auto& sys = t.system;
  const std::size_t n = sys.variable_count;
  const std::size_t x_opt = n, x_w = n + 1, l1 = n + 2, l2 = n + 3;
  const Rational s = upper ? Rational(1) : Rational(-1);

  LinearProgram lp;
  lp.objective.assign(n + 4, Rational(0));
  lp.objective[l1] = upper ? Rational(1) : Rational(-1);
  lp.sign_restricted.assign(n + 4, true);
  lp.sign_restricted[x_opt] = false;
  lp.sign_restricted[x_w] = false;

  auto add_row = [&](Vector row, Sense sense, Rational rhs) {
    lp.constraint_matrix.push_back(std::move(row));
    lp.senses.push_back(sense);
    lp.rhs.push_back(std::move(rhs));
  };
  for (std::size_t i = 0; i < sys.row_count(); ++i) {
    Vector row(n + 4, Rational(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = sys.matrix[i][j];
    row[x_opt] = sys.rhs[i];
    add_row(std::move(row), sys.senses[i], 0);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    Vector row(n + 4, Rational(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = -t.objectives[k][j];
    row[x_opt] = -y[k];
    row[x_w] = 1;
    if (k == 0) row[l1] = s;
    if (k == 1) row[l2] = s;
    add_row(std::move(row), Sense::GE, 0);
  }
  {
    Vector row(n + 4, Rational(0));
    row[x_w] = 1;
    row[l2] = s;
    add_row(std::move(row), Sense::EQ, 0);
  }
  {
    Vector row(n + 4, Rational(0));
    row[l1] = 1;
    row[l2] = 1;
    add_row(std::move(row), Sense::EQ, 1);
  }
  return lp;
}

/// Optimal l1 of the case-One interval LP.
inline Rational solve_wsc_case1(const Tolp& t, const Image3& y, bool upper,
                                std::size_t* solves = nullptr) {
  const LpResult r = solve_lp(wsc_case1_program(t, y, upper));
  if (solves) ++*solves;
  if (!r.optimal())
    throw EmptyComponent(std::string("case-One interval LP is ") + to_string(r.status));
  return upper ? *r.value : Rational(-*r.value);
}

inline IntervalBounds interval_lp_case1(const Tolp& t, const Image3& y, std::size_t* solves = nullptr) {
  const Rational l1_lower = solve_wsc_case1(t, y, false, solves);
  if (l1_lower == 1) throw EmptyComponent("weight set component has no weight with w1 > 0");
  const Rational l1_upper = solve_wsc_case1(t, y, true, solves);
  IntervalBounds b{lambda_from_l1(l1_lower), ExtendedRational::infinity()};
  if (l1_upper != 1) b.upper = lambda_from_l1(l1_upper);
  return b;
}

inline IntervalBounds interval_vertex(Case which, const ConvexPolygon2& poly) {
  std::optional<Rational> lo, hi;
  bool unbounded = false;
  for (const Point2& v : poly.vertices()) {
    const Weight3 w = Weight3::from_projection(v);
    const auto lambda = lambda_from_weight(which, w);
    if (!lambda) continue;  // (0, 1, 0) in case One
    if (lambda->is_infinite()) {
      unbounded = true;
      continue;
    }
    const Rational& value = lambda->value();
    if (!lo || value < *lo) lo = value;
    if (!hi || value > *hi) hi = value;
  }
  if (!lo) throw NoFiniteVertex();
  return {*lo, unbounded ? ExtendedRational::infinity() : ExtendedRational(*hi)};
}

namespace detail {

using WitnessSet = std::vector<std::size_t>;

/// Witnesses whose interval contains every lambda strictly between a and b.
inline WitnessSet covering(const std::vector<ParameterInterval>& iv, const Rational& a,
                           const ExtendedRational& b) {
  WitnessSet out;
  for (std::size_t k = 0; k < iv.size(); ++k)
    if (iv[k].lower <= a && b <= iv[k].upper) out.push_back(k);
  return out;
}

/// Witnesses whose component meets the lambda segment in more than a point,
/// i.e. whose fixed-lambda image is extreme nondominated.
inline WitnessSet positive_length(const std::vector<ParameterInterval>& iv,
                                  const std::vector<ConvexPolygon2>& polygons, Case which,
                                  const Rational& lambda) {
  const Line2 line = line_for_lambda(which, lambda);
  WitnessSet out;
  for (std::size_t k = 0; k < iv.size(); ++k) {
    const ExtendedRational l(lambda);
    if (iv[k].lower < lambda && l < iv[k].upper) {
      out.push_back(k);
      continue;
    }
    if (!iv[k].contains(lambda)) continue;
    std::size_t on_line = 0;
    for (const auto& v : polygons[k].vertices())
      if (line.eval(v) == 0) ++on_line;
    if (on_line >= 2) out.push_back(k);
  }
  return out;
}

inline std::set<Image2> images_at(const std::vector<ParameterInterval>& iv, const WitnessSet& s,
                                  Case which, const Rational& lambda) {
  std::set<Image2> out;
  for (auto k : s) out.insert(fixed_lambda_image(which, iv[k].image, lambda));
  return out;
}

}  // namespace detail

/// Breakpoints and the parameter-axis decomposition from per-image intervals.
///
/// Closed intervals attach every breakpoint to the segment ending there, so
/// segments read [0, b1], (b1, b2], ..., (bk, inf). A breakpoint whose
/// minimal solution set (compared through fixed-lambda images, so that
/// coinciding images count once) matches neither neighbor is split off as
/// [b, b] carrying that set. 0 is a breakpoint only if the set at 0 differs
/// from the one just after it.
inline void assemble_axis(ParametricSolution& sol, const std::vector<ConvexPolygon2>& polygons) {
  const auto& iv = sol.intervals;
  std::vector<Rational> points{Rational(0)};
  for (const auto& i : iv) {
    points.push_back(i.lower);
    if (i.upper.is_finite()) points.push_back(i.upper.value());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  struct Cut {
    Rational at;
    bool singleton;
    detail::WitnessSet at_set;
  };
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational& b = points[i];
    const ExtendedRational next =
        i + 1 < points.size() ? ExtendedRational(points[i + 1]) : ExtendedRational::infinity();
    const auto after = detail::covering(iv, b, next);
    const auto at = detail::positive_length(iv, polygons, sol.which, b);
    const auto img_at = detail::images_at(iv, at, sol.which, b);
    const auto img_after = detail::images_at(iv, after, sol.which, b);
    if (i == 0) {
      if (img_at != img_after) cuts.push_back({b, true, at});
      continue;
    }
    const auto before = detail::covering(iv, points[i - 1], b);
    const auto img_before = detail::images_at(iv, before, sol.which, b);
    const bool singleton = img_at != img_before && img_at != img_after;
    if (before != after || singleton) cuts.push_back({b, singleton, at});
  }

  sol.breakpoints.clear();
  sol.axis.clear();
  Rational start = 0;
  bool start_closed = true;
  for (const auto& cut : cuts) {
    sol.breakpoints.push_back(cut.at);
    if (cut.at == 0) {
      sol.axis.push_back({0, Rational(0), true, true, cut.at_set});
      start_closed = false;
      continue;
    }
    sol.axis.push_back({start, cut.at, start_closed, !cut.singleton,
                        detail::covering(iv, start, cut.at)});
    if (cut.singleton) sol.axis.push_back({cut.at, cut.at, true, true, cut.at_set});
    start = cut.at;
    start_closed = false;
  }
  sol.axis.push_back({start, ExtendedRational::infinity(), start_closed, false,
                      detail::covering(iv, start, ExtendedRational::infinity())});
}

inline ParametricSolution enumerate_breakpoints(const Pblp& p, const Decomposition& dec, Method method) {
  ParametricSolution sol;
  sol.which = p.which();
  sol.method = method;
  const Tolp t = build_tolp(p);
  std::vector<ConvexPolygon2> polygons;
  for (const auto& c : dec.components) {
    IntervalBounds b;
    if (method == Method::AdaptedWsd) {
      b = interval_vertex(p.which(), c.polygon);
    } else if (p.which() == Case::Two) {
      b = interval_lp_case2(component_hrep_eq9(t, c.extreme.image), &sol.lp_solves);
    } else {
      b = interval_lp_case1(t, c.extreme.image, &sol.lp_solves);
    }
    sol.intervals.push_back({b.lower, b.upper, c.extreme.image, c.extreme.witness});
    polygons.push_back(c.polygon);
  }
  assemble_axis(sol, polygons);
  return sol;
}

inline ParametricSolution enumerate_breakpoints(const Pblp& p, Method method) {
  return enumerate_breakpoints(p, decompose(build_tolp(p)), method);
}

}  // namespace pblp
