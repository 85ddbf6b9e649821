#pragma once

// Parametric biobjective instances, the lifted triobjective problem, and the
// maps between the parametric weight space and the triobjective simplex.
//
// Case One:  min ( c1 x + lambda d1 x,  c2 x )
// Case Two:  min ( c1 x + lambda d1 x,  c2 x + lambda d1 x )
// Both share the triobjective problem min (c1 x, c2 x, d1 x) over the same
// feasible set. Weights on the simplex are handled in the (w1, w2)
// projection with w3 = 1 - w1 - w2.

#include "pblp/lp.hpp"
#include "pblp/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pblp {

enum class Case { One = 1, Two = 2 };

class NegativeParameter : public Error {
 public:
  NegativeParameter() : Error("parameter lambda must be nonnegative") {}
};

class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class InvalidProblem : public Error {
 public:
  using Error::Error;
};

using Image3 = std::array<Rational, 3>;
using Image2 = std::array<Rational, 2>;

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// Feasible set { x >= 0 : a_i x (sense_i) b_i }.
struct FeasibleSystem {
  Matrix matrix;
  Vector rhs;
  std::vector<Sense> senses;
  std::size_t variable_count = 0;

  std::size_t row_count() const noexcept { return matrix.size(); }

  void validate() const {
    if (rhs.size() != matrix.size() || senses.size() != matrix.size())
      throw DimensionMismatch("feasible system: row counts differ");
    for (const auto& row : matrix)
      if (row.size() != variable_count)
        throw DimensionMismatch("feasible system: row has " + std::to_string(row.size()) +
                                " coefficients, expected " + std::to_string(variable_count));
  }

  LinearProgram with_objective(Vector objective) const {
    LinearProgram lp;
    lp.objective = std::move(objective);
    lp.constraint_matrix = matrix;
    lp.rhs = rhs;
    lp.senses = senses;
    return lp;
  }

  friend bool operator==(const FeasibleSystem&, const FeasibleSystem&) = default;
};

class Pblp {
 public:
  Pblp(FeasibleSystem system, Vector c1, Vector c2, Vector d1, Case which)
      : system_(std::move(system)),
        c1_(std::move(c1)),
        c2_(std::move(c2)),
        d1_(std::move(d1)),
        case_(which) {
    system_.validate();
    const std::size_t n = system_.variable_count;
    if (c1_.size() != n || c2_.size() != n || d1_.size() != n)
      throw DimensionMismatch("objective lengths must equal the variable count");
    bool parametric = false;
    for (const auto& v : d1_) parametric = parametric || v != 0;
    if (!parametric) throw InvalidProblem("d1 is zero: the problem is not parametric");
  }

  const FeasibleSystem& system() const noexcept { return system_; }
  const Vector& c1() const noexcept { return c1_; }
  const Vector& c2() const noexcept { return c2_; }
  const Vector& d1() const noexcept { return d1_; }
  Case which() const noexcept { return case_; }
  std::size_t variable_count() const noexcept { return system_.variable_count; }

  friend bool operator==(const Pblp&, const Pblp&) = default;

 private:
  FeasibleSystem system_;
  Vector c1_, c2_, d1_;
  Case case_;
};

/// Triobjective problem with objective rows (c1, c2, d1), in that order.
struct Tolp {
  FeasibleSystem system;
  std::array<Vector, 3> objectives;

  Image3 image(const Vector& x) const {
    return {dot(objectives[0], x), dot(objectives[1], x), dot(objectives[2], x)};
  }
};

struct BiobjectiveInstance {
  FeasibleSystem system;
  std::array<Vector, 2> objectives;
};

class Weight3 {
 public:
  Weight3(Rational w1, Rational w2, Rational w3)
      : w_{std::move(w1), std::move(w2), std::move(w3)} {
    if (w_[0] < 0 || w_[1] < 0 || w_[2] < 0) throw InvalidWeight("weight has a negative entry");
    if (w_[0] + w_[1] + w_[2] != 1) throw InvalidWeight("weights must sum to 1");
  }

  /// From the (w1, w2) projection.
  static Weight3 from_projection(const Point2& p) { return Weight3(p.x, p.y, 1 - p.x - p.y); }

  const Rational& w1() const noexcept { return w_[0]; }
  const Rational& w2() const noexcept { return w_[1]; }
  const Rational& w3() const noexcept { return w_[2]; }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  Point2 projection() const { return {w_[0], w_[1]}; }

  Rational apply(const Image3& y) const { return w_[0] * y[0] + w_[1] * y[1] + w_[2] * y[2]; }

  friend bool operator==(const Weight3&, const Weight3&) = default;

 private:
  std::array<Rational, 3> w_;
};

class Weight2 {
 public:
  Weight2(Rational w1, Rational w2) : w_{std::move(w1), std::move(w2)} {
    if (w_[0] < 0 || w_[1] < 0) throw InvalidWeight("weight has a negative entry");
    if (w_[0] + w_[1] != 1) throw InvalidWeight("weights must sum to 1");
  }

  const Rational& w1() const noexcept { return w_[0]; }
  const Rational& w2() const noexcept { return w_[1]; }

  friend bool operator==(const Weight2&, const Weight2&) = default;

 private:
  std::array<Rational, 2> w_;
};

/// Segment in the (w1*, w2*) projection.
struct Segment2 {
  Point2 p;
  Point2 q;
};

inline Tolp build_tolp(const Pblp& p) { return Tolp{p.system(), {p.c1(), p.c2(), p.d1()}}; }

inline BiobjectiveInstance fix_lambda(const Pblp& p, const Rational& lambda) {
  if (lambda < 0) throw NegativeParameter();
  const std::size_t n = p.variable_count();
  Vector f1(n), f2(n);
  for (std::size_t j = 0; j < n; ++j) {
    f1[j] = p.c1()[j] + lambda * p.d1()[j];
    f2[j] = p.which() == Case::One ? p.c2()[j] : p.c2()[j] + lambda * p.d1()[j];
  }
  return {p.system(), {std::move(f1), std::move(f2)}};
}

/// Image of a triobjective image under the fixed-lambda objectives.
inline Image2 fixed_lambda_image(Case which, const Image3& y, const Rational& lambda) {
  if (which == Case::One) return {y[0] + lambda * y[2], y[1]};
  return {y[0] + lambda * y[2], y[1] + lambda * y[2]};
}

inline LinearProgram ws_scalarize(const Tolp& t, const Weight3& w) {
  const std::size_t n = t.system.variable_count;
  Vector c(n);
  for (std::size_t j = 0; j < n; ++j)
    c[j] = w.w1() * t.objectives[0][j] + w.w2() * t.objectives[1][j] + w.w3() * t.objectives[2][j];
  return t.system.with_objective(std::move(c));
}

inline Weight3 map_weight_to_simplex(Case which, const Weight2& w, const Rational& lambda) {
  if (lambda < 0) throw NegativeParameter();
  if (which == Case::One) {
    const Rational scale = 1 + w.w1() * lambda;
    return Weight3(w.w1() / scale, w.w2() / scale, w.w1() * lambda / scale);
  }
  const Rational scale = 1 + lambda;
  return Weight3(w.w1() / scale, w.w2() / scale, lambda / scale);
}

/// Parameter value belonging to a simplex weight: a finite value, +inf, or
/// nullopt where the weight carries no parameter information (case One at
/// (0, 1, 0)).
inline std::optional<ExtendedRational> lambda_from_weight(Case which, const Weight3& w) {
  if (which == Case::One) {
    if (w.w1() > 0) return ExtendedRational(w.w3() / w.w1());
    if (w.w3() > 0) return ExtendedRational::infinity();
    return std::nullopt;
  }
  if (w.w3() == 1) return ExtendedRational::infinity();
  return ExtendedRational(w.w3() / (1 - w.w3()));
}

inline Segment2 segment_for_lambda(Case which, const Rational& lambda) {
  if (lambda < 0) throw NegativeParameter();
  const Rational end = 1 / (1 + lambda);
  if (which == Case::One) return {{0, 1}, {end, 0}};
  return {{0, end}, {end, 0}};
}

/// Line through segment_for_lambda as a1 w1 + a2 w2 = rhs.
struct Line2 {
  Rational a1, a2, rhs;

  Rational eval(const Point2& p) const { return a1 * p.x + a2 * p.y - rhs; }
};

inline Line2 line_for_lambda(Case which, const Rational& lambda) {
  if (lambda < 0) throw NegativeParameter();
  if (which == Case::One) return {1 + lambda, 1, 1};
  return {1, 1, 1 / (1 + lambda)};
}

}  // namespace pblp
