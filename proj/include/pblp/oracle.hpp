#pragma once

// Independent reference computations used by the test suites: brute-force
// vertex enumeration, extreme nondominated images from that enumeration,
// the dichotomic method for fixed-lambda biobjective problems, and a
// lambda sweep built on it.

#include "pblp/geometry.hpp"
#include "pblp/lp.hpp"
#include "pblp/problem.hpp"
#include "pblp/wsd.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pblp {

class TooLarge : public Error {
 public:
  using Error::Error;
};

class UnboundedFeasibleSet : public Error {
 public:
  UnboundedFeasibleSet() : Error("feasible set is unbounded") {}
};

namespace detail {

/// Solves the square system M x = r; returns false when M is singular.
inline bool solve_square(Matrix M, Vector r, Vector& x) {
  const std::size_t n = M.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(M[p], M[c]);
    std::swap(r[p], r[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) continue;
      const Rational f = M[i][c] / M[c][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[c][j];
      r[i] -= f * r[c];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / M[i][i];
  return true;
}

inline double binomial(std::size_t n, std::size_t k) {
  double b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * static_cast<double>(n - k + i) / static_cast<double>(i);
  return b;
}

inline bool satisfies(const FeasibleSystem& sys, const Vector& x) {
  for (const auto& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < sys.row_count(); ++i) {
    const Rational lhs = dot(sys.matrix[i], x);
    switch (sys.senses[i]) {
      case Sense::GE: if (lhs < sys.rhs[i]) return false; break;
      case Sense::LE: if (lhs > sys.rhs[i]) return false; break;
      case Sense::EQ: if (lhs != sys.rhs[i]) return false; break;
    }
  }
  return true;
}

/// True when some direction d >= 0, d != 0 keeps every row satisfied.
inline bool has_recession_direction(const FeasibleSystem& sys) {
  LinearProgram lp;
  lp.objective.assign(sys.variable_count, Rational(0));
  lp.constraint_matrix = sys.matrix;
  lp.rhs.assign(sys.row_count(), Rational(0));
  lp.senses = sys.senses;
  lp.constraint_matrix.push_back(Vector(sys.variable_count, Rational(1)));
  lp.rhs.push_back(1);
  lp.senses.push_back(Sense::EQ);
  return solve_lp(lp).optimal();
}

}  // namespace detail

inline constexpr double kMaxBasisCandidates = 1e6;

/// Every vertex of { x >= 0 : A x (senses) b }, sorted and distinct.
inline std::vector<Vector> enumerate_vertices_bruteforce(const FeasibleSystem& sys) {
  sys.validate();
  const std::size_t n = sys.variable_count;
  const std::size_t m = sys.row_count();
  const std::size_t total = m + n;
  if (detail::binomial(total, n) > kMaxBasisCandidates)
    throw TooLarge("more than 1e6 candidate bases");
  if (detail::has_recession_direction(sys)) throw UnboundedFeasibleSet();

  // Constraint k < m is row k; constraint m + j is x_j = 0.
  auto row_of = [&](std::size_t k) {
    if (k < m) return std::make_pair(sys.matrix[k], sys.rhs[k]);
    Vector e(n, Rational(0));
    e[k - m] = 1;
    return std::make_pair(std::move(e), Rational(0));
  };

  std::vector<Vector> out;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    bool all_eq_active = true;
    for (std::size_t i = 0; i < m && all_eq_active; ++i)
      if (sys.senses[i] == Sense::EQ && std::find(pick.begin(), pick.end(), i) == pick.end())
        all_eq_active = false;
    if (all_eq_active) {
      Matrix M;
      Vector r;
      for (auto k : pick) {
        auto [row, rhs] = row_of(k);
        M.push_back(std::move(row));
        r.push_back(std::move(rhs));
      }
      Vector x;
      if (detail::solve_square(std::move(M), std::move(r), x) && detail::satisfies(sys, x))
        out.push_back(std::move(x));
    }
    // Next combination in lexicographic order.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Images of vertices whose weight set component has positive area, sorted.
inline std::vector<Image3> extreme_nondominated_bruteforce(const Tolp& t) {
  std::vector<Image3> images;
  for (const auto& x : enumerate_vertices_bruteforce(t.system)) images.push_back(t.image(x));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<Image3> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    std::vector<Image3> others;
    for (std::size_t j = 0; j < images.size(); ++j)
      if (j != k) others.push_back(images[j]);
    if (component_vertices(images[k], others).full_dimensional()) out.push_back(images[k]);
  }
  return out;
}

struct BolpPoint {
  Image2 image;
  Vector witness;
};

namespace detail {

inline BolpPoint bolp_lex(const BiobjectiveInstance& b, const Vector& objective,
                          std::vector<Vector> ties) {
  const LpResult r = solve_lex_lp(b.system.with_objective(objective), ties);
  if (r.status == LpStatus::Infeasible) throw InfeasibleProblem();
  if (r.status == LpStatus::Unbounded) throw Error("biobjective scalarization is unbounded");
  return {{dot(b.objectives[0], *r.solution), dot(b.objectives[1], *r.solution)}, *r.solution};
}

inline void dichotomic_step(const BiobjectiveInstance& b, const std::vector<Vector>& ties,
                            const BolpPoint& a, const BolpPoint& c, std::vector<BolpPoint>& out) {
  const Rational w1 = a.image[1] - c.image[1];
  const Rational w2 = c.image[0] - a.image[0];
  const std::size_t n = b.system.variable_count;
  Vector objective(n);
  for (std::size_t j = 0; j < n; ++j) objective[j] = w1 * b.objectives[0][j] + w2 * b.objectives[1][j];
  std::vector<Vector> all{b.objectives[0], b.objectives[1]};
  all.insert(all.end(), ties.begin(), ties.end());
  BolpPoint mid = bolp_lex(b, objective, std::move(all));
  const Rational at_mid = w1 * mid.image[0] + w2 * mid.image[1];
  const Rational at_a = w1 * a.image[0] + w2 * a.image[1];
  if (at_mid >= at_a) return;
  dichotomic_step(b, ties, a, mid, out);
  out.push_back(mid);
  dichotomic_step(b, ties, mid, c, out);
}

}  // namespace detail

/// Extreme supported nondominated points of a biobjective LP, ordered by
/// increasing f1. Optimal faces are resolved lexicographically by the
/// remaining objective and then by `ties`.
inline std::vector<BolpPoint> dichotomic_bolp(const BiobjectiveInstance& b,
                                              const std::vector<Vector>& ties = {}) {
  std::vector<Vector> t1{b.objectives[1]}, t2{b.objectives[0]};
  t1.insert(t1.end(), ties.begin(), ties.end());
  t2.insert(t2.end(), ties.begin(), ties.end());
  BolpPoint first = detail::bolp_lex(b, b.objectives[0], std::move(t1));
  BolpPoint last = detail::bolp_lex(b, b.objectives[1], std::move(t2));
  std::vector<BolpPoint> out{first};
  if (first.image == last.image) return out;
  detail::dichotomic_step(b, ties, first, last, out);
  out.push_back(std::move(last));
  return out;
}

/// Fixed-lambda images of the minimal solution set at lambda.
inline std::set<Image2> minimal_images_at(const Pblp& p, const Rational& lambda) {
  std::set<Image2> out;
  for (auto& pt : dichotomic_bolp(fix_lambda(p, lambda))) out.insert(pt.image);
  return out;
}

struct SweepReport {
  std::vector<Rational> grid;
  /// Per grid point: sorted triobjective images of the dichotomic witnesses.
  std::vector<std::vector<Image3>> images;
  /// Grid cells [grid[i], grid[i+1]] across which the image set changes.
  std::vector<std::pair<Rational, Rational>> change_cells;
};

/// Runs the dichotomic method at lambda = i * lambda_max / steps, i = 0..steps.
/// Witnesses are chosen lexicographically by (c1, c2, d1) so that they are
/// triobjective extreme points.
inline SweepReport sweep_lambda(const Pblp& p, const Rational& lambda_max, std::size_t steps) {
  if (lambda_max < 0) throw NegativeParameter();
  if (steps == 0) throw std::invalid_argument("sweep needs at least one step");
  const Tolp t = build_tolp(p);
  const std::vector<Vector> ties{p.c1(), p.c2(), p.d1()};
  SweepReport rep;
  for (std::size_t i = 0; i <= steps; ++i) {
    const Rational lambda = lambda_max * static_cast<long>(i) / static_cast<long>(steps);
    std::vector<Image3> imgs;
    for (const auto& pt : dichotomic_bolp(fix_lambda(p, lambda), ties)) imgs.push_back(t.image(pt.witness));
    std::sort(imgs.begin(), imgs.end());
    imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
    rep.grid.push_back(lambda);
    rep.images.push_back(std::move(imgs));
  }
  for (std::size_t i = 0; i + 1 < rep.grid.size(); ++i)
    if (rep.images[i] != rep.images[i + 1]) rep.change_cells.emplace_back(rep.grid[i], rep.grid[i + 1]);
  return rep;
}

/// Checks that every change cell holds exactly one breakpoint and every
/// breakpoint inside the grid range lies in some change cell. Meaningful when
/// the grid spacing is below half the smallest breakpoint gap.
inline bool sweep_agrees(const std::vector<Rational>& breakpoints, const SweepReport& rep,
                         std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  for (const auto& [a, b] : rep.change_cells) {
    std::size_t inside = 0;
    for (const auto& x : breakpoints)
      if (a <= x && x <= b) ++inside;
    if (inside != 1)
      return fail("change cell [" + to_string(a) + ", " + to_string(b) + "] holds " +
                  std::to_string(inside) + " breakpoints");
  }
  for (const auto& x : breakpoints) {
    if (x > rep.grid.back()) continue;
    const bool seen = std::any_of(rep.change_cells.begin(), rep.change_cells.end(),
                                  [&](const auto& c) { return c.first <= x && x <= c.second; });
    if (!seen) return fail("no observed change around breakpoint " + to_string(x));
  }
  return true;
}

/// A grid reaching past the largest breakpoint with spacing at most a third
/// of the smallest gap between breakpoints.
inline std::pair<Rational, std::size_t> sweep_grid_for(const std::vector<Rational>& breakpoints) {
  if (breakpoints.empty()) return {Rational(10), 100};
  Rational gap = breakpoints.back() > 0 ? breakpoints.back() : Rational(1);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    gap = std::min(gap, Rational(breakpoints[i + 1] - breakpoints[i]));
  if (breakpoints.front() > 0) gap = std::min(gap, breakpoints.front());
  const Rational lambda_max = 2 * breakpoints.back() + 1;
  const Rational cells = lambda_max * 3 / gap;
  Integer steps = boost::multiprecision::numerator(cells) / boost::multiprecision::denominator(cells) + 1;
  return {lambda_max, static_cast<std::size_t>(steps.convert_to<unsigned long>())};
}

}  // namespace pblp
