#pragma once

// Weight set decomposition of the triobjective problem.
//
// Starting from the image optimal at the barycenter, the known image set K
// induces a tentative subdivision of the simplex (each y in K gets the
// weights where it is best within K). Every vertex of every tentative
// component is checked with a lexicographic weighted-sum LP; a vertex whose
// optimum beats the component's image yields a new extreme image and the
// subdivision is rebuilt. When every vertex certifies, the tentative
// components are the true ones: the weighted-sum value function is concave
// and agrees with the linear function w'y at every vertex of W_K(y).

#include "pblp/geometry.hpp"
#include "pblp/lp.hpp"
#include "pblp/problem.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pblp {

class UnboundedScalarization : public Error {
 public:
  explicit UnboundedScalarization(Weight3 w)
      : Error("weighted-sum scalarization is unbounded at w = (" + to_string(w.w1()) + ", " +
              to_string(w.w2()) + ", " + to_string(w.w3()) + ")"),
        weight_(std::move(w)) {}

  const Weight3& weight() const noexcept { return weight_; }

 private:
  Weight3 weight_;
};

class InfeasibleProblem : public Error {
 public:
  InfeasibleProblem() : Error("the feasible set is empty") {}
};

struct ExtremeImage {
  Image3 image;
  Vector witness;
};

struct WeightSetComponent {
  ExtremeImage extreme;
  ConvexPolygon2 polygon;
};

struct Decomposition {
  /// Sorted lexicographically by image; every polygon has positive area.
  std::vector<WeightSetComponent> components;
  /// Images found during the search whose final component has zero area.
  std::vector<WeightSetComponent> boundary;
  std::size_t lp_solves = 0;
  std::size_t rounds = 0;

  std::vector<Image3> images() const {
    std::vector<Image3> out;
    for (const auto& c : components) out.push_back(c.extreme.image);
    return out;
  }
};

/// Lexicographic weighted-sum LP: minimize w'Cx, then c1 x, c2 x, d1 x.
inline ExtremeImage find_extreme_image(const Tolp& t, const Weight3& w) {
  const LpResult r = solve_lex_lp(ws_scalarize(t, w),
                                  {t.objectives[0], t.objectives[1], t.objectives[2]});
  if (r.status == LpStatus::Infeasible) throw InfeasibleProblem();
  if (r.status == LpStatus::Unbounded) throw UnboundedScalarization(w);
  return {t.image(*r.solution), *r.solution};
}

namespace detail {

inline std::vector<Image3> images_except(const std::vector<ExtremeImage>& known, std::size_t skip) {
  std::vector<Image3> out;
  out.reserve(known.size());
  for (std::size_t i = 0; i < known.size(); ++i)
    if (i != skip) out.push_back(known[i].image);
  return out;
}

}  // namespace detail

inline Decomposition decompose(const Tolp& t) {
  Decomposition dec;

  // Up-front boundedness probe; unit weights bound every objective.
  const Rational third(1, 3);
  for (const Weight3& w : {Weight3(1, 0, 0), Weight3(0, 1, 0), Weight3(0, 0, 1),
                           Weight3(third, third, third)}) {
    const LpResult r = solve_lp(ws_scalarize(t, w));
    ++dec.lp_solves;
    if (r.status == LpStatus::Infeasible) throw InfeasibleProblem();
    if (r.status == LpStatus::Unbounded) throw UnboundedScalarization(w);
  }

  std::vector<ExtremeImage> known;
  known.push_back(find_extreme_image(t, Weight3(third, third, third)));
  ++dec.lp_solves;

  std::map<Point2, Rational> optimum;  // certified weighted-sum optimum per weight
  std::vector<ConvexPolygon2> polygons;
  for (;;) {
    ++dec.rounds;
    polygons.clear();
    for (std::size_t k = 0; k < known.size(); ++k) {
      const auto others = detail::images_except(known, k);
      polygons.push_back(component_vertices(known[k].image, others));
    }

    std::vector<ExtremeImage> found;
    for (std::size_t k = 0; k < known.size(); ++k) {
      for (const Point2& v : polygons[k].vertices()) {
        const Weight3 w = Weight3::from_projection(v);
        auto it = optimum.find(v);
        if (it == optimum.end()) {
          ExtremeImage e = find_extreme_image(t, w);
          ++dec.lp_solves;
          it = optimum.emplace(v, w.apply(e.image)).first;
          const bool is_new =
              std::none_of(known.begin(), known.end(), [&](const auto& x) { return x.image == e.image; }) &&
              std::none_of(found.begin(), found.end(), [&](const auto& x) { return x.image == e.image; });
          if (is_new && it->second < w.apply(known[k].image)) found.push_back(std::move(e));
        }
      }
    }
    if (found.empty()) break;
    for (auto& e : found) known.push_back(std::move(e));
  }

  for (std::size_t k = 0; k < known.size(); ++k) {
    for (const Point2& v : polygons[k].vertices()) {
      const Weight3 w = Weight3::from_projection(v);
      if (optimum.at(v) != w.apply(known[k].image))
        throw std::logic_error("decompose: uncertified component vertex");
    }
    WeightSetComponent c{std::move(known[k]), std::move(polygons[k])};
    (c.polygon.full_dimensional() ? dec.components : dec.boundary).push_back(std::move(c));
  }
  auto by_image = [](const WeightSetComponent& a, const WeightSetComponent& b) {
    return a.extreme.image < b.extreme.image;
  };
  std::sort(dec.components.begin(), dec.components.end(), by_image);
  std::sort(dec.boundary.begin(), dec.boundary.end(), by_image);
  return dec;
}

}  // namespace pblp
