#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pblp;
using pblp::testing::I3;
using pblp::testing::P;
using pblp::testing::Q;
using pblp::testing::V;

namespace {

ConvexPolygon2 ring(std::initializer_list<Point2> pts) { return ConvexPolygon2::from_ring(pts); }

void expect_certified(const Tolp& t, const Decomposition& dec) {
  Rational area = 0;
  for (const auto& c : dec.components) {
    EXPECT_EQ(t.image(c.extreme.witness), c.extreme.image);
    EXPECT_TRUE(c.polygon.full_dimensional());
    area += c.polygon.area();
    for (const auto& v : c.polygon.vertices()) {
      const Weight3 w = Weight3::from_projection(v);
      EXPECT_EQ(*solve_lp(ws_scalarize(t, w)).value, w.apply(c.extreme.image));
    }
  }
  EXPECT_EQ(area, Q("1/2"));
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    for (std::size_t j = i + 1; j < dec.components.size(); ++j)
      EXPECT_EQ(intersect(dec.components[i].polygon, dec.components[j].polygon).twice_area(), 0);
}

}  // namespace

TEST(FindExtremeImage, SecondExample) {
  const Tolp t = build_tolp(pblp::testing::example2(Case::Two));
  const Rational third(1, 3);
  EXPECT_EQ(find_extreme_image(t, Weight3(third, third, third)).image, I3(0, 5, 5));
  EXPECT_EQ(find_extreme_image(t, Weight3(1, 0, 0)).image, I3(0, 5, 5));
  EXPECT_EQ(find_extreme_image(t, Weight3(0, 0, 1)).image, I3(5, 10, 0));
}

TEST(FindExtremeImage, UnboundedWeightIsReported) {
  FeasibleSystem s;
  s.variable_count = 2;
  s.matrix = {V({1, 1})};
  s.rhs = V({1});
  s.senses = {Sense::GE};
  const Tolp t{s, {V({1, 0}), V({-1, 1}), V({0, 1})}};
  try {
    find_extreme_image(t, Weight3(0, 1, 0));
    FAIL() << "expected UnboundedScalarization";
  } catch (const UnboundedScalarization& e) {
    EXPECT_EQ(e.weight(), Weight3(0, 1, 0));
  }
  EXPECT_THROW(decompose(t), UnboundedScalarization);
}

TEST(Decompose, InfeasibleProblem) {
  FeasibleSystem s;
  s.variable_count = 1;
  s.matrix = {V({1}), V({1})};
  s.rhs = V({2, 1});
  s.senses = {Sense::GE, Sense::LE};
  EXPECT_THROW(decompose(Tolp{s, {V({1}), V({1}), V({1})}}), InfeasibleProblem);
}

TEST(Decompose, SecondExample) {
  const Tolp t = build_tolp(pblp::testing::example2(Case::Two));
  const Decomposition dec = decompose(t);
  ASSERT_EQ(dec.images(), (std::vector<Image3>{I3(0, 5, 5), I3(5, 10, 0), I3(15, 0, 2)}));
  EXPECT_EQ(dec.components[0].polygon, ring({P("1/2", "0"), P("1", "0"), P("1/4", "3/4"), P("1/5", "3/10")}));
  EXPECT_EQ(dec.components[1].polygon, ring({P("0", "0"), P("1/2", "0"), P("1/5", "3/10"), P("0", "1/6")}));
  EXPECT_EQ(dec.components[2].polygon, ring({P("0", "1/6"), P("1/5", "3/10"), P("1/4", "3/4"), P("0", "1")}));
  expect_certified(t, dec);
}

TEST(Decompose, FirstExample) {
  const Tolp t = build_tolp(pblp::testing::example1(Case::One));
  const Decomposition dec = decompose(t);
  ASSERT_EQ(dec.components.size(), 4u);
  EXPECT_EQ(dec.images(),
            (std::vector<Image3>{I3(-33, 4, 13), I3(-30, 10, 10), I3(-6, 2, 2), I3(-3, -6, 3)}));
  EXPECT_EQ(dec.components[0].polygon,
            ring({P("1/2", "0"), P("1", "0"), P("1/4", "3/4"), P("1/4", "1/6")}));
  EXPECT_EQ(dec.components[1].polygon, ring({P("1/4", "0"), P("1/2", "0"), P("1/4", "1/6")}));
  EXPECT_EQ(dec.components[2].polygon, ring({P("0", "0"), P("1/4", "0"), P("1/4", "1/6"), P("0", "1/9")}));
  EXPECT_EQ(dec.components[3].polygon,
            ring({P("0", "1/9"), P("1/4", "1/6"), P("1/4", "3/4"), P("0", "1")}));
  EXPECT_EQ(dec.components[0].extreme.witness, V({10, 3}));
  EXPECT_EQ(dec.components[3].extreme.witness, V({0, 3}));
  expect_certified(t, dec);
}

TEST(Decompose, SinglePointFeasibleSet) {
  FeasibleSystem s;
  s.variable_count = 2;
  s.matrix = {V({1, 0}), V({0, 1})};
  s.rhs = V({2, 3});
  s.senses = {Sense::EQ, Sense::EQ};
  const Tolp t{s, {V({1, 0}), V({0, 1}), V({1, 1})}};
  const Decomposition dec = decompose(t);
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_EQ(dec.components[0].extreme.image, I3(2, 3, 5));
  EXPECT_EQ(dec.components[0].polygon, weight_simplex());
}

TEST(Decompose, NonExtremeImagesLandOnBoundaryOrVanish) {
  // A segment of images: only the endpoints are extreme.
  FeasibleSystem s;
  s.variable_count = 2;
  s.matrix = {V({1, 1})};
  s.rhs = V({1});
  s.senses = {Sense::EQ};
  const Tolp t{s, {V({1, 0}), V({0, 1}), V({1, 1})}};
  const Decomposition dec = decompose(t);
  EXPECT_EQ(dec.images(), (std::vector<Image3>{I3(0, 1, 1), I3(1, 0, 1)}));
  for (const auto& b : dec.boundary) EXPECT_FALSE(b.polygon.full_dimensional());
}

TEST(Decompose, Deterministic) {
  const Tolp t = build_tolp(pblp::testing::example1(Case::Two));
  const Decomposition a = decompose(t), b = decompose(t);
  ASSERT_EQ(a.components.size(), b.components.size());
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    EXPECT_EQ(a.components[i].extreme.image, b.components[i].extreme.image);
    EXPECT_EQ(a.components[i].extreme.witness, b.components[i].extreme.witness);
    EXPECT_EQ(a.components[i].polygon, b.components[i].polygon);
  }
  EXPECT_EQ(a.lp_solves, b.lp_solves);
}

TEST(Decompose, RandomInstancesMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Pblp p = pblp::testing::random_instance(rng, Case::One);
    const Tolp t = build_tolp(p);
    const Decomposition dec = decompose(t);
    ASSERT_EQ(dec.images(), extreme_nondominated_bruteforce(t)) << format_problem(p);
    expect_certified(t, dec);
  }
}
