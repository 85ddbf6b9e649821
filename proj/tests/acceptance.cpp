// Acceptance criteria. One line per criterion: PASS/FAIL, measured time
// against its limit, and the detail that decided it. All comparisons are
// exact rational equality; the only tolerances are the wall-clock limits.

#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace pblp;
using pblp::testing::I3;
using pblp::testing::P;
using pblp::testing::Q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool ok = o.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %-2s %-44s %8.3fs (limit %6.1fs)  %s\n", ok ? "PASS" : "FAIL", id, title, s, limit_s,
              !o.pass ? o.detail.c_str() : !in_time ? "over time limit" : o.detail.c_str());
  std::fflush(stdout);
}

ConvexPolygon2 ring(std::initializer_list<Point2> pts) { return ConvexPolygon2::from_ring(pts); }

struct Suite {
  std::vector<Pblp> instances;
  std::vector<Decomposition> decompositions;
  std::vector<ParametricSolution> lp, vertex;
};

Suite& random_suite() {
  static Suite suite = [] {
    Suite s;
    std::mt19937_64 rng(20250101);
    for (int i = 0; i < 400; ++i) s.instances.push_back(pblp::testing::random_instance(rng, i % 2 ? Case::One : Case::Two));
    return s;
  }();
  return suite;
}

std::string where(const Pblp& p) { return "instance:\n" + format_problem(p); }

}  // namespace

int main() {
  std::printf("Acceptance suite (exact rational comparisons)\n");

  criterion("1", "Example 2 reproduction", 1.0, [] {
    Outcome o;
    const Pblp p = pblp::testing::example2(Case::Two);
    const Decomposition dec = decompose(build_tolp(p));
    o.require(dec.images() == std::vector<Image3>{I3(0, 5, 5), I3(5, 10, 0), I3(15, 0, 2)}, "Y_EN differs");
    o.require(dec.components.size() == 3 &&
                  dec.components[1].polygon == ring({P("0", "0"), P("1/2", "0"), P("1/5", "3/10"), P("0", "1/6")}),
              "component of (5,10,0) differs");
    o.require(*lambda_from_weight(Case::Two, Weight3(Q("1/2"), 0, Q("1/2"))) == ExtendedRational(1) &&
                  *lambda_from_weight(Case::Two, Weight3(Q("1/5"), Q("3/10"), Q("1/2"))) == ExtendedRational(1),
              "extreme weights do not map to lambda = 1");
    o.detail = "Y_EN = {(0,5,5),(5,10,0),(15,0,2)}; both extreme weights give lambda = 1";
    return o;
  });

  criterion("2", "Example 2 breakpoints, both methods, sweep 1/10", 5.0, [] {
    Outcome o;
    const std::vector<Rational> expected[2] = {{1, Q("5/2")}, {1, 5}};
    for (Case c : {Case::One, Case::Two}) {
      const Pblp p = pblp::testing::example2(c);
      const Decomposition dec = decompose(build_tolp(p));
      const auto lp = enumerate_breakpoints(p, dec, Method::AlgorithmOne);
      const auto vx = enumerate_breakpoints(p, dec, Method::AdaptedWsd);
      const auto& want = expected[c == Case::One ? 0 : 1];
      o.require(lp.breakpoints == want, "AlgorithmOne breakpoints differ");
      o.require(vx.breakpoints == want, "AdaptedWsd breakpoints differ");
      o.require(lp.axis == vx.axis, "axis decompositions differ");
      std::string why;
      o.require(sweep_agrees(want, sweep_lambda(p, 6, 60), &why), "sweep: " + why);
    }
    o.detail = "case One {1, 5/2}, case Two {1, 5}; sweep grid 1/10 on [0, 6]";
    return o;
  });

  criterion("3", "Example 1 reproduction", 1.0, [] {
    Outcome o;
    const Tolp t = build_tolp(pblp::testing::example1(Case::One));
    const Decomposition dec = decompose(t);
    o.require(dec.components.size() == 4, "expected 4 components, got " + std::to_string(dec.components.size()));
    o.require(extreme_nondominated_bruteforce(t) == dec.images(), "oracle disagrees");
    o.detail = "4 full-dimensional components; oracle agrees";
    return o;
  });

  criterion("4", "Method equivalence, 400 random instances", 300.0, [] {
    Outcome o;
    Suite& s = random_suite();
    std::size_t intervals = 0;
    for (const auto& p : s.instances) {
      s.decompositions.push_back(decompose(build_tolp(p)));
      s.lp.push_back(enumerate_breakpoints(p, s.decompositions.back(), Method::AlgorithmOne));
      s.vertex.push_back(enumerate_breakpoints(p, s.decompositions.back(), Method::AdaptedWsd));
      const auto& a = s.lp.back();
      const auto& b = s.vertex.back();
      bool same = a.intervals.size() == b.intervals.size();
      for (std::size_t k = 0; same && k < a.intervals.size(); ++k) same = a.intervals[k].bounds() == b.intervals[k].bounds();
      o.require(same, "interval sets differ; " + where(p));
      o.require(a.breakpoints == b.breakpoints, "breakpoint sets differ; " + where(p));
      o.require(a.axis == b.axis, "axis decompositions differ; " + where(p));
      intervals += a.intervals.size();
    }
    o.detail = std::to_string(s.instances.size()) + " instances (200 per case), " + std::to_string(intervals) +
               " intervals identical";
    return o;
  });

  criterion("5", "Oracle equivalence and tiling", 300.0, [] {
    Outcome o;
    Suite& s = random_suite();
    for (std::size_t i = 0; i < s.instances.size(); ++i) {
      const Tolp t = build_tolp(s.instances[i]);
      const Decomposition& dec = s.decompositions.at(i);
      o.require(extreme_nondominated_bruteforce(t) == dec.images(), "images differ from oracle; " + where(s.instances[i]));
      Rational area = 0;
      for (const auto& c : dec.components) area += c.polygon.area();
      o.require(area == Rational(1, 2), "areas sum to " + to_string(area) + "; " + where(s.instances[i]));
      for (std::size_t a = 0; a < dec.components.size(); ++a)
        for (std::size_t b = a + 1; b < dec.components.size(); ++b)
          o.require(intersect(dec.components[a].polygon, dec.components[b].polygon).twice_area() == 0,
                    "overlapping components; " + where(s.instances[i]));
    }
    o.detail = "images equal brute force; total area 1/2; interiors disjoint";
    return o;
  });

  criterion("6", "Weight-map properties, 10^4 triples", 30.0, [] {
    Outcome o;
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> den(1, 60), lam_num(0, 500), lam_den(1, 30);
    for (int i = 0; i < 10000; ++i) {
      const Case c = i % 2 ? Case::One : Case::Two;
      const long d = den(rng);
      const long a = std::uniform_int_distribution<long>(0, d)(rng);
      const Weight2 w(Rational(a, d), Rational(d - a, d));
      const Rational lambda(lam_num(rng), lam_den(rng));
      const Weight3 s = map_weight_to_simplex(c, w, lambda);
      o.require(s.w1() >= 0 && s.w2() >= 0 && s.w3() >= 0 && s.w1() + s.w2() + s.w3() == 1, "simplex membership");
      const Segment2 seg = segment_for_lambda(c, lambda);
      o.require(cross(seg.p, seg.q, s.projection()) == 0 && s.w1() <= seg.q.x, "segment membership");
      if (c == Case::Two || w.w1() > 0) {
        o.require(*lambda_from_weight(c, s) == ExtendedRational(lambda), "lambda round trip");
        o.require(s.w1() / (1 - s.w3()) == w.w1() && s.w2() / (1 - s.w3()) == w.w2(), "weight round trip");
      } else {
        o.require(s == Weight3(0, 1, 0), "(0,1) must map to (0,1,0)");
      }
      const long d2 = den(rng);
      const long a2 = std::uniform_int_distribution<long>(c == Case::One ? 1 : 0, d2)(rng);
      const Weight2 w2(Rational(a2, d2), Rational(d2 - a2, d2));
      const Rational other = lambda + Rational(lam_num(rng) + 1, lam_den(rng));
      if (c == Case::Two || w.w1() > 0)
        o.require(!(map_weight_to_simplex(c, w, lambda) == map_weight_to_simplex(c, w2, other)), "distinctness");
    }
    o.detail = "round trip, simplex, segment and distinctness hold";
    return o;
  });

  criterion("7", "LP core, 10^3 random LPs + degenerate cases", 60.0, [] {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int i = 0; i < 1000; ++i) {
      const Pblp p = pblp::testing::random_instance(rng, Case::Two);
      Vector c;
      for (std::size_t j = 0; j < p.variable_count(); ++j) c.emplace_back(coef(rng));
      const LinearProgram lp = p.system().with_objective(c);
      const LpResult r = solve_lp(lp);
      o.require(r.optimal(), "bounded feasible LP not solved");
      if (!r.optimal()) break;
      Rational best;
      bool first = true;
      for (const auto& x : enumerate_vertices_bruteforce(p.system())) {
        const Rational v = dot(c, x);
        if (first || v < best) best = v;
        first = false;
      }
      o.require(*r.value == best, "value differs from vertex minimum; " + where(p));
      o.require(dot(*r.dual, lp.rhs) == *r.value, "primal and dual values differ; " + where(p));
    }
    LinearProgram beale;
    beale.objective = {Q("-3/4"), Q("150"), Q("-1/50"), Q("6")};
    beale.constraint_matrix = {{Q("1/4"), Q("-60"), Q("-1/25"), Q("9")},
                               {Q("1/2"), Q("-90"), Q("-1/50"), Q("3")},
                               {Q("0"), Q("0"), Q("1"), Q("0")}};
    beale.rhs = {0, 0, 1};
    beale.senses = {Sense::LE, Sense::LE, Sense::LE};
    const LpResult rb = solve_lp(beale);
    o.require(rb.optimal() && *rb.value == Q("-1/20"), "Beale's cycling example");

    LinearProgram chvatal;
    chvatal.objective = {Q("-10"), Q("57"), Q("9"), Q("24")};
    chvatal.constraint_matrix = {{Q("1/2"), Q("-11/2"), Q("-5/2"), Q("9")},
                                 {Q("1/2"), Q("-3/2"), Q("-1/2"), Q("1")},
                                 {Q("1"), Q("0"), Q("0"), Q("0")}};
    chvatal.rhs = {0, 0, 1};
    chvatal.senses = {Sense::LE, Sense::LE, Sense::LE};
    const LpResult rc = solve_lp(chvatal);
    o.require(rc.optimal() && *rc.value == -1, "Chvatal's cycling example");

    FeasibleSystem fan;
    fan.variable_count = 3;
    for (int k = 1; k <= 8; ++k) {
      fan.matrix.push_back({Rational(k), Rational(k - 9), Rational(1)});
      fan.rhs.emplace_back(0);
      fan.senses.push_back(Sense::LE);
    }
    fan.matrix.push_back({Rational(1), Rational(1), Rational(1)});
    fan.rhs.emplace_back(1);
    fan.senses.push_back(Sense::LE);
    const Vector fan_c = {Rational(-1), Rational(-1), Rational(-2)};
    const LpResult rf = solve_lp(fan.with_objective(fan_c));
    Rational fan_best = 0;
    for (const auto& x : enumerate_vertices_bruteforce(fan)) fan_best = std::min(fan_best, dot(fan_c, x));
    o.require(rf.optimal() && *rf.value == fan_best, "degenerate vertex with eight tight rows");
    o.detail = "1000 LPs match vertex minimum with equal dual value; 3 degenerate instances terminate";
    return o;
  });

  criterion("8", "Breakpoint count and vertex origin", 300.0, [] {
    Outcome o;
    Suite& s = random_suite();
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.instances.size(); ++i) {
      const Case c = s.instances[i].which();
      const Decomposition& dec = s.decompositions.at(i);
      const auto& sol = s.lp.at(i);
      std::size_t vertices = 0;
      for (const auto& comp : dec.components) vertices += comp.polygon.size();
      o.require(sol.breakpoints.size() <= vertices, "|B| exceeds vertex count; " + where(s.instances[i]));
      for (const auto& b : sol.breakpoints) {
        bool found = false;
        for (const auto& comp : dec.components)
          for (const auto& v : comp.polygon.vertices()) {
            const auto l = lambda_from_weight(c, Weight3::from_projection(v));
            found = found || (l && *l == ExtendedRational(b));
          }
        o.require(found, "breakpoint " + to_string(b) + " not at a vertex; " + where(s.instances[i]));
      }
      total += sol.breakpoints.size();
    }
    o.detail = std::to_string(total) + " breakpoints, each at a component vertex";
    return o;
  });

  criterion("9", "Interval LP count <= 2|Y_EN|", 1.0, [] {
    Outcome o;
    Suite& s = random_suite();
    std::size_t lps = 0, images = 0;
    for (std::size_t i = 0; i < s.instances.size(); ++i) {
      o.require(s.lp.at(i).lp_solves <= 2 * s.decompositions.at(i).components.size(), "too many LPs");
      lps += s.lp[i].lp_solves;
      images += s.decompositions[i].components.size();
    }
    o.detail = std::to_string(lps) + " interval LPs for " + std::to_string(images) + " extreme images";
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
