#pragma once

#include "pblp/pblp.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace pblp::testing {

inline Rational Q(const char* text) { return rat_parse(text); }

inline Vector V(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Image3 I3(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

inline Point2 P(const char* x, const char* y) { return {Q(x), Q(y)}; }

inline std::string read_instance_text(const std::string& name) {
  std::ifstream in(std::string(PBLP_INSTANCE_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Pblp load_instance(const std::string& name) { return parse_problem(read_instance_text(name)); }

inline FeasibleSystem example1_system() {
  FeasibleSystem s;
  s.variable_count = 2;
  s.matrix = {V({3, 2}), V({1, 0}), V({0, 1})};
  s.rhs = V({6, 10, 3});
  s.senses = {Sense::GE, Sense::LE, Sense::LE};
  return s;
}

inline Pblp example1(Case which) {
  return Pblp(example1_system(), V({-3, -1}), V({1, -2}), V({1, 1}), which);
}

inline FeasibleSystem example2_system() {
  FeasibleSystem s;
  s.variable_count = 3;
  s.matrix = {V({2, 3, 5}), V({2, 15, -15}), V({2, -1, 1}), V({2, -1, -15})};
  s.rhs = V({40, 0, 0, 0});
  s.senses = {Sense::GE, Sense::GE, Sense::GE, Sense::LE};
  return s;
}

inline Pblp example2(Case which) {
  return Pblp(example2_system(), V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1}), which);
}

/// Random bounded, feasible instance: n <= 5 variables, m <= 7 rows, integer
/// data in [-9, 9]. The first row caps the sum of the variables.
inline Pblp random_instance(std::mt19937_64& rng, Case which) {
  std::uniform_int_distribution<int> coef(-9, 9), nvar(2, 5), cap(1, 9), sense(0, 9);
  for (;;) {
    FeasibleSystem s;
    s.variable_count = static_cast<std::size_t>(nvar(rng));
    const int m = std::uniform_int_distribution<int>(1, 7)(rng);
    s.matrix.push_back(Vector(s.variable_count, Rational(1)));
    s.rhs.emplace_back(cap(rng));
    s.senses.push_back(Sense::LE);
    for (int i = 1; i < m; ++i) {
      Vector row;
      for (std::size_t j = 0; j < s.variable_count; ++j) row.emplace_back(coef(rng));
      s.matrix.push_back(std::move(row));
      s.rhs.emplace_back(coef(rng));
      const int k = sense(rng);
      s.senses.push_back(k < 5 ? Sense::GE : k < 9 ? Sense::LE : Sense::EQ);
    }
    auto objective = [&]() {
      Vector c;
      for (std::size_t j = 0; j < s.variable_count; ++j) c.emplace_back(coef(rng));
      return c;
    };
    Vector c1 = objective(), c2 = objective(), d1 = objective();
    bool parametric = false;
    for (const auto& v : d1) parametric = parametric || v != 0;
    if (!parametric) continue;
    if (!solve_lp(s.with_objective(Vector(s.variable_count, Rational(0)))).optimal()) continue;
    return Pblp(std::move(s), std::move(c1), std::move(c2), std::move(d1), which);
  }
}

inline Rational random_rational(std::mt19937_64& rng, long num_range = 20, long den_max = 12) {
  const long num = std::uniform_int_distribution<long>(-num_range, num_range)(rng);
  const long den = std::uniform_int_distribution<long>(1, den_max)(rng);
  return Rational(num, den);
}

}  // namespace pblp::testing
