#pragma once

// Problem files, result documents and plot data.
//
// Problem file (line oriented, '#' starts a comment):
//
//   case: 1|2
//   vars: <n>
//   row: >=|<=|= <a_1> ... <a_n> <rhs>     (one line per constraint)
//   c1: <n rationals>
//   c2: <n rationals>
//   d1: <n rationals>
//
// Plot records, comma separated, one per line:
//
//   polygon,<image>,<v1x>,<v1y>,...,~,<v1x decimal>,<v1y decimal>,...
//   segment,<lambda>,<px>,<py>,<qx>,<qy>,~,<px decimal>,...
//
// Images are written "(y1 y2 y3)". Fields after '~' are lossy decimals.

#include "pblp/breakpoints.hpp"
#include "pblp/lp.hpp"
#include "pblp/oracle.hpp"
#include "pblp/problem.hpp"
#include "pblp/rational.hpp"
#include "pblp/wsd.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace pblp {

class BadCase : public Error {
 public:
  BadCase(const std::string& token, std::size_t line)
      : Error("line " + std::to_string(line) + ": case must be 1 or 2, got '" + token + "'") {}
};

using Json = nlohmann::ordered_json;

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

inline Rational parse_token(const Token& t, std::size_t line) {
  try {
    return rat_parse(t.text);
  } catch (const ParseError&) {
    throw ParseError("not a rational: '" + std::string(t.text) + "'", line, t.column);
  } catch (const DivisionByZero&) {
    throw ParseError("zero denominator in '" + std::string(t.text) + "'", line, t.column);
  }
}

}  // namespace detail

inline Pblp parse_problem(std::string_view text) {
  std::optional<Case> which;
  std::optional<std::size_t> n;
  struct RawRow {
    Sense sense;
    Vector values;
    std::size_t line;
  };
  std::vector<RawRow> rows;
  std::optional<Vector> c1, c2, d1;
  std::vector<std::size_t> objective_lines(3, 0);

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto colon = line.find(':');
    const auto head = detail::tokenize(line.substr(0, colon == std::string_view::npos ? line.size() : colon), 0);
    if (head.empty() && colon == std::string_view::npos) continue;
    if (colon == std::string_view::npos || head.size() != 1)
      throw ParseError("expected '<keyword>:'", line_no, head.empty() ? 1 : head.front().column);
    const std::string key(head.front().text);
    const auto body = detail::tokenize(line.substr(colon + 1), colon + 1);

    auto numbers = [&](std::size_t from) {
      Vector v;
      for (std::size_t i = from; i < body.size(); ++i) v.push_back(detail::parse_token(body[i], line_no));
      return v;
    };
    auto single = [&]() -> const detail::Token& {
      if (body.size() != 1) throw ParseError("expected one value after '" + key + ":'", line_no, colon + 2);
      return body.front();
    };

    if (key == "case") {
      if (which) throw ParseError("duplicate 'case'", line_no, head.front().column);
      const auto& t = single();
      if (t.text == "1") which = Case::One;
      else if (t.text == "2") which = Case::Two;
      else throw BadCase(std::string(t.text), line_no);
    } else if (key == "vars") {
      if (n) throw ParseError("duplicate 'vars'", line_no, head.front().column);
      const auto& t = single();
      const Rational v = detail::parse_token(t, line_no);
      if (v < 1 || boost::multiprecision::denominator(v) != 1)
        throw ParseError("'vars' must be a positive integer", line_no, t.column);
      n = static_cast<std::size_t>(boost::multiprecision::numerator(v).convert_to<unsigned long>());
    } else if (key == "row") {
      if (body.empty()) throw ParseError("row needs a sense", line_no, colon + 2);
      Sense s;
      if (body[0].text == ">=") s = Sense::GE;
      else if (body[0].text == "<=") s = Sense::LE;
      else if (body[0].text == "=") s = Sense::EQ;
      else throw ParseError("unknown sense '" + std::string(body[0].text) + "'", line_no, body[0].column);
      rows.push_back({s, numbers(1), line_no});
    } else if (key == "c1" || key == "c2" || key == "d1") {
      auto& slot = key == "c1" ? c1 : key == "c2" ? c2 : d1;
      if (slot) throw ParseError("duplicate '" + key + "'", line_no, head.front().column);
      slot = numbers(0);
      objective_lines[key == "c1" ? 0 : key == "c2" ? 1 : 2] = line_no;
    } else {
      throw ParseError("unknown keyword '" + key + "'", line_no, head.front().column);
    }
  }

  const std::size_t last = line_no;
  if (!which) throw ParseError("missing 'case'", last, 1);
  if (!n) throw ParseError("missing 'vars'", last, 1);
  if (!c1) throw ParseError("missing 'c1'", last, 1);
  if (!c2) throw ParseError("missing 'c2'", last, 1);
  if (!d1) throw ParseError("missing 'd1'", last, 1);

  FeasibleSystem sys;
  sys.variable_count = *n;
  for (auto& r : rows) {
    if (r.values.size() != *n + 1)
      throw DimensionMismatch("line " + std::to_string(r.line) + ": row has " +
                              std::to_string(r.values.size()) + " numbers, expected " +
                              std::to_string(*n + 1));
    sys.rhs.push_back(r.values.back());
    r.values.pop_back();
    sys.matrix.push_back(std::move(r.values));
    sys.senses.push_back(r.sense);
  }
  const std::array<const Vector*, 3> objs{&*c1, &*c2, &*d1};
  const char* names[] = {"c1", "c2", "d1"};
  for (std::size_t k = 0; k < 3; ++k)
    if (objs[k]->size() != *n)
      throw DimensionMismatch("line " + std::to_string(objective_lines[k]) + ": " + names[k] + " has " +
                              std::to_string(objs[k]->size()) + " entries, expected " + std::to_string(*n));
  return Pblp(std::move(sys), std::move(*c1), std::move(*c2), std::move(*d1), *which);
}

namespace detail {

inline std::string join(const Vector& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ' ';
    out += to_string(x);
  }
  return out;
}

}  // namespace detail

/// Canonical problem text; parse_problem(format_problem(p)) == p.
inline std::string format_problem(const Pblp& p) {
  std::ostringstream out;
  out << "case: " << static_cast<int>(p.which()) << '\n';
  out << "vars: " << p.variable_count() << '\n';
  const auto& sys = p.system();
  for (std::size_t i = 0; i < sys.row_count(); ++i)
    out << "row: " << to_string(sys.senses[i]) << ' ' << detail::join(sys.matrix[i]) << ' '
        << to_string(sys.rhs[i]) << '\n';
  out << "c1: " << detail::join(p.c1()) << '\n';
  out << "c2: " << detail::join(p.c2()) << '\n';
  out << "d1: " << detail::join(p.d1()) << '\n';
  return out.str();
}

inline Json to_json(const Rational& r) { return to_string(r); }
inline Json to_json(const ExtendedRational& r) { return to_string(r); }

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

template <std::size_t K>
Json to_json(const std::array<Rational, K>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const ConvexPolygon2& poly) {
  Json a = Json::array();
  for (const auto& p : poly.vertices()) a.push_back(Json::array({to_string(p.x), to_string(p.y)}));
  return a;
}

inline Json problem_json(const Pblp& p) {
  Json rows = Json::array();
  const auto& sys = p.system();
  for (std::size_t i = 0; i < sys.row_count(); ++i)
    rows.push_back({{"sense", to_string(sys.senses[i])},
                    {"coefficients", to_json(sys.matrix[i])},
                    {"rhs", to_string(sys.rhs[i])}});
  return {{"case", static_cast<int>(p.which())},
          {"vars", p.variable_count()},
          {"rows", std::move(rows)},
          {"c1", to_json(p.c1())},
          {"c2", to_json(p.c2())},
          {"d1", to_json(p.d1())}};
}

inline Json components_json(const std::vector<WeightSetComponent>& cs) {
  Json a = Json::array();
  for (const auto& c : cs)
    a.push_back({{"image", to_json(c.extreme.image)},
                 {"witness", to_json(c.extreme.witness)},
                 {"vertices", to_json(c.polygon)}});
  return a;
}

inline Json decomposition_json(const Decomposition& dec) {
  return {{"components", components_json(dec.components)},
          {"boundary", components_json(dec.boundary)},
          {"lp_solves", dec.lp_solves}};
}

inline Json solution_json(const Pblp& p, const ParametricSolution& sol, const Decomposition& dec) {
  Json images = Json::array();
  for (const auto& c : dec.components)
    images.push_back({{"image", to_json(c.extreme.image)}, {"witness", to_json(c.extreme.witness)}});

  Json intervals = Json::array();
  for (const auto& iv : sol.intervals)
    intervals.push_back({{"image", to_json(iv.image)}, {"lower", to_json(iv.lower)}, {"upper", to_json(iv.upper)}});

  Json breakpoints = Json::array();
  for (const auto& b : sol.breakpoints) breakpoints.push_back(to_string(b));

  Json axis = Json::array();
  for (const auto& s : sol.axis) {
    Json witnesses = Json::array();
    for (auto k : s.witnesses) witnesses.push_back(to_json(sol.intervals[k].image));
    axis.push_back({{"lower", to_json(s.lower)},
                    {"upper", to_json(s.upper)},
                    {"lower_closed", s.lower_closed},
                    {"upper_closed", s.upper_closed},
                    {"images", std::move(witnesses)}});
  }

  Json components = Json::array();
  for (const auto& c : dec.components)
    components.push_back({{"image", to_json(c.extreme.image)}, {"vertices", to_json(c.polygon)}});

  return {{"problem", problem_json(p)},
          {"method", to_string(sol.method)},
          {"extreme_images", std::move(images)},
          {"components", std::move(components)},
          {"intervals", std::move(intervals)},
          {"breakpoints", std::move(breakpoints)},
          {"axis", std::move(axis)},
          {"lp_solves", {{"decomposition", dec.lp_solves}, {"intervals", sol.lp_solves}}}};
}

inline std::string emit_solution(const Pblp& p, const ParametricSolution& sol, const Decomposition& dec) {
  return solution_json(p, sol, dec).dump(2) + "\n";
}

inline std::string emit_decomposition(const Pblp& p, const Decomposition& dec) {
  Json doc = {{"problem", problem_json(p)}};
  const Json body = decomposition_json(dec);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  return doc.dump(2) + "\n";
}

inline std::string image_label(const Image3& y) {
  return "(" + to_string(y[0]) + " " + to_string(y[1]) + " " + to_string(y[2]) + ")";
}

inline std::string emit_plot_data(const Decomposition& dec, Case which, const std::vector<Rational>& lambdas) {
  std::ostringstream out;
  auto record = [&](const std::string& kind, const std::string& label, const std::vector<Point2>& pts) {
    out << kind << ',' << label;
    for (const auto& p : pts) out << ',' << to_string(p.x) << ',' << to_string(p.y);
    out << ",~";
    for (const auto& p : pts) out << ',' << to_decimal(p.x) << ',' << to_decimal(p.y);
    out << '\n';
  };
  for (const auto& c : dec.components) record("polygon", image_label(c.extreme.image), c.polygon.vertices());
  for (const auto& l : lambdas) {
    const Segment2 s = segment_for_lambda(which, l);
    record("segment", to_string(l), {s.p, s.q});
  }
  return out.str();
}

inline std::string emit_sweep(const SweepReport& rep) {
  Json grid = Json::array();
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    Json imgs = Json::array();
    for (const auto& y : rep.images[i]) imgs.push_back(to_json(y));
    grid.push_back({{"lambda", to_string(rep.grid[i])}, {"images", std::move(imgs)}});
  }
  Json cells = Json::array();
  for (const auto& [a, b] : rep.change_cells) cells.push_back(Json::array({to_string(a), to_string(b)}));
  return Json{{"grid", std::move(grid)}, {"change_cells", std::move(cells)}}.dump(2) + "\n";
}

}  // namespace pblp
