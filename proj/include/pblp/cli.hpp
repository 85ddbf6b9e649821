#pragma once

// Command line front end: solve, decompose, sweep and check.
//
// Exit codes: 0 success, 1 usage, 2 parse or validation error,
// 3 computational error, 4 check mismatch.

#include "pblp/breakpoints.hpp"
#include "pblp/io.hpp"
#include "pblp/oracle.hpp"
#include "pblp/wsd.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pblp {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kCompute = 3, kMismatch = 4 };

struct CheckReport {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

/// Both breakpoint methods, the brute-force image oracle and the lambda sweep.
inline CheckReport check_instance(const Pblp& p, std::optional<Rational> lambda_max = std::nullopt,
                                  std::optional<std::size_t> steps = std::nullopt) {
  CheckReport rep;
  const Tolp t = build_tolp(p);
  const Decomposition dec = decompose(t);
  const ParametricSolution lp = enumerate_breakpoints(p, dec, Method::AlgorithmOne);
  const ParametricSolution vx = enumerate_breakpoints(p, dec, Method::AdaptedWsd);

  for (std::size_t k = 0; k < lp.intervals.size(); ++k)
    if (lp.intervals[k].bounds() != vx.intervals[k].bounds())
      rep.failures.push_back("interval of " + image_label(lp.intervals[k].image) + " differs: lp [" +
                             to_string(lp.intervals[k].lower) + ", " + to_string(lp.intervals[k].upper) +
                             "], adapted [" + to_string(vx.intervals[k].lower) + ", " +
                             to_string(vx.intervals[k].upper) + "]");
  if (lp.breakpoints != vx.breakpoints) rep.failures.push_back("breakpoint sets differ between methods");
  if (lp.axis != vx.axis) rep.failures.push_back("axis decompositions differ between methods");
  if (lp.lp_solves > 2 * dec.components.size())
    rep.failures.push_back("interval LP count " + std::to_string(lp.lp_solves) + " exceeds 2|Y_EN|");

  Rational area = 0;
  for (const auto& c : dec.components) area += c.polygon.area();
  if (area != Rational(1, 2)) rep.failures.push_back("component areas sum to " + to_string(area));

  try {
    if (extreme_nondominated_bruteforce(t) != dec.images())
      rep.failures.push_back("decomposition images differ from brute-force enumeration");
  } catch (const TooLarge&) {
    rep.notes.push_back("brute-force enumeration skipped: too many candidate bases");
  } catch (const UnboundedFeasibleSet&) {
    rep.notes.push_back("brute-force enumeration skipped: unbounded feasible set");
  }

  auto [auto_max, auto_steps] = sweep_grid_for(lp.breakpoints);
  const SweepReport sweep = sweep_lambda(p, lambda_max.value_or(auto_max), steps.value_or(auto_steps));
  std::string why;
  if (!sweep_agrees(lp.breakpoints, sweep, &why)) rep.failures.push_back("sweep: " + why);
  return rep;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Breakpoints of parametric biobjective linear programs"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress timing and notes on stderr");

  std::string file, method = "lp", plot_out, lambda_max_text;
  std::vector<std::string> plot_lambdas;
  std::size_t steps = 0;

  auto* solve = app.add_subcommand("solve", "Decompose and enumerate breakpoints");
  solve->add_option("file", file, "Problem file")->required();
  solve->add_option("--method", method, "Interval method")->check(CLI::IsMember({"lp", "adapted"}));
  solve->add_option("--plot-out", plot_out, "Write plot data to PATH");
  solve->add_option("--plot-lambda", plot_lambdas, "Lambda values for plot segments");

  auto* decomp = app.add_subcommand("decompose", "Weight set decomposition only");
  decomp->add_option("file", file, "Problem file")->required();
  decomp->add_option("--plot-out", plot_out, "Write plot data to PATH");
  decomp->add_option("--plot-lambda", plot_lambdas, "Lambda values for plot segments");

  auto* sweep = app.add_subcommand("sweep", "Grid sweep with the dichotomic method");
  sweep->add_option("file", file, "Problem file")->required();
  sweep->add_option("--lambda-max", lambda_max_text, "Largest grid value (default 10)");
  sweep->add_option("--steps", steps, "Number of grid cells (default 100)");

  auto* check = app.add_subcommand("check", "Cross-check both methods against the oracles");
  check->add_option("file", file, "Problem file")->required();
  check->add_option("--lambda-max", lambda_max_text, "Largest sweep grid value");
  check->add_option("--steps", steps, "Number of sweep grid cells");

  for (auto* sub : {solve, decomp, sweep, check}) sub->add_flag("--quiet", quiet, "Suppress stderr notes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto log_time = [&]() {
    if (quiet) return;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    err << "time: " << ms.count() << " ms\n";
  };

  Pblp* problem = nullptr;
  std::optional<Pblp> holder;
  std::optional<Rational> lambda_max;
  std::vector<Rational> lambdas;
  try {
    holder.emplace(parse_problem(detail::read_file(file)));
    problem = &*holder;
    if (!lambda_max_text.empty()) {
      lambda_max = rat_parse(lambda_max_text);
      if (*lambda_max < 0) throw ParseError("--lambda-max must be nonnegative");
    }
    for (const auto& s : plot_lambdas) {
      lambdas.push_back(rat_parse(s));
      if (lambdas.back() < 0) throw ParseError("--plot-lambda values must be nonnegative");
    }
  } catch (const Error& e) {
    err << "error: " << file << ": " << e.what() << "\n";
    return kInput;
  }

  try {
    const Pblp& p = *problem;
    if (*sweep) {
      const std::size_t n = steps == 0 ? 100 : steps;
      out << emit_sweep(sweep_lambda(p, lambda_max.value_or(Rational(10)), n));
      log_time();
      return kOk;
    }
    if (*check) {
      const CheckReport rep =
          check_instance(p, lambda_max, steps == 0 ? std::nullopt : std::optional<std::size_t>(steps));
      if (!quiet)
        for (const auto& n : rep.notes) err << "note: " << n << "\n";
      for (const auto& f : rep.failures) err << "mismatch: " << f << "\n";
      log_time();
      return rep.ok() ? kOk : kMismatch;
    }

    const Decomposition dec = decompose(build_tolp(p));
    if (*solve) {
      const Method m = method == "adapted" ? Method::AdaptedWsd : Method::AlgorithmOne;
      out << emit_solution(p, enumerate_breakpoints(p, dec, m), dec);
    } else {
      out << emit_decomposition(p, dec);
    }
    if (!plot_out.empty()) {
      std::ofstream plot(plot_out, std::ios::binary);
      if (!plot) {
        err << "error: cannot write '" << plot_out << "'\n";
        return kUsage;
      }
      plot << emit_plot_data(dec, p.which(), lambdas);
    }
    log_time();
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCompute;
  }
}

}  // namespace pblp
