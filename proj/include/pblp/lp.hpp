#pragma once

// Exact two-phase tableau simplex with Bland's rule.
//
// Problems are posed as   min c'x  s.t.  a_i x {>=,=,<=} b_i,  x_j >= 0 or free.
// Free columns are split into x+ - x-. Every row gets one identity column in
// the starting basis (slack for <=, artificial for >= and =), and those
// columns are kept in the tableau through phase 2 so B^-1, and therefore
// the row duals, can be read off the final tableau.

#include "pblp/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pblp {

enum class Sense { GE, EQ, LE };

inline const char* to_string(Sense s) {
  switch (s) {
    case Sense::GE: return ">=";
    case Sense::EQ: return "=";
    case Sense::LE: return "<=";
  }
  return "?";
}

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

struct LinearProgram {
  Vector objective;
  Matrix constraint_matrix;
  Vector rhs;
  std::vector<Sense> senses;
  /// Per variable: true means x_j >= 0, false means free. Empty means all
  /// variables are sign restricted.
  std::vector<bool> sign_restricted;

  std::size_t variable_count() const noexcept { return objective.size(); }
  std::size_t row_count() const noexcept { return constraint_matrix.size(); }

  bool restricted(std::size_t j) const {
    return sign_restricted.empty() || sign_restricted[j];
  }

  void validate() const {
    const std::size_t n = objective.size();
    if (rhs.size() != constraint_matrix.size() || senses.size() != constraint_matrix.size())
      throw DimensionMismatch("linear program: row counts of matrix, rhs and senses differ");
    for (const auto& row : constraint_matrix)
      if (row.size() != n) throw DimensionMismatch("linear program: row length != variable count");
    if (!sign_restricted.empty() && sign_restricted.size() != n)
      throw DimensionMismatch("linear program: sign flags length != variable count");
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vector> solution;
  std::optional<Rational> value;
  /// Row duals of the primary objective, signed so that dual'rhs == value:
  /// >= rows get y >= 0, <= rows y <= 0, = rows are free.
  std::optional<Vector> dual;

  bool optimal() const noexcept { return status == LpStatus::Optimal; }
};

namespace detail {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) {
    lp.validate();
    const std::size_t n = lp.variable_count();
    const std::size_t m = lp.row_count();

    // Structural columns.
    pos_col_.assign(n, 0);
    neg_col_.assign(n, npos);
    for (std::size_t j = 0; j < n; ++j) {
      pos_col_[j] = cols_++;
      if (!lp.restricted(j)) neg_col_[j] = cols_++;
    }

    // Normalize rows to a nonnegative right-hand side.
    flipped_.assign(m, false);
    std::vector<Sense> sense(lp.senses);
    for (std::size_t i = 0; i < m; ++i) {
      if (lp.rhs[i] < 0) {
        flipped_[i] = true;
        if (sense[i] == Sense::GE) sense[i] = Sense::LE;
        else if (sense[i] == Sense::LE) sense[i] = Sense::GE;
      }
    }

    // Auxiliary columns: surplus for >= rows, then one identity column per row.
    std::vector<std::size_t> surplus(m, npos);
    for (std::size_t i = 0; i < m; ++i)
      if (sense[i] == Sense::GE) surplus[i] = cols_++;
    identity_col_.assign(m, 0);
    artificial_.clear();
    for (std::size_t i = 0; i < m; ++i) {
      identity_col_[i] = cols_++;
      if (sense[i] != Sense::LE) artificial_.push_back(identity_col_[i]);
    }
    is_artificial_.assign(cols_, false);
    for (auto c : artificial_) is_artificial_[c] = true;

    rows_.assign(m, Vector(cols_ + 1, Rational(0)));
    basis_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational sign = flipped_[i] ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < n; ++j) {
        const Rational a = sign * lp.constraint_matrix[i][j];
        rows_[i][pos_col_[j]] = a;
        if (neg_col_[j] != npos) rows_[i][neg_col_[j]] = -a;
      }
      if (surplus[i] != npos) rows_[i][surplus[i]] = -1;
      rows_[i][identity_col_[i]] = 1;
      rows_[i][cols_] = sign * lp.rhs[i];
      basis_[i] = identity_col_[i];
    }
    allowed_.assign(cols_, true);
  }

  /// Phase 1. Returns false when the system is infeasible.
  bool find_feasible_basis() {
    Vector cost(cols_, Rational(0));
    for (auto c : artificial_) cost[c] = 1;
    set_costs(cost);
    run();  // phase 1 is bounded below by 0
    if (reduced_[cols_] != 0) return false;  // -(objective) stored in the last slot

    // Drive zero-level artificials out of the basis where possible; rows
    // with no non-artificial entry are redundant and keep their artificial.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!is_artificial_[basis_[i]]) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!is_artificial_[j] && rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    for (auto c : artificial_) allowed_[c] = false;
    return true;
  }

  /// Optimizes `objective` (over original variables) from the current basis.
  /// Returns false when unbounded.
  bool optimize(const Vector& objective) {
    Vector cost(cols_, Rational(0));
    for (std::size_t j = 0; j < objective.size(); ++j) {
      cost[pos_col_[j]] = objective[j];
      if (neg_col_[j] != npos) cost[neg_col_[j]] = -objective[j];
    }
    set_costs(cost);
    return run();
  }

  /// Restricts later stages to the optimal face of the current objective.
  void fix_optimal_face() {
    std::vector<bool> basic(cols_, false);
    for (auto b : basis_) basic[b] = true;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!basic[j] && reduced_[j] > 0) allowed_[j] = false;
  }

  Vector duals() const {
    Vector y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational yi = -reduced_[identity_col_[i]];  // identity columns cost 0
      y[i] = flipped_[i] ? Rational(-yi) : yi;
    }
    return y;
  }

  Vector solution() const {
    Vector col_value(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) col_value[basis_[i]] = rows_[i][cols_];
    Vector x(pos_col_.size());
    for (std::size_t j = 0; j < pos_col_.size(); ++j) {
      x[j] = col_value[pos_col_[j]];
      if (neg_col_[j] != npos) x[j] -= col_value[neg_col_[j]];
    }
    return x;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void set_costs(const Vector& cost) {
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (rows_[i][j] != 0) reduced_[j] -= cb * rows_[i][j];
    }
  }

  // Bland: lowest-index improving column, ties in the ratio test broken by
  // the lowest basic index.
  bool run() {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed_[j] && reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return true;

      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][cols_] / a;
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Vector& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (auto& v : prow)
      if (v != 0) v *= inv;
    auto eliminate = [&](Vector& row) {
      const Rational f = row[c];
      if (f == 0) return;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    if (!reduced_.empty()) eliminate(reduced_);
    basis_[r] = c;
  }

  std::size_t cols_ = 0;
  std::vector<std::size_t> pos_col_, neg_col_, identity_col_, artificial_, basis_;
  std::vector<bool> flipped_, is_artificial_, allowed_;
  Matrix rows_;
  Vector reduced_;
};

inline LpResult solve_impl(const LinearProgram& lp, const std::vector<Vector>& ties) {
  Tableau t(lp);
  LpResult result;
  if (!t.find_feasible_basis()) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  if (!t.optimize(lp.objective)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  Vector dual = t.duals();
  for (const auto& tie : ties) {
    if (tie.size() != lp.variable_count())
      throw DimensionMismatch("tie objective length != variable count");
    t.fix_optimal_face();
    if (!t.optimize(tie)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
  }
  result.status = LpStatus::Optimal;
  result.solution = t.solution();
  result.value = dot(lp.objective, *result.solution);
  result.dual = std::move(dual);
  return result;
}

}  // namespace detail

/// Solves min objective'x. Optimal answers are basic feasible solutions.
inline LpResult solve_lp(const LinearProgram& lp) { return detail::solve_impl(lp, {}); }

/// Among the optimal solutions of `lp`, returns one that minimizes
/// `tie_objectives` lexicographically. `value` and `dual` refer to the
/// primary objective.
inline LpResult solve_lex_lp(const LinearProgram& lp, const std::vector<Vector>& tie_objectives) {
  return detail::solve_impl(lp, tie_objectives);
}

}  // namespace pblp
