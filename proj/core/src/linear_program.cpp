#include "georeduce/linear_program.hpp"

#include <cassert>
#include <optional>

#include "georeduce/errors.hpp"

namespace georeduce::geom3d {
namespace {

struct Tableau {
  std::vector<std::vector<Rational>> rows;  // last column is the rhs
  std::vector<std::size_t> basis;
  std::size_t columns = 0;

  Rational& rhs(std::size_t i) { return rows[i][columns]; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j) {
        if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
      }
    }
    basis[r] = c;
  }
};

enum class Outcome { kOptimal, kUnbounded };

// Maximizes cost . x over the tableau, never entering a column with
// allowed[j] == false. Bland's rule: lowest-index improving column, ties in
// the ratio test broken by the lowest basic variable.
Outcome run_simplex(Tableau& t, const std::vector<Rational>& cost,
                    const std::vector<bool>& allowed) {
  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < t.columns && !entering; ++j) {
      if (!allowed[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.rows[i][j].is_zero()) reduced -= cost[t.basis[i]] * t.rows[i][j];
      }
      if (reduced.sign() > 0) entering = j;
    }
    if (!entering) return Outcome::kOptimal;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const Rational& a = t.rows[i][*entering];
      if (a.sign() <= 0) continue;
      const Rational ratio = t.rhs(i) / a;
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[*leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (!leaving) return Outcome::kUnbounded;
    t.pivot(*leaving, *entering);
  }
}

}  // namespace

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), objective_(num_vars, Rational(0)) {}

void LinearProgram::set_objective(std::vector<Rational> coefficients) {
  if (coefficients.size() != num_vars_) {
    throw Error(ErrorCode::kInvalidInput, "objective size mismatch");
  }
  objective_ = std::move(coefficients);
}

void LinearProgram::add_constraint(std::vector<Rational> row, Relation rel,
                                   Rational rhs) {
  if (row.size() != num_vars_) {
    throw Error(ErrorCode::kInvalidInput, "constraint size mismatch");
  }
  constraints_.push_back({std::move(row), rel, std::move(rhs)});
}

LinearProgram::Result LinearProgram::maximize() const {
  // Normalise to nonnegative right-hand sides.
  std::vector<Constraint> cons = constraints_;
  for (auto& c : cons) {
    if (c.rhs.sign() < 0) {
      for (auto& v : c.row) v = -v;
      c.rhs = -c.rhs;
      if (c.rel == Relation::kLessEqual) {
        c.rel = Relation::kGreaterEqual;
      } else if (c.rel == Relation::kGreaterEqual) {
        c.rel = Relation::kLessEqual;
      }
    }
  }

  const std::size_t m = cons.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& c : cons) {
    if (c.rel != Relation::kEqual) ++slack_count;
    if (c.rel != Relation::kLessEqual) ++artificial_count;
  }
  const std::size_t first_slack = num_vars_;
  const std::size_t first_artificial = first_slack + slack_count;

  Tableau t;
  t.columns = first_artificial + artificial_count;
  t.rows.assign(m, std::vector<Rational>(t.columns + 1, Rational(0)));
  t.basis.assign(m, 0);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = cons[i];
    for (std::size_t j = 0; j < num_vars_; ++j) t.rows[i][j] = c.row[j];
    t.rhs(i) = c.rhs;
    switch (c.rel) {
      case Relation::kLessEqual:
        t.rows[i][next_slack] = 1;
        t.basis[i] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t.rows[i][next_slack++] = -1;
        t.rows[i][next_artificial] = 1;
        t.basis[i] = next_artificial++;
        break;
      case Relation::kEqual:
        t.rows[i][next_artificial] = 1;
        t.basis[i] = next_artificial++;
        break;
    }
  }

  Result result;
  std::vector<bool> allowed(t.columns, true);
  if (artificial_count > 0) {
    std::vector<Rational> phase1(t.columns, Rational(0));
    for (std::size_t j = first_artificial; j < t.columns; ++j) phase1[j] = -1;
    run_simplex(t, phase1, allowed);
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] >= first_artificial && t.rhs(i).sign() != 0) {
        result.status = Status::kInfeasible;
        return result;
      }
    }
    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial && !col; ++j) {
        if (!t.rows[i][j].is_zero()) col = j;
      }
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = first_artificial; j < t.columns; ++j) allowed[j] = false;
  }

  std::vector<Rational> cost(t.columns, Rational(0));
  for (std::size_t j = 0; j < num_vars_; ++j) cost[j] = objective_[j];
  if (run_simplex(t, cost, allowed) == Outcome::kUnbounded) {
    result.status = Status::kUnbounded;
    return result;
  }
  result.status = Status::kOptimal;
  result.x.assign(num_vars_, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < num_vars_) result.x[t.basis[i]] = t.rhs(i);
  }
  result.objective = Rational(0);
  for (std::size_t j = 0; j < num_vars_; ++j) {
    result.objective += objective_[j] * result.x[j];
  }
  return result;
}

}  // namespace georeduce::geom3d
