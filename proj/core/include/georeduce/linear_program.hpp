#pragma once

#include <vector>

#include "georeduce/rational.hpp"

namespace georeduce::geom3d {

// Exact dense simplex over the rationals (two phases, Bland's rule). Sized
// for the handful of variables the facet-witness problems use.
//
//   maximize    objective . x
//   subject to  row_i . x  (<=, >=, ==)  rhs_i,   x >= 0
class LinearProgram {
 public:
  enum class Relation { kLessEqual, kGreaterEqual, kEqual };
  enum class Status { kOptimal, kInfeasible, kUnbounded };

  struct Result {
    Status status = Status::kInfeasible;
    std::vector<Rational> x;
    Rational objective;
  };

  explicit LinearProgram(std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }

  void set_objective(std::vector<Rational> coefficients);
  void add_constraint(std::vector<Rational> row, Relation rel, Rational rhs);

  Result maximize() const;

 private:
  struct Constraint {
    std::vector<Rational> row;
    Relation rel;
    Rational rhs;
  };

  std::size_t num_vars_;
  std::vector<Rational> objective_;
  std::vector<Constraint> constraints_;
};

}  // namespace georeduce::geom3d
