#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nebc/rational.hpp"

namespace nebc {

enum class Rel { Le, Eq, Ge };
enum class Sense { Max, Min };
enum class LpStatus { Optimal, Infeasible, Unbounded, Feasible };

struct LpRow {
  std::vector<Rational> coeffs;
  Rel rel = Rel::Le;
  Rational rhs;
};

// All variables are non-negative. Rows/columns dense; fine at desk scale.
struct LpProblem {
  Sense sense = Sense::Max;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;

  size_t cols() const { return objective.size(); }
  void validate() const;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  // One dual per row, oriented so that sum_i duals[i]*rhs[i] equals the
  // objective on optimal solves (strong duality, checked exactly).
  std::vector<Rational> duals;
  // Structural columns in the final basis.
  std::vector<int> basis;
  long pivots = 0;

  int support() const {
    int s = 0;
    for (const auto& v : x)
      if (v != 0) ++s;
    return s;
  }
};

// Exact two-phase primal simplex with Bland's rule (no cycling, no floats).
LpSolution lp_solve(const LpProblem& problem);

// Purifies a feasible point into a basic one with the same or better
// objective; support (over structural + slack variables) ends <= #rows.
LpSolution to_basic(const LpProblem& problem, const std::vector<Rational>& x);

struct LpColumn {
  Rational objective;
  std::vector<Rational> coeffs;  // one per master row
};

using Pricer = std::function<std::optional<LpColumn>(const std::vector<Rational>& duals)>;

struct ColGenResult {
  LpSolution solution;
  int rounds = 0;        // pricing calls made
  bool certified = false;  // pricer declared dual feasibility
  std::vector<LpColumn> added;
};

// Restricted-master column generation: solve, price, append, resolve (the
// tableau is warm-started). Stops when the pricer returns no column
// (certified) or after max_rounds (best solution so far, non-certified).
ColGenResult column_generation(const LpProblem& master_seed, const Pricer& pricer, int max_rounds);

// Human-readable LP-format dump for debugging.
std::string lp_to_text(const LpProblem& problem);

}  // namespace nebc
