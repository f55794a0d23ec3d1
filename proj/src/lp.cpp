#include "nebc/lp.hpp"

#include <sstream>
#include <stdexcept>

namespace nebc {

void LpProblem::validate() const {
  for (const auto& row : rows)
    if (row.coeffs.size() != objective.size())
      throw std::invalid_argument("row width does not match the number of columns");
}

namespace {

constexpr long kPivotCap = 2'000'000;

enum class ColKind { Structural, Slack, Artificial };

// Dense exact tableau. Artificial columns stay in the tableau (banned from
// entering) so dual values can be read off the identity block.
class SimplexTableau {
 public:
  explicit SimplexTableau(const LpProblem& problem) : problem_(problem) {
    problem.validate();
    const size_t m = problem.rows.size();
    rows_.resize(m);
    rhs_.resize(m);
    flipped_.resize(m, false);
    id_col_.resize(m, -1);
    basis_.resize(m, -1);

    // Structural columns first.
    for (size_t j = 0; j < problem.cols(); ++j) {
      kind_.push_back(ColKind::Structural);
      cost_.push_back(signed_cost(problem.objective[j]));
    }
    struct_count_ = problem.cols();

    for (size_t i = 0; i < m; ++i) {
      Rel rel = problem.rows[i].rel;
      if (problem.rows[i].rhs < 0) {
        flipped_[i] = true;
        rel = rel == Rel::Le ? Rel::Ge : rel == Rel::Ge ? Rel::Le : Rel::Eq;
      }
      rel_.push_back(rel);
    }

    // One slack/surplus per inequality, one artificial per Ge/Eq row.
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    for (size_t i = 0; i < m; ++i) {
      if (rel_[i] != Rel::Eq) {
        slack_col[i] = add_aux(ColKind::Slack);
      }
      if (rel_[i] != Rel::Le) {
        art_col[i] = add_aux(ColKind::Artificial);
      }
    }

    const size_t k = kind_.size();
    for (size_t i = 0; i < m; ++i) {
      rows_[i].assign(k, Rational(0));
      const auto& row = problem.rows[i];
      for (size_t j = 0; j < problem.cols(); ++j)
        rows_[i][j] = flipped_[i] ? -row.coeffs[j] : row.coeffs[j];
      rhs_[i] = flipped_[i] ? -row.rhs : row.rhs;
      if (slack_col[i] >= 0) rows_[i][slack_col[i]] = rel_[i] == Rel::Le ? 1 : -1;
      if (art_col[i] >= 0) rows_[i][art_col[i]] = 1;
      if (rel_[i] == Rel::Le) {
        basis_[i] = slack_col[i];
        id_col_[i] = slack_col[i];
      } else {
        basis_[i] = art_col[i];
        id_col_[i] = art_col[i];
      }
    }

    rc2_ = cost_;
    rc1_.assign(k, Rational(0));
    for (size_t i = 0; i < m; ++i) {
      if (kind_[basis_[i]] == ColKind::Artificial)
        for (size_t j = 0; j < k; ++j) rc1_[j] += rows_[i][j];
    }
    for (size_t j = 0; j < k; ++j)
      if (kind_[j] == ColKind::Artificial) rc1_[j] = 0;
  }

  LpStatus optimize() {
    if (phase_ == 0) {
      if (!run_phase(rc1_)) throw std::logic_error("phase 1 cannot be unbounded");
      for (size_t i = 0; i < rows_.size(); ++i)
        if (kind_[basis_[i]] == ColKind::Artificial && rhs_[i] != 0) return status_ = LpStatus::Infeasible;
      expel_artificials();
      phase_ = 2;
    }
    if (status_ == LpStatus::Infeasible) return status_;
    if (!run_phase(rc2_)) return status_ = LpStatus::Unbounded;
    return status_ = LpStatus::Optimal;
  }

  void add_column(const Rational& obj, const std::vector<Rational>& coeffs) {
    const size_t m = rows_.size();
    if (coeffs.size() != m) throw std::invalid_argument("column height does not match the row count");
    std::vector<Rational> col(m, Rational(0));
    for (size_t i = 0; i < m; ++i) {
      const Rational a = flipped_[i] ? -coeffs[i] : coeffs[i];
      if (a == 0) continue;
      for (size_t r = 0; r < m; ++r) col[r] += a * rows_[r][id_col_[i]];
    }
    const Rational c = signed_cost(obj);
    Rational rc2 = c, rc1 = 0;
    for (size_t r = 0; r < m; ++r) {
      if (col[r] == 0) continue;
      rc2 -= cost_[basis_[r]] * col[r];
      if (kind_[basis_[r]] == ColKind::Artificial) rc1 += col[r];
    }
    for (size_t r = 0; r < m; ++r) rows_[r].push_back(col[r]);
    kind_.push_back(ColKind::Structural);
    cost_.push_back(c);
    ++struct_count_;
    rc1_.push_back(rc1);
    rc2_.push_back(rc2);
  }

  LpSolution extract() const {
    LpSolution sol;
    sol.status = status_;
    sol.pivots = pivots_;
    if (status_ != LpStatus::Optimal && status_ != LpStatus::Feasible) return sol;

    sol.x.assign(struct_count_, Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (kind_[basis_[i]] == ColKind::Structural) {
        sol.x[struct_index(basis_[i])] = rhs_[i];
        sol.basis.push_back(struct_index(basis_[i]));
      }
    }
    Rational value = 0;
    for (size_t i = 0; i < rows_.size(); ++i) value += cost_[basis_[i]] * rhs_[i];
    sol.objective = problem_.sense == Sense::Max ? value : -value;

    sol.duals.assign(rows_.size(), Rational(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
      Rational y = -rc2_[id_col_[i]];  // aux costs are zero, so z = -rc
      if (flipped_[i]) y = -y;
      if (problem_.sense == Sense::Min) y = -y;
      sol.duals[i] = y;
    }

    if (status_ == LpStatus::Optimal) {
      Rational dual_value = 0;
      for (size_t i = 0; i < rows_.size(); ++i) dual_value += sol.duals[i] * problem_.rows[i].rhs;
      if (dual_value != sol.objective) throw std::logic_error("strong duality violated (internal error)");
    }
    return sol;
  }

  size_t struct_count() const { return struct_count_; }

 private:
  Rational signed_cost(const Rational& c) const { return problem_.sense == Sense::Max ? c : -c; }

  int add_aux(ColKind kind) {
    kind_.push_back(kind);
    cost_.push_back(0);
    return static_cast<int>(kind_.size()) - 1;
  }

  int struct_index(int col) const {
    // Structural columns are the first problem_.cols() columns plus any
    // appended ones; map tableau column -> structural ordinal.
    if (col < static_cast<int>(problem_.cols())) return col;
    int ordinal = static_cast<int>(problem_.cols());
    for (int j = static_cast<int>(problem_.cols()); j < col; ++j)
      if (kind_[j] == ColKind::Structural) ++ordinal;
    return ordinal;
  }

  bool run_phase(std::vector<Rational>& rc) {
    const size_t m = rows_.size();
    while (true) {
      int enter = -1;
      for (size_t j = 0; j < kind_.size(); ++j) {
        if (kind_[j] == ColKind::Artificial) continue;
        if (rc[j] > 0) {
          enter = static_cast<int>(j);
          break;  // Bland: smallest index
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rational best_ratio;
      for (size_t i = 0; i < m; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded in this phase
      pivot(leave, enter);
    }
  }

  void expel_artificials() {
    const size_t m = rows_.size();
    for (size_t i = 0; i < m; ++i) {
      if (kind_[basis_[i]] != ColKind::Artificial) continue;
      int enter = -1;
      for (size_t j = 0; j < kind_.size(); ++j) {
        if (kind_[j] == ColKind::Artificial) continue;
        if (rows_[i][j] != 0) {
          enter = static_cast<int>(j);
          break;
        }
      }
      // A fully zero row is redundant; the artificial stays basic at zero and
      // never interferes (entering columns have a zero entry in this row).
      if (enter >= 0) pivot(static_cast<int>(i), enter);
    }
  }

  void pivot(int r, int p) {
    if (++pivots_ > kPivotCap) throw std::logic_error("simplex pivot cap exceeded");
    const size_t m = rows_.size();
    const size_t k = kind_.size();
    const Rational piv = rows_[r][p];
    for (size_t j = 0; j < k; ++j) rows_[r][j] /= piv;
    rhs_[r] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (static_cast<int>(i) == r || rows_[i][p] == 0) continue;
      const Rational f = rows_[i][p];
      for (size_t j = 0; j < k; ++j)
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    auto update_rc = [&](std::vector<Rational>& rc) {
      const Rational f = rc[p];
      if (f == 0) return;
      for (size_t j = 0; j < k; ++j)
        if (rows_[r][j] != 0) rc[j] -= f * rows_[r][j];
    };
    update_rc(rc1_);
    update_rc(rc2_);
    basis_[r] = p;
  }

  const LpProblem& problem_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<Rational> rc1_, rc2_;
  std::vector<ColKind> kind_;
  std::vector<Rational> cost_;
  std::vector<int> basis_;
  std::vector<int> id_col_;
  std::vector<bool> flipped_;
  std::vector<Rel> rel_;
  size_t struct_count_ = 0;
  int phase_ = 0;
  long pivots_ = 0;
  LpStatus status_ = LpStatus::Feasible;
};

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
  SimplexTableau tableau(problem);
  tableau.optimize();
  return tableau.extract();
}

namespace {

// Null-space vector of the m x k column set, or empty when independent.
std::vector<Rational> null_vector(std::vector<std::vector<Rational>> cols, size_t m) {
  const size_t k = cols.size();
  // Row-reduce the m x k matrix; track pivot column per row.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k, Rational(0)));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];

  std::vector<int> pivot_of_col(k, -1);
  size_t rank = 0;
  for (size_t j = 0; j < k && rank < m; ++j) {
    size_t sel = rank;
    while (sel < m && a[sel][j] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[rank]);
    const Rational piv = a[rank][j];
    for (size_t jj = j; jj < k; ++jj) a[rank][jj] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][j] == 0) continue;
      const Rational f = a[i][j];
      for (size_t jj = j; jj < k; ++jj) a[i][jj] -= f * a[rank][jj];
    }
    pivot_of_col[j] = static_cast<int>(rank);
    ++rank;
  }

  int free_col = -1;
  for (size_t j = 0; j < k; ++j)
    if (pivot_of_col[j] < 0) {
      free_col = static_cast<int>(j);
      break;
    }
  if (free_col < 0) return {};

  std::vector<Rational> lambda(k, Rational(0));
  lambda[free_col] = 1;
  for (size_t j = 0; j < k; ++j)
    if (pivot_of_col[j] >= 0) lambda[j] = -a[pivot_of_col[j]][free_col];
  return lambda;
}

}  // namespace

LpSolution to_basic(const LpProblem& problem, const std::vector<Rational>& x) {
  problem.validate();
  if (x.size() != problem.cols()) throw std::invalid_argument("solution width mismatch");
  for (const auto& v : x)
    if (v < 0) throw std::invalid_argument("negative variable value");

  const size_t m = problem.rows.size();
  const size_t n = problem.cols();

  // Equality form: structural variables plus one slack per inequality row.
  struct Var {
    int structural = -1;  // index into x, or -1 for a slack
    int row = -1;         // slack's row
    Rational value;
    Rational cost;  // sense-adjusted (maximization)
  };
  std::vector<Var> vars;
  for (size_t j = 0; j < n; ++j) {
    Var v;
    v.structural = static_cast<int>(j);
    v.value = x[j];
    v.cost = problem.sense == Sense::Max ? problem.objective[j] : -problem.objective[j];
    vars.push_back(std::move(v));
  }
  for (size_t i = 0; i < m; ++i) {
    Rational activity = 0;
    for (size_t j = 0; j < n; ++j) activity += problem.rows[i].coeffs[j] * x[j];
    const Rational& b = problem.rows[i].rhs;
    const Rel rel = problem.rows[i].rel;
    if ((rel == Rel::Le && activity > b) || (rel == Rel::Ge && activity < b) ||
        (rel == Rel::Eq && activity != b))
      throw std::invalid_argument("point is infeasible for row " + std::to_string(i));
    if (rel != Rel::Eq) {
      Var v;
      v.row = static_cast<int>(i);
      v.value = rel == Rel::Le ? b - activity : activity - b;
      vars.push_back(std::move(v));
    }
  }

  auto column_of = [&](const Var& v) {
    std::vector<Rational> col(m, Rational(0));
    if (v.structural >= 0) {
      for (size_t i = 0; i < m; ++i) col[i] = problem.rows[i].coeffs[v.structural];
    } else {
      col[v.row] = problem.rows[v.row].rel == Rel::Le ? 1 : -1;
    }
    return col;
  };

  LpStatus status = LpStatus::Feasible;
  while (true) {
    std::vector<size_t> support;
    for (size_t j = 0; j < vars.size(); ++j)
      if (vars[j].value != 0) support.push_back(j);

    std::vector<std::vector<Rational>> cols;
    for (size_t j : support) cols.push_back(column_of(vars[j]));
    std::vector<Rational> lambda = null_vector(std::move(cols), m);
    if (lambda.empty()) break;

    Rational dobj = 0;
    for (size_t t = 0; t < support.size(); ++t) dobj += vars[support[t]].cost * lambda[t];
    if (dobj < 0) {
      for (auto& l : lambda) l = -l;
      dobj = -dobj;
    }
    bool has_negative = false;
    for (const auto& l : lambda)
      if (l < 0) has_negative = true;
    if (!has_negative) {
      if (dobj > 0) {
        status = LpStatus::Unbounded;
        break;
      }
      for (auto& l : lambda) l = -l;  // zero objective ray, walk the other way
      has_negative = true;
    }

    Rational step;
    bool first = true;
    for (size_t t = 0; t < support.size(); ++t) {
      if (lambda[t] >= 0) continue;
      Rational limit = vars[support[t]].value / -lambda[t];
      if (first || limit < step) {
        step = limit;
        first = false;
      }
    }
    for (size_t t = 0; t < support.size(); ++t) vars[support[t]].value += step * lambda[t];
  }

  LpSolution sol;
  sol.status = status;
  sol.x.assign(n, Rational(0));
  for (const Var& v : vars)
    if (v.structural >= 0) sol.x[v.structural] = v.value;
  sol.objective = 0;
  for (size_t j = 0; j < n; ++j) sol.objective += problem.objective[j] * sol.x[j];
  for (size_t j = 0; j < n; ++j)
    if (sol.x[j] != 0) sol.basis.push_back(static_cast<int>(j));
  return sol;
}

ColGenResult column_generation(const LpProblem& master_seed, const Pricer& pricer, int max_rounds) {
  ColGenResult result;
  LpProblem master = master_seed;  // keeps the problem alive for the tableau
  SimplexTableau tableau(master);

  while (true) {
    if (tableau.optimize() != LpStatus::Optimal) {
      result.solution = tableau.extract();
      return result;
    }
    LpSolution sol = tableau.extract();
    if (result.rounds >= max_rounds) {
      result.solution = std::move(sol);
      result.certified = false;
      return result;
    }
    ++result.rounds;
    std::optional<LpColumn> col = pricer(sol.duals);
    if (!col) {
      result.solution = std::move(sol);
      result.certified = true;
      return result;
    }
    result.added.push_back(*col);
    tableau.add_column(col->objective, col->coeffs);
  }
}

std::string lp_to_text(const LpProblem& problem) {
  std::ostringstream out;
  out << (problem.sense == Sense::Max ? "Maximize" : "Minimize") << "\n obj:";
  for (size_t j = 0; j < problem.cols(); ++j)
    if (problem.objective[j] != 0) out << " + " << rat_str(problem.objective[j]) << " x" << j;
  out << "\nSubject To\n";
  for (size_t i = 0; i < problem.rows.size(); ++i) {
    out << " r" << i << ":";
    for (size_t j = 0; j < problem.cols(); ++j)
      if (problem.rows[i].coeffs[j] != 0) out << " + " << rat_str(problem.rows[i].coeffs[j]) << " x" << j;
    const char* rel = problem.rows[i].rel == Rel::Le ? "<=" : problem.rows[i].rel == Rel::Ge ? ">=" : "=";
    out << " " << rel << " " << rat_str(problem.rows[i].rhs) << "\n";
  }
  out << "Bounds\n";
  for (size_t j = 0; j < problem.cols(); ++j) out << " x" << j << " >= 0\n";
  out << "End\n";
  return out.str();
}

}  // namespace nebc
