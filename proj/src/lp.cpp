#include "spearlab/lp.hpp"

#include <optional>
#include <string>

#include "spearlab/error.hpp"

namespace spearlab {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), cells_(rows, std::vector<mpq_class>(cols + 1)), basis_(rows) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t cols() const { return cols_; }
  mpq_class& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  mpq_class& rhs(std::size_t r) { return cells_[r][cols_]; }
  std::size_t& basic(std::size_t r) { return basis_[r]; }

  void pivot(std::size_t pr, std::size_t pc, std::vector<mpq_class>& cost) {
    auto& prow = cells_[pr];
    mpq_class inv = 1 / prow[pc];
    for (auto& x : prow) {
      if (sgn(x) != 0) x *= inv;
    }
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == pr) continue;
      eliminate(cells_[r], prow, pc);
    }
    eliminate(cost, prow, pc);
    basis_[pr] = pc;
  }

  void erase_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  static void eliminate(std::vector<mpq_class>& row, const std::vector<mpq_class>& prow,
                        std::size_t pc) {
    if (sgn(row[pc]) == 0) return;
    mpq_class f = row[pc];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (sgn(prow[c]) != 0) row[c] -= f * prow[c];
    }
  }

  std::size_t cols_;
  std::vector<std::vector<mpq_class>> cells_;
  std::vector<std::size_t> basis_;
};

// Runs simplex iterations minimizing the cost row. Columns with allowed[c] ==
// false never enter. Returns false when unbounded.
bool run_simplex(Tableau& t, std::vector<mpq_class>& cost, const std::vector<bool>& allowed,
                 std::size_t& pivots, std::size_t cap) {
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t c = 0; c < t.cols(); ++c) {
      if (allowed[c] && sgn(cost[c]) < 0) {
        enter = c;
        break;
      }
    }
    if (!enter) return true;
    std::optional<std::size_t> leave;
    mpq_class best;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (sgn(t.at(r, *enter)) <= 0) continue;
      mpq_class ratio = t.rhs(r) / t.at(r, *enter);
      if (!leave || ratio < best || (ratio == best && t.basic(r) < t.basic(*leave))) {
        leave = r;
        best = ratio;
      }
    }
    if (!leave) return false;
    if (++pivots > cap) {
      throw ResourceError("LP pivot cap of " + std::to_string(cap) + " exceeded");
    }
    t.pivot(*leave, *enter, cost);
  }
}

}  // namespace

LpResult solve_lp(const RatVector& objective, const std::vector<LinearConstraint>& constraints,
                  Sense sense, const LpOptions& options) {
  const std::size_t n = objective.size();
  for (const auto& con : constraints) {
    require(con.coeffs.size() == n, ErrorCode::DimensionMismatch,
            "constraint row length " + std::to_string(con.coeffs.size()) +
                " does not match objective length " + std::to_string(n));
  }
  require(options.nonnegative.empty() || options.nonnegative.size() == n,
          ErrorCode::DimensionMismatch, "nonnegativity mask length mismatch");

  // Column layout: structural columns (one per nonnegative variable, two per
  // free variable), then one slack/surplus per inequality, then artificials.
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    bool nonneg = !options.nonnegative.empty() && options.nonnegative[j];
    if (!nonneg) neg_col[j] = ncols++;
  }
  const std::size_t structural = ncols;

  const std::size_t m = constraints.size();
  std::vector<int> row_sign(m, 1);
  std::vector<Relation> rel(m);
  std::size_t slack_count = 0, art_count = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = constraints[i].relation;
    if (constraints[i].rhs.sign() < 0) {
      row_sign[i] = -1;
      if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
      else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
    }
    if (rel[i] != Relation::Equal) ++slack_count;
    if (rel[i] != Relation::LessEqual) ++art_count;
  }
  const std::size_t art_begin = structural + slack_count;
  ncols = art_begin + art_count;

  Tableau t(m, ncols);
  std::size_t next_slack = structural, next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = constraints[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (con.coeffs[j].is_zero()) continue;
      mpq_class v = con.coeffs[j].value() * row_sign[i];
      t.at(i, pos_col[j]) = v;
      if (neg_col[j] != SIZE_MAX) t.at(i, neg_col[j]) = -v;
    }
    t.rhs(i) = con.rhs.value() * row_sign[i];
    if (rel[i] == Relation::LessEqual) {
      t.at(i, next_slack) = 1;
      t.basic(i) = next_slack++;
    } else {
      if (rel[i] == Relation::GreaterEqual) t.at(i, next_slack++) = -1;
      t.at(i, next_art) = 1;
      t.basic(i) = next_art++;
    }
  }

  LpResult result;
  std::vector<bool> allowed(ncols, true);

  // Phase I: minimize the sum of artificials.
  if (art_count > 0) {
    std::vector<mpq_class> cost(ncols + 1);
    for (std::size_t c = art_begin; c < ncols; ++c) cost[c] = 1;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basic(r) < art_begin) continue;
      for (std::size_t c = 0; c <= ncols; ++c) cost[c] -= t.at(r, c);
    }
    run_simplex(t, cost, allowed, result.pivots, options.pivot_cap);
    if (sgn(cost[ncols]) != 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basic(r) < art_begin) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < art_begin; ++c) {
        if (sgn(t.at(r, c)) != 0) {
          col = c;
          break;
        }
      }
      if (col) {
        std::vector<mpq_class> dummy(ncols + 1);
        t.pivot(r, *col, dummy);
        ++r;
      } else {
        t.erase_row(r);
      }
    }
    for (std::size_t c = art_begin; c < ncols; ++c) allowed[c] = false;
  }

  // Phase II.
  std::vector<mpq_class> cost(ncols + 1);
  const int dir = sense == Sense::Minimize ? 1 : -1;
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class c = objective[j].value() * dir;
    cost[pos_col[j]] = c;
    if (neg_col[j] != SIZE_MAX) cost[neg_col[j]] = -c;
  }
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const mpq_class cb = cost[t.basic(r)];
    if (sgn(cb) == 0) continue;
    for (std::size_t c = 0; c <= ncols; ++c) cost[c] -= cb * t.at(r, c);
  }
  if (!run_simplex(t, cost, allowed, result.pivots, options.pivot_cap)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  std::vector<mpq_class> colval(ncols);
  for (std::size_t r = 0; r < t.rows(); ++r) colval[t.basic(r)] = t.rhs(r);
  result.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    mpq_class v = colval[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) v -= colval[neg_col[j]];
    result.point[j] = Rational(v);
  }
  result.value = dot(objective, result.point);
  result.status = LpStatus::Optimal;
  return result;
}

}  // namespace spearlab
