#include "seidelpoly/simplex.hpp"

#include <optional>

namespace seidelpoly {

namespace {

// Tableau rows 0..m-1 hold constraints [coefficients | rhs]; row m holds
// reduced costs with the negated objective value in the rhs column.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols, mpfr_prec_t bits)
      : t_(rows + 1, std::vector<BigFloat>(cols + 1, BigFloat(bits))), basis_(rows), cols_(cols) {}

  BigFloat& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  BigFloat& rhs(std::size_t i) { return t_[i][cols_]; }
  BigFloat& cost(std::size_t j) { return t_[t_.size() - 1][j]; }
  std::size_t rows() const { return t_.size() - 1; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }

  void pivot(std::size_t pr, std::size_t pc) {
    BigFloat inv = BigFloat(1L, t_[pr][pc].precision()) / t_[pr][pc];
    for (auto& v : t_[pr]) v *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == pr || t_[i][pc].sign() == 0) continue;
      BigFloat f = t_[i][pc];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[pr][j];
    }
    basis_[pr] = pc;
  }

  // Bland's rule over the first `usable` columns. Returns false when unbounded.
  bool optimize(std::size_t usable, const BigFloat& zero) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable; ++j)
        if (cost(j) < -zero) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      BigFloat best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (!(at(i, *enter) > zero)) continue;
        BigFloat ratio = rhs(i) / at(i, *enter);
        if (!leave || ratio < best - zero || (!(best + zero < ratio) && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  std::vector<std::vector<BigFloat>> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

SimplexResult solve_simplex(const LinearProgram& lp, const SimplexTolerances& tol) {
  const std::size_t m = lp.a.size();
  require(lp.b.size() == m, "solve_simplex: rhs size mismatch");
  const std::size_t n = m ? lp.a.front().size() : lp.c.size();
  for (const auto& row : lp.a) require(row.size() == n, "solve_simplex: ragged constraint matrix");
  require(lp.c.empty() || lp.c.size() == n, "solve_simplex: objective size mismatch");
  mpfr_prec_t bits = tol.zero.precision();
  for (const auto& row : lp.a)
    for (const auto& v : row) bits = std::max(bits, v.precision());

  // Phase one: artificial variable per row, rows negated so rhs >= 0.
  Tableau tab(m, n + m, bits);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.b[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? -lp.a[i][j] : lp.a[i][j];
    tab.rhs(i) = flip ? -lp.b[i] : lp.b[i];
    tab.at(i, n + i) = BigFloat(1L, bits);
    tab.basic(i) = n + i;
    for (std::size_t j = 0; j < n; ++j) tab.cost(j) -= tab.at(i, j);
    tab.rhs(m) -= tab.rhs(i);
  }
  tab.optimize(n + m, tol.zero);

  SimplexResult result;
  result.objective = BigFloat(bits);
  result.residual = BigFloat(bits);
  if (-tab.rhs(m) > tol.feasibility) return result;

  // Drive remaining artificials out of the basis where a real column allows.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basic(i) < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.at(i, j).abs() > tol.zero) {
        tab.pivot(i, j);
        break;
      }
  }

  if (!lp.c.empty()) {
    // Phase two: reduced costs of c against the current basis; artificial
    // columns are excluded from entering.
    for (std::size_t j = 0; j <= n + m; ++j) tab.cost(j) = BigFloat(bits);
    for (std::size_t j = 0; j < n; ++j) tab.cost(j) = lp.c[j];
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t bj = tab.basic(i);
      if (bj >= n || lp.c[bj].sign() == 0) continue;
      BigFloat f = lp.c[bj];
      for (std::size_t j = 0; j < n + m; ++j) tab.cost(j) -= f * tab.at(i, j);
      tab.rhs(m) -= f * tab.rhs(i);
    }
    if (!tab.optimize(n, tol.zero)) {
      result.status = SimplexStatus::unbounded;
      return result;
    }
  }

  result.status = SimplexStatus::optimal;
  result.x.assign(n, BigFloat(bits));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basic(i) < n) result.x[tab.basic(i)] = tab.rhs(i);
  for (std::size_t j = 0; j < lp.c.size(); ++j) result.objective += lp.c[j] * result.x[j];
  for (std::size_t i = 0; i < m; ++i) {
    BigFloat r = -lp.b[i];
    for (std::size_t j = 0; j < n; ++j) r += lp.a[i][j] * result.x[j];
    if (r.abs() > result.residual) result.residual = r.abs();
  }
  return result;
}

}  // namespace seidelpoly
