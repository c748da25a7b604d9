#include "bwl/feasibility.hpp"

#include <optional>

#include "bwl/core.hpp"

namespace bwl {

LinearConstraint& LinearSystem::add_equality() {
  equalities.push_back({std::vector<Rational>(static_cast<std::size_t>(num_vars)), Rational(0)});
  return equalities.back();
}

LinearConstraint& LinearSystem::add_inequality() {
  inequalities.push_back({std::vector<Rational>(static_cast<std::size_t>(num_vars)), Rational(0)});
  return inequalities.back();
}

const char* to_string(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::Feasible: return "feasible";
    case FeasibilityStatus::EqualityInconsistent: return "equality-inconsistent";
    case FeasibilityStatus::InequalityInfeasible: return "inequality-infeasible";
  }
  return "?";
}

namespace {

void check_shape(const LinearSystem& sys) {
  if (sys.num_vars < 0) throw Error("linear system: negative variable count");
  for (const auto* rows : {&sys.equalities, &sys.inequalities})
    for (const auto& row : *rows)
      if (row.coeffs.size() != static_cast<std::size_t>(sys.num_vars)) throw Error("linear system: row width mismatch");
}

// x_pivot[p] = constant[p] - sum_j coeff[p][j] * x_j over free columns j.
struct Elimination {
  std::vector<int> pivot_col;               // per reduced row
  std::vector<std::vector<Rational>> rows;  // reduced rows, width num_vars
  std::vector<Rational> rhs;
  std::vector<bool> is_pivot;
};

std::optional<std::string> eliminate(const LinearSystem& sys, Elimination& el) {
  const int nv = sys.num_vars;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& row : sys.equalities) {
    a.push_back(row.coeffs);
    b.push_back(row.rhs);
  }
  el.is_pivot.assign(static_cast<std::size_t>(nv), false);
  std::size_t r = 0;
  for (int col = 0; col < nv && r < a.size(); ++col) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const Rational inv = 1 / a[r][col];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (int j = col; j < nv; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    el.pivot_col.push_back(col);
    el.is_pivot[col] = true;
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i)
    if (b[i] != 0) return "equality combination reduces to 0 = " + format_rational(b[i]);
  a.resize(r);
  b.resize(r);
  el.rows = std::move(a);
  el.rhs = std::move(b);
  return std::nullopt;
}

// Phase one for G y >= h with y split into y+ - y-. Returns y or nullopt.
class PhaseOne {
 public:
  PhaseOne(const std::vector<std::vector<Rational>>& g, const std::vector<Rational>& h, int width)
      : m_(g.size()), width_(width) {
    // Columns: [y+ (width)] [y- (width)] [surplus (m)] [artificial (m)] [rhs]
    cols_ = 2 * width_ + 2 * static_cast<int>(m_);
    rhs_col_ = cols_;
    t_.assign(m_ + 1, std::vector<Rational>(static_cast<std::size_t>(cols_ + 1)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      auto& row = t_[i];
      const bool flip = h[i] <= 0;
      const int sign = flip ? -1 : 1;
      for (int j = 0; j < width_; ++j) {
        if (g[i][j] == 0) continue;
        row[j] = sign * g[i][j];
        row[width_ + j] = -sign * g[i][j];
      }
      row[surplus(i)] = -sign;
      row[rhs_col_] = sign * h[i];
      if (flip) {
        basis_[i] = surplus(i);
      } else {
        row[artificial(i)] = 1;
        basis_[i] = artificial(i);
      }
    }
    // Objective row holds reduced costs of minimising the artificial sum.
    auto& obj = t_[m_];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] != artificial(i)) continue;
      for (int j = 0; j <= cols_; ++j)
        if (t_[i][j] != 0 && !is_artificial(j)) obj[j] -= t_[i][j];
    }
  }

  std::optional<std::vector<Rational>> solve() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_ && enter < 0; ++j)
        if (!is_artificial(j) && t_[m_][j] < 0) enter = j;
      if (enter < 0) break;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][rhs_col_] / t_[i][enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) break;  // unbounded direction cannot occur for a bounded-below objective
      pivot(*leave, enter);
    }
    // -obj[rhs] is the optimal artificial sum
    if (t_[m_][rhs_col_] != 0) {
      optimum_ = -t_[m_][rhs_col_];
      return std::nullopt;
    }
    std::vector<Rational> y(static_cast<std::size_t>(width_));
    for (std::size_t i = 0; i < m_; ++i) {
      const int c = basis_[i];
      if (c < width_) y[c] += t_[i][rhs_col_];
      else if (c < 2 * width_) y[c - width_] -= t_[i][rhs_col_];
    }
    return y;
  }

  std::size_t pivots() const { return pivots_; }
  const Rational& optimum() const { return optimum_; }

 private:
  int surplus(std::size_t i) const { return 2 * width_ + static_cast<int>(i); }
  int artificial(std::size_t i) const { return 2 * width_ + static_cast<int>(m_ + i); }
  bool is_artificial(int j) const { return j >= 2 * width_ + static_cast<int>(m_) && j < cols_; }

  void pivot(std::size_t r, int c) {
    ++pivots_;
    const Rational inv = 1 / t_[r][c];
    for (auto& v : t_[r])
      if (v != 0) v *= inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (int j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_;
  int width_;
  int cols_ = 0;
  int rhs_col_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  std::size_t pivots_ = 0;
  Rational optimum_;
};

}  // namespace

FeasibilityResult solve_feasibility(const LinearSystem& sys) {
  check_shape(sys);
  FeasibilityResult result;
  Elimination el;
  if (auto bad = eliminate(sys, el)) {
    result.status = FeasibilityStatus::EqualityInconsistent;
    result.note = *bad;
    return result;
  }
  const int nv = sys.num_vars;
  std::vector<int> free_cols;
  std::vector<int> free_index(static_cast<std::size_t>(nv), -1);
  for (int j = 0; j < nv; ++j)
    if (!el.is_pivot[j]) {
      free_index[j] = static_cast<int>(free_cols.size());
      free_cols.push_back(j);
    }
  const int width = static_cast<int>(free_cols.size());

  // Substitute pivots into each inequality.
  std::vector<std::vector<Rational>> g;
  std::vector<Rational> h;
  for (const auto& row : sys.inequalities) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(width));
    Rational rhs = row.rhs;
    for (int j = 0; j < nv; ++j)
      if (!el.is_pivot[j] && row.coeffs[j] != 0) coeffs[free_index[j]] += row.coeffs[j];
    for (std::size_t p = 0; p < el.pivot_col.size(); ++p) {
      const Rational& w = row.coeffs[el.pivot_col[p]];
      if (w == 0) continue;
      rhs -= w * el.rhs[p];
      for (int j = 0; j < width; ++j) {
        const Rational& a = el.rows[p][free_cols[j]];
        if (a != 0) coeffs[j] -= w * a;
      }
    }
    bool zero = true;
    for (const auto& v : coeffs) zero = zero && v == 0;
    if (zero) {
      if (rhs > 0) {
        result.status = FeasibilityStatus::InequalityInfeasible;
        result.note = "inequality reduces to 0 >= " + format_rational(rhs);
        return result;
      }
      continue;
    }
    g.push_back(std::move(coeffs));
    h.push_back(std::move(rhs));
  }

  PhaseOne lp(g, h, width);
  auto y = lp.solve();
  result.pivots = lp.pivots();
  if (!y) {
    result.status = FeasibilityStatus::InequalityInfeasible;
    result.note = "phase-one optimum " + format_rational(lp.optimum()) + " > 0";
    return result;
  }
  std::vector<Rational> x(static_cast<std::size_t>(nv));
  for (int j = 0; j < width; ++j) x[free_cols[j]] = (*y)[j];
  for (std::size_t p = 0; p < el.pivot_col.size(); ++p) {
    Rational v = el.rhs[p];
    for (int j = 0; j < width; ++j) {
      const Rational& a = el.rows[p][free_cols[j]];
      if (a != 0) v -= a * (*y)[j];
    }
    x[el.pivot_col[p]] = std::move(v);
  }
  result.status = FeasibilityStatus::Feasible;
  result.point = std::move(x);
  return result;
}

bool satisfies(const LinearSystem& sys, std::span<const Rational> x) {
  if (x.size() != static_cast<std::size_t>(sys.num_vars)) return false;
  auto lhs = [&](const LinearConstraint& row) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (row.coeffs[j] != 0) s += row.coeffs[j] * x[j];
    return s;
  };
  for (const auto& row : sys.equalities)
    if (lhs(row) != row.rhs) return false;
  for (const auto& row : sys.inequalities)
    if (lhs(row) < row.rhs) return false;
  return true;
}

}  // namespace bwl
