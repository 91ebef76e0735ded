#include "aspherika/simplex.hpp"

#include <cstddef>

#include "aspherika/errors.hpp"

namespace aspherika {

void LinearProgram::add_row(std::vector<Rational> coef, int sense, Rational rhs) {
  if (coef.size() != static_cast<std::size_t>(vars)) throw Error("row width mismatch");
  if (sense < -1 || sense > 1) throw Error("bad row sense");
  rows.push_back(Row{std::move(coef), sense, std::move(rhs)});
}

namespace {

struct Tableau {
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<int> basis;
  std::vector<Rational> obj;  // reduced costs; positive entry can still improve
  Rational value;

  void pivot(std::size_t r, std::size_t c) {
    Rational piv = a[r][c];
    for (Rational& v : a[r]) v = v / piv;
    b[r] = b[r] / piv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    if (!obj[c].is_zero()) {
      Rational f = obj[c];
      for (std::size_t j = 0; j < cols; ++j) obj[j] = obj[j] - f * a[r][j];
      value = value + f * b[r];
    }
    basis[r] = static_cast<int>(c);
  }

  // One Bland step over columns [0, limit).  Returns false at an optimum.
  bool step(std::size_t limit, bool& unbounded) {
    std::size_t enter = limit;
    for (std::size_t j = 0; j < limit; ++j)
      if (!obj[j].is_zero() && !obj[j].is_negative()) {
        enter = j;
        break;
      }
    if (enter == limit) return false;
    std::size_t leave = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i][enter].is_zero() || a[i][enter].is_negative()) continue;
      if (leave == a.size()) {
        leave = i;
        continue;
      }
      Rational cur = b[i] / a[i][enter];
      Rational best = b[leave] / a[leave][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == a.size()) {
      unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpSolution solve_lp(LinearProgram const& lp) {
  std::size_t nv = static_cast<std::size_t>(lp.vars);
  std::size_t m = lp.rows.size();

  // Column layout: structural, then one slack or surplus per inequality,
  // then one artificial per row that needs a starting basic variable.
  std::size_t slacks = 0;
  for (auto const& row : lp.rows)
    if (row.sense != 0) ++slacks;

  std::vector<int> sense(m);
  std::vector<std::vector<Rational>> coef(m);
  std::vector<Rational> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    coef[i] = lp.rows[i].coef;
    rhs[i] = lp.rows[i].rhs;
    sense[i] = lp.rows[i].sense;
    if (rhs[i].is_negative()) {
      for (Rational& v : coef[i]) v = -v;
      rhs[i] = -rhs[i];
      sense[i] = -sense[i];
    }
  }

  Tableau t;
  std::size_t realCols = nv + slacks;
  t.cols = realCols + m;  // upper bound on artificials, unused ones stay zero
  t.a.assign(m, std::vector<Rational>(t.cols));
  t.b = rhs;
  t.basis.assign(m, -1);
  t.obj.assign(t.cols, Rational(0));

  std::size_t slackAt = nv;
  std::size_t artAt = realCols;
  std::vector<std::size_t> artRows;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) t.a[i][j] = coef[i][j];
    if (sense[i] != 0) {
      t.a[i][slackAt] = sense[i] < 0 ? Rational(1) : Rational(-1);
      if (sense[i] < 0) t.basis[i] = static_cast<int>(slackAt);
      ++slackAt;
    }
    if (t.basis[i] < 0) {
      t.a[i][artAt] = Rational(1);
      t.basis[i] = static_cast<int>(artAt);
      artRows.push_back(i);
      ++artAt;
    }
  }

  LpSolution sol;

  // Phase one: drive the artificial variables to zero.
  if (!artRows.empty()) {
    for (std::size_t j = realCols; j < artAt; ++j) t.obj[j] = Rational(-1);
    for (std::size_t i : artRows) {
      for (std::size_t j = 0; j < t.cols; ++j) t.obj[j] = t.obj[j] + t.a[i][j];
      t.value = t.value - t.b[i];
    }
    bool unbounded = false;
    while (t.step(t.cols, unbounded)) {
    }
    if (!t.value.is_zero()) return sol;  // infeasible
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < static_cast<int>(realCols)) continue;
      // Basic artificial at level zero: swap in any real column, or accept
      // the row as redundant.
      for (std::size_t j = 0; j < realCols; ++j)
        if (!t.a[i][j].is_zero()) {
          t.pivot(i, j);
          break;
        }
    }
  }

  // Phase two: the real objective, priced out against the current basis.
  t.obj.assign(t.cols, Rational(0));
  t.value = Rational(0);
  for (std::size_t j = 0; j < nv; ++j) t.obj[j] = lp.objective[j];
  for (std::size_t i = 0; i < m; ++i) {
    int bv = t.basis[i];
    if (bv < 0 || bv >= static_cast<int>(nv)) continue;
    Rational c = lp.objective[static_cast<std::size_t>(bv)];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < t.cols; ++j)
      t.obj[j] = t.obj[j] - c * t.a[i][j];
    t.value = t.value + c * t.b[i];
  }
  bool unbounded = false;
  while (t.step(realCols, unbounded)) {
  }
  if (unbounded) {
    sol.unbounded = true;
    return sol;
  }

  sol.feasible = true;
  sol.value = t.value;
  sol.x.assign(nv, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= 0 && t.basis[i] < static_cast<int>(nv))
      sol.x[static_cast<std::size_t>(t.basis[i])] = t.b[i];
  return sol;
}

}  // namespace aspherika
