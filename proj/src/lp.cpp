#include "okbody/exactnum.hpp"

namespace okb {

namespace {

// Dense tableau. Row i < m holds constraint i with rhs in the last column;
// row m holds the reduced costs (for maximization: pivot while positive).
struct Tableau {
  RatMatrix t;
  std::vector<std::size_t> basis;
  std::size_t m = 0, n = 0; // constraints, structural columns

  BigRational &rhs(std::size_t i) { return t(i, n); }

  void pivot(std::size_t row, std::size_t col) {
    BigRational inv = 1 / t(row, col);
    for (std::size_t j = 0; j <= n; ++j)
      t(row, j) *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || t(i, col) == 0)
        continue;
      BigRational f = t(i, col);
      for (std::size_t j = 0; j <= n; ++j)
        if (t(row, j) != 0)
          t(i, j) -= f * t(row, j);
    }
    basis[row] = col;
  }

  // Bland's rule. Returns false when unbounded.
  bool run(std::size_t usable_cols) {
    for (;;) {
      std::size_t enter = usable_cols;
      for (std::size_t j = 0; j < usable_cols; ++j)
        if (t(m, j) > 0) {
          enter = j;
          break;
        }
      if (enter == usable_cols)
        return true;
      std::size_t leave = m;
      BigRational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t(i, enter) <= 0)
          continue;
        BigRational ratio = t(i, n) / t(i, enter);
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m)
        return false;
      pivot(leave, enter);
    }
  }
};

} // namespace

LpResult lp_maximize(const RatMatrix &a, const RatVector &b,
                     const RatVector &c) {
  const std::size_t m = a.rows(), nv = a.cols();
  if (b.size() != m || c.size() != nv)
    throw InputError("linear program shape mismatch");

  // Phase 1: artificial columns nv..nv+m-1, maximize -(sum of artificials).
  Tableau tab;
  tab.m = m;
  tab.n = nv + m;
  tab.t = RatMatrix(m + 1, tab.n + 1);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nv; ++j)
      tab.t(i, j) = sign * a(i, j);
    tab.t(i, nv + i) = 1;
    tab.rhs(i) = sign * b[i];
    tab.basis[i] = nv + i;
  }
  // Reduced costs of -sum(artificials) expressed in the nonbasic columns.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < nv; ++j)
      tab.t(m, j) += tab.t(i, j);
  for (std::size_t i = 0; i < m; ++i)
    tab.t(m, tab.n) += tab.rhs(i);
  tab.run(nv + m);

  LpResult out;
  if (tab.t(m, tab.n) != 0) {
    out.status = LpStatus::infeasible;
    return out;
  }
  // Drive artificial variables out of the basis; rows with no structural
  // entry are redundant and stay on a zero artificial, which is harmless
  // once artificial columns are excluded from entering.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < nv)
      continue;
    for (std::size_t j = 0; j < nv; ++j)
      if (tab.t(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  // Phase 2: install the real objective.
  for (std::size_t j = 0; j <= tab.n; ++j)
    tab.t(m, j) = 0;
  for (std::size_t j = 0; j < nv; ++j)
    tab.t(m, j) = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bj = tab.basis[i];
    if (bj >= nv || c[bj] == 0)
      continue;
    BigRational f = c[bj];
    for (std::size_t j = 0; j <= tab.n; ++j)
      tab.t(m, j) -= f * tab.t(i, j);
  }
  if (!tab.run(nv)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x.assign(nv, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < nv)
      out.x[tab.basis[i]] = tab.rhs(i);
  out.value = 0;
  for (std::size_t j = 0; j < nv; ++j)
    out.value += c[j] * out.x[j];
  return out;
}

bool in_cone(std::span<const RatVector> generators,
             std::span<const BigRational> point) {
  const std::size_t dim = point.size();
  if (generators.empty()) {
    for (const auto &x : point)
      if (x != 0)
        return false;
    return true;
  }
  RatMatrix a(dim, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != dim)
      throw InputError("cone generator of wrong length");
    for (std::size_t i = 0; i < dim; ++i)
      a(i, j) = generators[j][i];
  }
  RatVector b(point.begin(), point.end());
  RatVector c(generators.size(), 0);
  return lp_maximize(a, b, c).status == LpStatus::optimal;
}

bool in_convex_hull(std::span<const RatVector> points,
                    std::span<const BigRational> point) {
  if (points.empty())
    return false;
  const std::size_t dim = point.size();
  RatMatrix a(dim + 1, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i)
      a(i, j) = points[j][i];
    a(dim, j) = 1;
  }
  RatVector b(point.begin(), point.end());
  b.push_back(1);
  RatVector c(points.size(), 0);
  return lp_maximize(a, b, c).status == LpStatus::optimal;
}

} // namespace okb
