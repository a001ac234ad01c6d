#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

BigInt leibniz_det(const std::vector<std::vector<long>> &m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i)
      term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::int64_t coset_count_index(const std::vector<std::vector<long>> &gens,
                               std::size_t n) {
  // Find a square subfamily with nonzero determinant.
  long big_n = 0;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> search =
      [&](std::size_t pos, std::size_t start) {
        if (big_n)
          return;
        if (pos == n) {
          std::vector<std::vector<long>> sq;
          for (auto i : pick)
            sq.push_back(gens[i]);
          BigInt d = abs(leibniz_det(sq));
          if (d != 0)
            big_n = d.get_si();
          return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) {
          pick[pos] = i;
          search(pos + 1, i + 1);
        }
      };
  search(0, 0);
  if (!big_n)
    return 0;
  // Breadth-first closure of the generators in (Z/N)^n.
  auto encode = [&](const std::vector<long> &v) {
    std::int64_t code = 0;
    for (auto x : v)
      code = code * big_n + ((x % big_n) + big_n) % big_n;
    return code;
  };
  std::set<std::int64_t> seen;
  std::vector<std::vector<long>> frontier{std::vector<long>(n, 0)};
  seen.insert(encode(frontier[0]));
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto &p : frontier)
      for (const auto &g : gens) {
        std::vector<long> q(n);
        for (std::size_t i = 0; i < n; ++i)
          q[i] = ((p[i] + g[i]) % big_n + big_n) % big_n;
        if (seen.insert(encode(q)).second)
          next.push_back(q);
      }
    frontier = std::move(next);
  }
  std::int64_t all = 1;
  for (std::size_t i = 0; i < n; ++i)
    all *= big_n;
  return all / static_cast<std::int64_t>(seen.size());
}

okb::HomogeneousForm naive_multiply(const okb::HomogeneousForm &f,
                                    const okb::HomogeneousForm &g) {
  std::vector<std::pair<okb::Exponent, BigRational>> terms;
  for (const auto &[a, ca] : f.terms())
    for (const auto &[b, cb] : g.terms()) {
      okb::Exponent e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        e[i] = a[i] + b[i];
      terms.emplace_back(e, ca * cb);
    }
  okb::HomogeneousForm out(f.nvars(), f.degree() + g.degree());
  for (const auto &mono : okb::monomials_of_degree(f.nvars(), out.degree())) {
    BigRational c = 0;
    for (const auto &[e, v] : terms)
      if (e == mono)
        c += v;
    out.add_term(mono, c);
  }
  return out;
}

std::size_t dense_rank(std::size_t nvars, int degree,
                       const std::vector<okb::HomogeneousForm> &forms) {
  auto monos = okb::monomials_of_degree(nvars, degree);
  okb::RatMatrix m(forms.size(), monos.size());
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j)
      m(i, j) = forms[i].coefficient(monos[j]);
  return okb::rank(m);
}

okb::HomogeneousForm random_form(std::mt19937_64 &rng, std::size_t nvars,
                                 int degree, int terms, int coeff_range) {
  auto monos = okb::monomials_of_degree(nvars, degree);
  okb::HomogeneousForm f(nvars, degree);
  for (int i = 0; i < terms; ++i) {
    long c = static_cast<long>(rng() % (2 * coeff_range + 1)) - coeff_range;
    f.add_term(monos[rng() % monos.size()], BigRational(c));
  }
  return f;
}

bool ideal_contains(const std::vector<okb::Exponent> &gens,
                    const okb::Exponent &x) {
  for (const auto &g : gens) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (g[i] > x[i])
        ok = false;
    if (ok)
      return true;
  }
  return false;
}

bool saturation_contains(const std::vector<okb::Exponent> &gens,
                         const okb::Exponent &x, int big_n) {
  for (const auto &m : okb::monomials_of_degree(x.size(), big_n)) {
    okb::Exponent y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      y[i] = x[i] + m[i];
    if (!ideal_contains(gens, y))
      return false;
  }
  return true;
}

} // namespace oracle

namespace oracle {

bool is_extreme_point_lp(const std::vector<okb::RatVector> &points,
                         std::size_t i) {
  std::vector<okb::RatVector> others;
  for (std::size_t j = 0; j < points.size(); ++j)
    if (j != i && points[j] != points[i])
      others.push_back(points[j]);
  return !okb::in_convex_hull(others, points[i]);
}

std::vector<okb::RatVector>
vertices_from_hrep(const std::vector<okb::RatVector> &a,
                   const std::vector<BigRational> &b,
                   const std::vector<okb::RatVector> &e,
                   const std::vector<BigRational> &c, std::size_t n) {
  std::vector<okb::RatVector> out;
  const std::size_t m = a.size();
  std::vector<bool> choose(m, false);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t picked) {
    if (picked + e.size() == n || pos == m) {
      if (picked + e.size() != n)
        return;
      okb::RatMatrix sys(n, n);
      okb::RatVector rhs(n);
      std::size_t r = 0;
      for (std::size_t i = 0; i < e.size(); ++i, ++r) {
        for (std::size_t j = 0; j < n; ++j)
          sys(r, j) = e[i][j];
        rhs[r] = c[i];
      }
      for (std::size_t i = 0; i < m; ++i)
        if (choose[i]) {
          for (std::size_t j = 0; j < n; ++j)
            sys(r, j) = a[i][j];
          rhs[r] = b[i];
          ++r;
        }
      if (okb::determinant(sys) == 0)
        return;
      auto x = okb::solve_rational_system(sys, rhs);
      for (std::size_t i = 0; i < m; ++i)
        if (okb::dot(a[i], *x) > b[i])
          return;
      out.push_back(*x);
      return;
    }
    choose[pos] = true;
    rec(pos + 1, picked + 1);
    choose[pos] = false;
    rec(pos + 1, picked);
  };
  if (e.size() <= n)
    rec(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace oracle
