#include "okbody/flagval.hpp"

#include <algorithm>

namespace okb {

namespace {

ValuationVector truncate(const Exponent &e) {
  ValuationVector v(e.size() - 1);
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    v[i] = e[i];
  return v;
}

} // namespace

ValuationVector valuation(const HomogeneousForm &f, const Flag &flag) {
  if (f.is_zero())
    throw InputError("the valuation of the zero section is undefined");
  if (flag.nvars() != f.nvars())
    throw InputError("flag size does not match the form");
  if (flag.is_standard())
    return truncate(f.lowest_exponent());
  return truncate(substitute_linear_unchecked(f, flag.matrix()).lowest_exponent());
}

std::vector<ValuationVector> level_valuations(const GradedSeries &s,
                                              const Flag &flag, int k) {
  if (flag.nvars() != s.nvars())
    throw InputError("flag size does not match the series");
  const FormSpan &lv = s.transformed(flag.matrix()).level(k);
  std::vector<ValuationVector> out;
  out.reserve(lv.dimension());
  for (const auto &e : lv.pivots())
    out.push_back(truncate(e));
  return out;
}

bool ValueSemigroup::contains(const ValuationVector &v, int k) const {
  auto key = std::make_pair(v, k);
  return std::binary_search(points.begin(), points.end(), key,
                            [](const auto &a, const auto &b) {
                              if (a.second != b.second)
                                return a.second < b.second;
                              return a.first < b.first;
                            });
}

ValueSemigroup semigroup(const GradedSeries &s, const Flag &flag, int K) {
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  ValueSemigroup g;
  g.ambient_dim = s.ambient_dim();
  g.truncation = K;
  for (int k = 1; k <= K; ++k)
    for (auto &v : level_valuations(s, flag, k))
      g.points.emplace_back(std::move(v), k);
  return g;
}

LatticeIndex semigroup_index(const ValueSemigroup &g) {
  std::vector<IntVector> rows;
  rows.reserve(g.points.size());
  for (const auto &[v, k] : g.points) {
    IntVector r(v.begin(), v.end());
    r.push_back(k);
    rows.push_back(std::move(r));
  }
  return lattice_index(rows, g.ambient_dim + 1);
}

std::size_t filtered_dimension(const GradedSeries &s, const Flag &flag, int k,
                               const std::vector<int> &sigma) {
  if (sigma.size() > s.ambient_dim())
    throw InputError("filtration prefix longer than the dimension");
  std::size_t count = 0;
  for (const auto &v : level_valuations(s, flag, k)) {
    bool ok = true;
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (v[i] < sigma[i])
        ok = false;
    if (ok)
      ++count;
  }
  return count;
}

} // namespace okb
