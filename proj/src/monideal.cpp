#include "okbody/monideal.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace okb {

namespace {

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Exponent &a, const Exponent &b) {
              int ta = a.total(), tb = b.total();
              return ta != tb ? ta < tb : a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (const auto &g : gens)
    if (std::none_of(out.begin(), out.end(),
                     [&](const Exponent &h) { return h.divides(g); }))
      out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

Exponent lcm(const Exponent &a, const Exponent &b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = std::max(a[i], b[i]);
  return c;
}

void require_same_ring(const MonomialIdeal &a, const MonomialIdeal &b) {
  if (a.nvars() != b.nvars())
    throw InputError("ideals live in different polynomial rings");
}

std::vector<CoordinateSubspace> locus_of(const MonomialIdeal &ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<unsigned> supports;
  for (const auto &g : ideal.generators()) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > 0)
        mask |= 1u << i;
    supports.push_back(mask);
  }
  std::vector<unsigned> masks(1u << n);
  for (unsigned t = 0; t < masks.size(); ++t)
    masks[t] = t;
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<unsigned> minimal;
  for (unsigned t : masks) {
    // Vanishing of every coordinate is not a point of projective space.
    if (static_cast<std::size_t>(std::popcount(t)) == n)
      continue;
    bool hits = std::all_of(supports.begin(), supports.end(),
                            [&](unsigned s) { return (s & t) != 0; });
    if (!hits)
      continue;
    if (std::any_of(minimal.begin(), minimal.end(),
                    [&](unsigned m) { return (m & t) == m; }))
      continue;
    minimal.push_back(t);
  }
  std::vector<CoordinateSubspace> out;
  for (unsigned t : minimal) {
    CoordinateSubspace c;
    for (std::size_t i = 0; i < n; ++i)
      if (t & (1u << i))
        c.vanishing.push_back(i);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Exponent> gens)
    : nvars_(nvars) {
  for (const auto &g : gens)
    if (g.size() != nvars)
      throw InputError("generator " + to_string(g) + " has the wrong length");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Exponent(nvars)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].total() == 0;
}

bool MonomialIdeal::contains(const Exponent &e) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Exponent &g) { return g.divides(e); });
}

bool MonomialIdeal::is_subset_of(const MonomialIdeal &j) const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const Exponent &g) { return j.contains(g); });
}

std::vector<Exponent> MonomialIdeal::degree_part(int degree) const {
  std::vector<Exponent> out;
  for (const auto &e : monomials_of_degree(nvars_, degree))
    if (contains(e))
      out.push_back(e);
  return out;
}

std::string to_string(const MonomialIdeal &ideal) {
  std::string s = "(";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i)
    s += (i ? ", " : "") + to_string(ideal.generators()[i]);
  return s + ")";
}

MonomialIdeal ideal_sum(const MonomialIdeal &a, const MonomialIdeal &b) {
  require_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal &a,
                                 const MonomialIdeal &b) {
  require_same_ring(a, b);
  std::vector<Exponent> gens;
  for (const auto &x : a.generators())
    for (const auto &y : b.generators())
      gens.push_back(lcm(x, y));
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal variable_saturation(const MonomialIdeal &ideal, std::size_t i) {
  if (i >= ideal.nvars())
    throw InputError("variable index out of range");
  auto gens = ideal.generators();
  for (auto &g : gens)
    g[i] = 0;
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal base_ideal(const GradedSeries &s, int k) {
  if (k < 0)
    throw InputError("negative degree");
  const FormSpan &lv = s.level(k);
  if (!lv.is_monomial())
    throw UnsupportedError(
        "base ideal computed only for monomial series");
  return MonomialIdeal(s.nvars(), lv.pivots());
}

MonomialIdeal saturate(const MonomialIdeal &ideal) {
  if (ideal.is_zero())
    return ideal;
  MonomialIdeal out = variable_saturation(ideal, 0);
  for (std::size_t i = 1; i < ideal.nvars(); ++i)
    out = ideal_intersection(out, variable_saturation(ideal, i));
  return out;
}

GradedSeries sheafify(const GradedSeries &s, int K) {
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  const std::size_t n = s.nvars();
  const int m = s.divisor_degree();
  return GradedSeries::explicit_levels(
      s.ambient_dim(), m,
      [s, K, n, m](int k) {
        if (k > K)
          throw InputError("level " + std::to_string(k) +
                           " is beyond the truncation bound " +
                           std::to_string(K));
        std::vector<HomogeneousForm> forms;
        for (const auto &e : saturate(base_ideal(s, k)).degree_part(k * m))
          forms.push_back(HomogeneousForm::monomial(e));
        return span_reduce(n, k * m, forms);
      },
      "sheafification of " + s.description());
}

bool CoordinateSubspace::contains(std::span<const BigRational> x) const {
  return std::all_of(vanishing.begin(), vanishing.end(),
                     [&](std::size_t i) { return i < x.size() && x[i] == 0; });
}

std::vector<CoordinateSubspace> zero_locus(const MonomialIdeal &ideal) {
  if (ideal.nvars() > 16)
    throw UnsupportedError("zero loci computed for at most 16 variables");
  return locus_of(ideal);
}

bool BaseLocusReport::contains(std::span<const BigRational> x) const {
  return std::any_of(components.begin(), components.end(),
                     [&](const CoordinateSubspace &c) { return c.contains(x); });
}

BaseLocusReport base_locus(const GradedSeries &s, int K) {
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  BaseLocusReport r;
  r.truncation = K;
  const int half = std::max(1, K / 2);
  MonomialIdeal sum(s.nvars(), {});
  std::vector<CoordinateSubspace> at_half;
  for (int k = 1; k <= K; ++k) {
    r.base_ideals.push_back(base_ideal(s, k));
    sum = ideal_sum(sum, r.base_ideals.back());
    if (k == half)
      at_half = zero_locus(sum);
  }
  r.components = zero_locus(sum);
  r.empty = r.components.empty();
  r.stabilized = at_half == r.components;
  return r;
}

BirationalityVerdict is_birational_monomial(const GradedSeries &s, int K) {
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  const std::size_t d = s.ambient_dim();
  std::set<IntVector> diffs;
  bool any = false;
  for (int k = 1; k <= K; ++k) {
    base_ideal(s, k); // rejects non-monomial levels
    auto pivots = s.level(k).pivots();
    if (pivots.empty())
      continue;
    any = true;
    for (std::size_t j = 1; j < pivots.size(); ++j) {
      IntVector v(d);
      for (std::size_t i = 0; i < d; ++i)
        v[i] = pivots[j][i] - pivots[0][i];
      diffs.insert(std::move(v));
    }
  }
  if (!any)
    throw InputError("every level up to " + std::to_string(K) + " is zero");
  BirationalityVerdict v;
  v.truncation = K;
  std::vector<IntVector> rows(diffs.begin(), diffs.end());
  v.lattice = lattice_index(rows, d);
  v.birational = v.lattice.finite() && *v.lattice.index == 1;
  if (!rows.empty()) {
    auto h = hermite_normal_form(matrix_from_rows(rows, d));
    IntMatrix basis(h.rank, d);
    for (std::size_t i = 0; i < h.rank; ++i)
      for (std::size_t j = 0; j < d; ++j)
        basis(i, j) = h.hnf(i, j);
    v.hnf = std::move(basis);
  } else {
    v.hnf = IntMatrix(0, d);
  }
  return v;
}

FullVolumeReport full_volume_check(const GradedSeries &s, int K) {
  FullVolumeReport r;
  r.hilbert = hilbert_data(s, K);
  BigInt md;
  mpz_ui_pow_ui(md.get_mpz_t(), static_cast<unsigned long>(s.divisor_degree()),
                static_cast<unsigned long>(s.ambient_dim()));
  r.expected = BigRational(md);
  r.volume_side = r.hilbert.stabilized && r.hilbert.volume == r.expected;
  r.birational = is_birational_monomial(s, K).birational;
  r.base_locus_empty = base_locus(s, K).empty;
  r.geometric_side = r.birational && r.base_locus_empty;
  return r;
}

} // namespace okb
