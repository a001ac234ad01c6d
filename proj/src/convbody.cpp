#include "okbody/convbody.hpp"

#include <algorithm>

namespace okb {

namespace {

RationalPolytope standard_simplex(std::size_t d, int m) {
  std::vector<RatVector> pts{RatVector(d)};
  for (std::size_t i = 0; i < d; ++i) {
    RatVector e(d);
    e[i] = m;
    pts.push_back(std::move(e));
  }
  return RationalPolytope::hull(pts, d);
}

} // namespace

std::vector<RatVector> normalized_points(const GradedSeries &s,
                                         const Flag &flag, int K) {
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  std::vector<RatVector> pts;
  for (int k = 1; k <= K; ++k)
    for (const auto &v : level_valuations(s, flag, k)) {
      RatVector p(v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        p[i] = make_rational(v[i], k);
      pts.push_back(std::move(p));
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

BodyReport okounkov_body(const GradedSeries &s, const Flag &flag, int K) {
  auto pts = normalized_points(s, flag, K);
  if (pts.empty())
    throw InputError("every level up to " + std::to_string(K) +
                     " is zero; the body is empty");
  BodyReport r;
  r.truncation = K;
  r.point_count = pts.size();
  r.polytope = RationalPolytope::hull(pts, s.ambient_dim());

  if (s.has_monomial_generators() && flag.is_monomial()) {
    int max_degree = 0;
    for (const auto &block : *s.generators())
      if (!block.forms.empty())
        max_degree = std::max(max_degree, block.degree);
    if (max_degree <= K)
      r.certificate = ExactnessCertificate{
          ExactnessCertificate::Kind::monomial_generators, max_degree,
          "monomial generators of degree <= " + std::to_string(max_degree) +
              " under a monomial flag"};
  }
  if (!r.certificate &&
      r.polytope == standard_simplex(s.ambient_dim(), s.divisor_degree())) {
    int needed = 0;
    for (int k = 1; k <= K && !needed; ++k) {
      std::vector<RatVector> upto;
      for (const auto &p : normalized_points(s, flag, k))
        upto.push_back(p);
      if (RationalPolytope::hull(upto, s.ambient_dim()) == r.polytope)
        needed = k;
    }
    r.certificate = ExactnessCertificate{
        ExactnessCertificate::Kind::complete_simplex, needed,
        "inner hull equals the body of the complete series"};
  }
  return r;
}

std::optional<ValuativeWitness> valuative_witness(const GradedSeries &s,
                                                  const Flag &flag,
                                                  std::span<const BigRational> p,
                                                  int K) {
  if (p.size() != s.ambient_dim())
    throw InputError("point dimension does not match the series");
  BigInt den = 1;
  for (const auto &x : p)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (int k = 1; k <= K; ++k) {
    if (BigInt(k) % den != 0)
      continue;
    ValuationVector target(p.size());
    bool negative = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      BigRational kp = p[i] * k;
      if (kp < 0)
        negative = true;
      else
        target[i] = static_cast<int>(kp.get_num().get_si());
    }
    if (negative)
      return std::nullopt;
    const FormSpan &lv = s.transformed(flag.matrix()).level(k);
    const auto &basis = lv.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Exponent &e = basis[i].lowest_exponent();
      bool match = true;
      for (std::size_t j = 0; j < target.size() && match; ++j)
        match = e[j] == target[j];
      if (!match)
        continue;
      HomogeneousForm section =
          flag.is_standard()
              ? basis[i]
              : substitute_linear_unchecked(basis[i], flag.inverse_matrix());
      return ValuativeWitness{k, i, std::move(section)};
    }
  }
  return std::nullopt;
}

SegmentWitness segment_witness(const HomogeneousForm &s, int ks,
                               const HomogeneousForm &t, int kt, int a, int b) {
  if (b < 1 || a < 0 || a > b)
    throw InputError("segment parameter must lie in [0, 1]");
  return {b * ks * kt, power(s, a * kt) * power(t, (b - a) * ks)};
}

std::optional<ConstructiveWitness>
constructive_witness(const GradedSeries &s, const Flag &flag,
                     std::span<const BigRational> p, int K) {
  const std::size_t d = s.ambient_dim();
  if (p.size() != d)
    throw InputError("point dimension does not match the series");
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  struct Source {
    int level;
    std::size_t index;
    RatVector point;
  };
  std::vector<Source> sources;
  GradedSeries t = s.transformed(flag.matrix());
  for (int k = 1; k <= K; ++k) {
    const auto &basis = t.level(k).basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Exponent &e = basis[i].lowest_exponent();
      RatVector pt(d);
      for (std::size_t j = 0; j < d; ++j)
        pt[j] = make_rational(e[j], k);
      bool seen = std::any_of(sources.begin(), sources.end(),
                              [&](const Source &x) { return x.point == pt; });
      if (!seen)
        sources.push_back({k, i, std::move(pt)});
    }
  }
  // Feasibility of sum l_i P_i = p, sum l_i = 1, l >= 0; the simplex method
  // returns a basic solution, so at most d + 1 of the l_i are nonzero.
  RatMatrix a(d + 1, sources.size());
  RatVector rhs(d + 1);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j)
      a(j, i) = sources[i].point[j];
    a(d, i) = 1;
  }
  for (std::size_t j = 0; j < d; ++j)
    rhs[j] = p[j];
  rhs[d] = 1;
  auto lp = lp_maximize(a, rhs, RatVector(sources.size()));
  if (lp.status != LpStatus::optimal)
    return std::nullopt;

  BigInt m = 1;
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (lp.x[i] != 0) {
      BigRational r = lp.x[i] / sources[i].level;
      mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), r.get_den_mpz_t());
    }
  if (!m.fits_sint_p())
    throw UnsupportedError("witness degree overflows");
  ConstructiveWitness w;
  w.degree = static_cast<int>(m.get_si());
  w.value.assign(d, 0);
  HomogeneousForm product = HomogeneousForm::constant(s.nvars());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (lp.x[i] == 0)
      continue;
    BigRational c = lp.x[i] * w.degree / sources[i].level;
    int power = static_cast<int>(c.get_num().get_si());
    const auto &src = sources[i];
    w.factors.push_back({src.level, src.index, power});
    const HomogeneousForm &f = t.level(src.level).basis()[src.index];
    product = product * okb::power(f, power);
    const Exponent &e = f.lowest_exponent();
    for (std::size_t j = 0; j < d; ++j)
      w.value[j] += power * e[j];
  }
  w.section = flag.is_standard()
                  ? std::move(product)
                  : substitute_linear_unchecked(product, flag.inverse_matrix());
  return w;
}

RationalPolytope restricted_slice_body(const GradedSeries &s, const Flag &flag,
                                       int a, int b, int K) {
  if (a < 0 || b < 1)
    throw InputError("slice parameter must be a non-negative a/b with b >= 1");
  GradedSeries derived =
      restrict_to_flag_divisor(subtract_divisor(veronese(s, b), a, flag), flag);
  auto pts = normalized_points(derived, Flag::standard(derived.nvars()), K);
  return scale(RationalPolytope::hull(pts, derived.ambient_dim()),
               make_rational(1, b));
}

} // namespace okb
