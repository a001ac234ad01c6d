#include "okbody/surfacezar.hpp"

#include <algorithm>
#include <optional>

namespace okb {

namespace {

RatVector rat(const IntVector &v) { return RatVector(v.begin(), v.end()); }

std::vector<RatVector> rat_all(const std::vector<IntVector> &vs) {
  std::vector<RatVector> out;
  for (const auto &v : vs)
    out.push_back(rat(v));
  return out;
}

void check_class(const SurfaceLattice &l, std::span<const BigRational> v,
                 const char *what) {
  if (v.size() != l.rank)
    throw InputError(std::string(what) + " has " + std::to_string(v.size()) +
                     " entries, the lattice has rank " +
                     std::to_string(l.rank));
}

// Sylvester: (-1)^k times the k-th leading minor is positive.
bool negative_definite(const RatMatrix &g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    RatMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        minor(i, j) = g(i, j);
    BigRational det = determinant(minor);
    if ((k % 2 ? -det : det) <= 0)
      return false;
  }
  return true;
}

struct SupportSystem {
  RatMatrix gram;
  RatMatrix inverse;
};

SupportSystem support_system(const SurfaceLattice &l,
                             const std::vector<RatVector> &curves,
                             const std::vector<std::size_t> &supp) {
  SupportSystem s;
  s.gram = RatMatrix(supp.size(), supp.size());
  for (std::size_t i = 0; i < supp.size(); ++i)
    for (std::size_t j = 0; j < supp.size(); ++j)
      s.gram(i, j) = intersect(l, curves[supp[i]], curves[supp[j]]);
  if (!negative_definite(s.gram))
    throw InputError("negative curves in the support do not have a negative "
                     "definite intersection matrix");
  s.inverse = *inverse(s.gram);
  return s;
}

// Coefficients x with (v - sum x_j Gamma_j) . Gamma_i = 0 on the support.
RatVector orthogonal_coefficients(const SurfaceLattice &l,
                                  const std::vector<RatVector> &curves,
                                  const std::vector<std::size_t> &supp,
                                  const SupportSystem &sys,
                                  std::span<const BigRational> v) {
  RatVector rhs(supp.size());
  for (std::size_t i = 0; i < supp.size(); ++i)
    rhs[i] = intersect(l, v, curves[supp[i]]);
  return sys.inverse * rhs;
}

RatVector minus_combination(std::span<const BigRational> v,
                            const std::vector<RatVector> &curves,
                            const std::vector<std::size_t> &supp,
                            const RatVector &coeffs) {
  RatVector out(v.begin(), v.end());
  for (std::size_t j = 0; j < supp.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] -= coeffs[j] * curves[supp[j]][i];
  return out;
}

RatVector axpy(std::span<const BigRational> d, const BigRational &t,
               std::span<const BigRational> c) {
  RatVector out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    out[i] = d[i] - t * c[i];
  return out;
}

} // namespace

void SurfaceLattice::validate() const {
  if (gram.rows() != rank || gram.cols() != rank)
    throw InputError("gram matrix must be " + std::to_string(rank) + "x" +
                     std::to_string(rank));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i))
        throw InputError("gram matrix is not symmetric");
  for (const auto &v : negative_curves)
    if (v.size() != rank)
      throw InputError("negative curve of the wrong rank");
  for (const auto &v : effective_generators)
    if (v.size() != rank)
      throw InputError("effective generator of the wrong rank");
  for (const auto &v : negative_curves) {
    RatVector r = rat(v);
    if (intersect(*this, r, r) >= 0)
      throw InputError("listed negative curve " + to_string(r) +
                       " has non-negative self-intersection");
  }
  if (okb::rank(to_rational(matrix_from_rows(effective_generators, rank))) !=
      rank)
    throw InputError("effective generators do not span the lattice");
}

BigRational intersect(const SurfaceLattice &l, std::span<const BigRational> a,
                      std::span<const BigRational> b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < l.rank; ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < l.rank; ++j)
      s += a[i] * l.gram(i, j) * b[j];
  }
  return s;
}

bool is_pseudo_effective(const SurfaceLattice &l,
                         std::span<const BigRational> d) {
  check_class(l, d, "class");
  return in_cone(rat_all(l.effective_generators), d);
}

bool is_big(const SurfaceLattice &l, std::span<const BigRational> d) {
  check_class(l, d, "class");
  const std::size_t g = l.effective_generators.size();
  RatMatrix a(l.rank, g + 1);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < l.rank; ++i) {
      a(i, j) = l.effective_generators[j][i];
      a(i, g) += l.effective_generators[j][i];
    }
  RatVector c(g + 1);
  c[g] = 1;
  auto r = lp_maximize(a, RatVector(d.begin(), d.end()), c);
  if (r.status == LpStatus::infeasible)
    return false;
  return r.status == LpStatus::unbounded || r.value > 0;
}

std::vector<std::size_t> ZariskiDecomposition::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < negative.size(); ++i)
    if (negative[i] != 0)
      s.push_back(i);
  return s;
}

ZariskiDecomposition zariski(const SurfaceLattice &l,
                             std::span<const BigRational> d) {
  l.validate();
  check_class(l, d, "divisor");
  if (!is_pseudo_effective(l, d))
    throw InputError("not pseudo-effective: " +
                     to_string(RatVector(d.begin(), d.end())));
  const auto curves = rat_all(l.negative_curves);
  std::vector<std::size_t> supp;
  RatVector coeffs;
  RatVector p(d.begin(), d.end());
  for (;;) {
    std::vector<std::size_t> grow;
    for (std::size_t i = 0; i < curves.size(); ++i)
      if (!std::binary_search(supp.begin(), supp.end(), i) &&
          intersect(l, p, curves[i]) < 0)
        grow.push_back(i);
    if (grow.empty())
      break;
    supp.insert(supp.end(), grow.begin(), grow.end());
    std::sort(supp.begin(), supp.end());
    auto sys = support_system(l, curves, supp);
    coeffs = orthogonal_coefficients(l, curves, supp, sys, d);
    for (const auto &x : coeffs)
      if (x < 0)
        throw InvariantError("negative part acquired a negative coefficient");
    p = minus_combination(d, curves, supp, coeffs);
  }
  for (const auto &g : rat_all(l.effective_generators))
    if (intersect(l, p, g) < 0)
      throw InputError("negative-curve list insufficient: positive part " +
                       to_string(p) + " is negative on " + to_string(g));
  ZariskiDecomposition z;
  z.positive = std::move(p);
  z.negative.assign(curves.size(), BigRational(0));
  for (std::size_t j = 0; j < supp.size(); ++j)
    z.negative[supp[j]] = coeffs[j];
  return z;
}

BigRational mu(const SurfaceLattice &l, std::span<const BigRational> d,
               std::span<const BigRational> c) {
  l.validate();
  check_class(l, d, "D");
  check_class(l, c, "C");
  if (!is_big(l, d))
    throw InputError("D is not big");
  if (std::all_of(c.begin(), c.end(), [](const BigRational &x) { return x == 0; }) ||
      !is_pseudo_effective(l, c))
    throw InputError("C is not an effective class");
  const std::size_t g = l.effective_generators.size();
  RatMatrix a(l.rank, g + 1);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < l.rank; ++i)
      a(i, j) = l.effective_generators[j][i];
  for (std::size_t i = 0; i < l.rank; ++i)
    a(i, g) = c[i];
  RatVector obj(g + 1);
  obj[g] = 1;
  auto r = lp_maximize(a, RatVector(d.begin(), d.end()), obj);
  if (r.status != LpStatus::optimal)
    throw InputError("D - tC stays effective for all t; C is not an "
                     "effective direction");
  return r.value;
}

BigRational SurfaceBody::alpha_at(const BigRational &t) const {
  if (t < nu || t > mu)
    throw InputError("t outside [nu, mu]");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (t <= breakpoints[i + 1])
      return alpha[i].at(t);
  return alpha.back().at(t);
}

BigRational SurfaceBody::beta_at(const BigRational &t) const {
  if (t < nu || t > mu)
    throw InputError("t outside [nu, mu]");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (t <= breakpoints[i + 1])
      return beta[i].at(t);
  return beta.back().at(t);
}

BigRational SurfaceBody::area() const {
  BigRational a = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const auto &t0 = breakpoints[i], &t1 = breakpoints[i + 1];
    BigRational h0 = beta[i].at(t0) - alpha[i].at(t0);
    BigRational h1 = beta[i].at(t1) - alpha[i].at(t1);
    a += (h0 + h1) * (t1 - t0) / 2;
  }
  return a;
}

RationalPolytope SurfaceBody::polygon() const {
  std::vector<RatVector> pts;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    for (const auto &t : {breakpoints[i], breakpoints[i + 1]}) {
      pts.push_back({t, alpha[i].at(t)});
      pts.push_back({t, beta[i].at(t)});
    }
  return RationalPolytope::hull(pts, 2);
}

SurfaceBody surface_body(const SurfaceLattice &l,
                         std::span<const BigRational> d,
                         std::span<const BigRational> c,
                         std::map<std::size_t, int> point_multiplicities) {
  SurfaceBody body;
  body.mu = mu(l, d, c);
  const auto curves = rat_all(l.negative_curves);
  const auto gens = rat_all(l.effective_generators);
  for (const auto &[idx, mult] : point_multiplicities)
    if (idx >= curves.size() || mult < 0)
      throw InputError("point multiplicity must name a listed negative curve "
                       "and be non-negative");
  body.point_multiplicities = std::move(point_multiplicities);
  auto mult_of = [&](std::size_t i) {
    auto it = body.point_multiplicities.find(i);
    return it == body.point_multiplicities.end() ? 0 : it->second;
  };

  std::optional<std::size_t> c_index;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (std::equal(curves[i].begin(), curves[i].end(), c.begin()))
      c_index = i;
  body.nu = c_index ? zariski(l, d).negative[*c_index] : BigRational(0);
  if (body.nu > body.mu)
    throw InvariantError("nu exceeds mu");

  BigRational t0 = body.nu;
  body.breakpoints.push_back(t0);
  do {
    auto supp = zariski(l, axpy(d, t0, c)).support();
    // On [t0, t1] the support is fixed and N_t = sum (a_j - t b_j) Gamma_j.
    RatVector a, b, p0, p1;
    for (;;) {
      if (supp.empty()) {
        p0.assign(d.begin(), d.end());
        p1 = axpy(RatVector(l.rank), 1, c);
        a.clear();
        b.clear();
      } else {
        auto sys = support_system(l, curves, supp);
        a = orthogonal_coefficients(l, curves, supp, sys, d);
        b = orthogonal_coefficients(l, curves, supp, sys, c);
        p0 = minus_combination(d, curves, supp, a);
        RatVector minus_c(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
          minus_c[i] = -c[i];
        RatVector neg_b = b;
        for (auto &x : neg_b)
          x = -x;
        p1 = minus_combination(minus_c, curves, supp, neg_b);
      }
      // Curves with P.Gamma = 0 at t0 that turn negative right after join.
      bool grew = false;
      for (std::size_t i = 0; i < curves.size(); ++i) {
        if (std::binary_search(supp.begin(), supp.end(), i))
          continue;
        BigRational v = intersect(l, p0, curves[i]) +
                        t0 * intersect(l, p1, curves[i]);
        if (v == 0 && intersect(l, p1, curves[i]) < 0) {
          supp.insert(std::upper_bound(supp.begin(), supp.end(), i), i);
          grew = true;
        }
      }
      if (!grew)
        break;
    }
    if (c_index && std::binary_search(supp.begin(), supp.end(), *c_index))
      throw InvariantError("C lies in the support of the negative part of "
                           "D - tC at t = " + t0.get_str());

    BigRational t1 = body.mu;
    auto limit = [&](const RatVector &g) {
      BigRational slope = intersect(l, p1, g);
      if (slope >= 0)
        return;
      BigRational root = -intersect(l, p0, g) / slope;
      if (root < t1)
        t1 = root;
    };
    for (std::size_t i = 0; i < curves.size(); ++i)
      if (!std::binary_search(supp.begin(), supp.end(), i))
        limit(curves[i]);
    for (const auto &g : gens)
      limit(g);
    if (body.nu < body.mu && t1 <= t0)
      throw InputError("negative-curve list insufficient: the positive part "
                       "of D - tC stops being nef at t = " + t0.get_str());
    for (std::size_t j = 0; j < supp.size(); ++j)
      if (a[j] - t1 * b[j] < 0)
        throw InvariantError("support of N_t shrinks inside [" +
                             t0.get_str() + ", " + t1.get_str() + "]");

    LinearPiece alpha{0, 0};
    for (std::size_t j = 0; j < supp.size(); ++j) {
      int m = mult_of(supp[j]);
      alpha.slope -= m * b[j];
      alpha.intercept += m * a[j];
    }
    LinearPiece beta = alpha;
    beta.slope += intersect(l, c, p1);
    beta.intercept += intersect(l, c, p0);
    body.alpha.push_back(alpha);
    body.beta.push_back(beta);
    body.supports.push_back(supp);
    body.breakpoints.push_back(t1);
    t0 = t1;
  } while (t0 < body.mu);
  return body;
}

std::string to_string(BoundaryLabel label) {
  switch (label) {
  case BoundaryLabel::valuative:
    return "valuative";
  case BoundaryLabel::upper_graph:
    return "non-valuative for a very general point on a curve of positive "
           "genus, otherwise unknown";
  case BoundaryLabel::unknown:
    return "unknown";
  }
  return "unknown";
}

std::vector<BoundaryStratum> classify_boundary(const SurfaceBody &body) {
  if (body.nu == body.mu)
    return {{"left edge", "(b)", BoundaryLabel::valuative, body.nu, body.mu}};
  return {
      {"interior", "(a)", BoundaryLabel::valuative, body.nu, body.mu},
      {"left edge", "(b)", BoundaryLabel::valuative, body.nu, body.nu},
      {"lower graph", "(c)", BoundaryLabel::valuative, body.nu, body.mu},
      {"upper graph", "?", BoundaryLabel::upper_graph, body.nu, body.mu},
      {"right edge", "?", BoundaryLabel::unknown, body.mu, body.mu},
  };
}

} // namespace okb
