#include "okbody/polytope.hpp"

#include <algorithm>
#include <map>

namespace okb {

namespace {

struct SimplexFacet {
  std::vector<std::size_t> idx; // sorted point indices
  RatVector normal;             // normal . y <= offset on the hull
  BigRational offset;
};

// Normal of the hyperplane through the given points in Q^r (r points,
// affinely independent), oriented so that `inside` is on the <= side.
SimplexFacet make_facet(const std::vector<RatVector> &pts,
                        std::vector<std::size_t> idx, const RatVector &inside) {
  const std::size_t r = inside.size();
  RatMatrix m(r - 1, r);
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = 0; j < r; ++j)
      m(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
  auto pivots = row_reduce(m);
  // The kernel is one-dimensional: take the first free column.
  std::size_t free = 0;
  for (std::size_t p = 0; p < pivots.size() && pivots[p] == free; ++p)
    ++free;
  RatVector normal(r);
  normal[free] = 1;
  for (std::size_t p = 0; p < pivots.size(); ++p)
    normal[pivots[p]] = -m(p, free);
  BigRational offset = dot(normal, pts[idx[0]]);
  if (dot(normal, inside) > offset) {
    for (auto &x : normal)
      x = -x;
    offset = -offset;
  }
  std::sort(idx.begin(), idx.end());
  return {std::move(idx), std::move(normal), std::move(offset)};
}

// Beneath-beyond in Q^r for full-dimensional point sets, r >= 2. Returns a
// simplicial triangulation of the boundary (coplanar facets not merged).
std::vector<SimplexFacet> beneath_beyond(const std::vector<RatVector> &pts) {
  const std::size_t r = pts[0].size();
  // Initial simplex: greedily extend an affinely independent set.
  std::vector<std::size_t> simplex{0};
  RatMatrix basis(0, r);
  std::vector<RatVector> dirs;
  for (std::size_t i = 1; i < pts.size() && simplex.size() < r + 1; ++i) {
    RatMatrix m(dirs.size() + 1, r);
    for (std::size_t a = 0; a < dirs.size(); ++a)
      for (std::size_t j = 0; j < r; ++j)
        m(a, j) = dirs[a][j];
    RatVector d(r);
    for (std::size_t j = 0; j < r; ++j)
      d[j] = pts[i][j] - pts[0][j];
    for (std::size_t j = 0; j < r; ++j)
      m(dirs.size(), j) = d[j];
    if (rank(m) == dirs.size() + 1) {
      dirs.push_back(d);
      simplex.push_back(i);
    }
  }
  if (simplex.size() != r + 1)
    throw InvariantError("hull input is not full-dimensional");

  RatVector inside(r);
  for (auto i : simplex)
    for (std::size_t j = 0; j < r; ++j)
      inside[j] += pts[i][j];
  for (auto &x : inside)
    x /= static_cast<unsigned long>(r + 1);

  std::vector<SimplexFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != skip)
        idx.push_back(simplex[i]);
    facets.push_back(make_facet(pts, std::move(idx), inside));
  }

  std::vector<bool> used(pts.size(), false);
  for (auto i : simplex)
    used[i] = true;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (used[p])
      continue;
    std::vector<bool> visible(facets.size());
    bool any = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      visible[f] = dot(facets[f].normal, pts[p]) > facets[f].offset;
      any = any || visible[f];
    }
    if (!any)
      continue;
    std::map<std::vector<std::size_t>, int> ridges;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f])
        continue;
      const auto &idx = facets[f].idx;
      for (std::size_t drop = 0; drop < idx.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (i != drop)
            ridge.push_back(idx[i]);
        ++ridges[ridge];
      }
    }
    std::vector<SimplexFacet> next;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (!visible[f])
        next.push_back(std::move(facets[f]));
    for (auto &[ridge, count] : ridges) {
      if (count != 1)
        continue;
      auto idx = ridge;
      idx.push_back(p);
      next.push_back(make_facet(pts, std::move(idx), inside));
    }
    facets = std::move(next);
  }
  return facets;
}

IntVector primitive(const RatVector &v) { return primitive_integer_vector(v); }

RatVector to_rat(const IntVector &v) {
  return RatVector(v.begin(), v.end());
}

BigRational factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<unsigned long>(i);
  return BigRational(f);
}

std::vector<RatVector> dedupe(std::span<const RatVector> points) {
  std::vector<RatVector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

} // namespace

std::string to_string(const RatVector &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

RationalPolytope RationalPolytope::empty(std::size_t ambient_dim) {
  RationalPolytope p;
  p.ambient_ = ambient_dim;
  return p;
}

RationalPolytope RationalPolytope::hull(std::span<const RatVector> points,
                                        std::size_t ambient_dim) {
  RationalPolytope out = empty(ambient_dim);
  for (const auto &p : points)
    if (p.size() != ambient_dim)
      throw InputError("point " + to_string(p) + " is not in R^" +
                       std::to_string(ambient_dim));
  auto pts = dedupe(points);
  if (pts.empty())
    return out;
  const std::size_t n = ambient_dim;
  const RatVector &p0 = pts[0];

  // Direction space of the affine hull, in reduced echelon form.
  RatMatrix diffs(pts.size(), n);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      diffs(i, j) = pts[i][j] - p0[j];
  auto pivots = row_reduce(diffs);
  const std::size_t r = pivots.size();
  out.dim_ = static_cast<int>(r);

  // Equations: one per free column.
  {
    std::vector<RatVector> eqs;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < n; ++f) {
      if (next_pivot < r && pivots[next_pivot] == f) {
        ++next_pivot;
        continue;
      }
      RatVector e(n);
      e[f] = 1;
      for (std::size_t p = 0; p < r; ++p)
        e[pivots[p]] = -diffs(p, f);
      eqs.push_back(std::move(e));
    }
    RatMatrix aug(eqs.size(), n + 1);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j)
        aug(i, j) = eqs[i][j];
      aug(i, n) = dot(eqs[i], p0);
    }
    row_reduce(aug);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      RatVector row = aug.row(i);
      IntVector prim = primitive(row);
      // primitive() keeps the sign; the leading entry is already positive.
      Hyperplane h;
      h.normal.assign(prim.begin(), prim.begin() + n);
      h.offset = BigRational(prim[n]);
      out.equations_.push_back(std::move(h));
    }
  }

  // Coordinates on the affine hull: the pivot coordinates.
  std::vector<RatVector> ys(pts.size(), RatVector(r));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t p = 0; p < r; ++p)
      ys[i][p] = pts[i][pivots[p]];

  std::vector<std::pair<RatVector, BigRational>> proj_facets;
  if (r == 1) {
    auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    proj_facets.push_back({RatVector{-1}, -(*lo)[0]});
    proj_facets.push_back({RatVector{1}, (*hi)[0]});
  } else if (r >= 2) {
    std::map<std::pair<IntVector, BigRational>, bool> seen;
    for (auto &f : beneath_beyond(ys)) {
      IntVector a = primitive(f.normal);
      BigRational scale_factor = a[0] != 0 ? BigRational(a[0]) / f.normal[0]
                                           : BigRational(0);
      for (std::size_t j = 0; scale_factor == 0; ++j)
        if (f.normal[j] != 0)
          scale_factor = BigRational(a[j]) / f.normal[j];
      BigRational b = f.offset * scale_factor;
      if (seen.emplace(std::make_pair(a, b), true).second)
        proj_facets.push_back({to_rat(a), b});
    }
  }

  // Vertices: points whose tight facet normals have full rank r.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (r == 0) {
      out.vertices_.push_back(pts[i]);
      continue;
    }
    std::vector<RatVector> tight;
    for (const auto &[a, b] : proj_facets)
      if (dot(a, ys[i]) == b)
        tight.push_back(a);
    if (tight.size() < r)
      continue;
    RatMatrix m(tight.size(), r);
    for (std::size_t t = 0; t < tight.size(); ++t)
      for (std::size_t j = 0; j < r; ++j)
        m(t, j) = tight[t][j];
    if (rank(m) == r)
      out.vertices_.push_back(pts[i]);
  }

  // Lift facets to R^n: project the normal onto the direction space.
  RatMatrix w(r, n);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t j = 0; j < n; ++j)
      w(p, j) = diffs(p, j);
  RatMatrix gram = w * w.transpose();
  for (const auto &[a, b] : proj_facets) {
    RatVector lifted(n);
    for (std::size_t p = 0; p < r; ++p)
      lifted[pivots[p]] = a[p];
    RatVector coeffs = *solve_rational_system(gram, w * lifted);
    RatVector projected = w.transpose() * coeffs;
    Halfspace h;
    h.normal = primitive(projected);
    RatVector hn = to_rat(h.normal);
    h.offset = dot(hn, out.vertices_[0]);
    for (const auto &v : out.vertices_)
      h.offset = std::max(h.offset, dot(hn, v));
    out.facets_.push_back(std::move(h));
  }
  std::sort(out.facets_.begin(), out.facets_.end(),
            [](const Halfspace &x, const Halfspace &y) {
              if (x.normal != y.normal)
                return x.normal < y.normal;
              return x.offset < y.offset;
            });
  return out;
}

BigRational RationalPolytope::volume() const {
  if (is_empty() || static_cast<std::size_t>(dim_) < ambient_)
    return 0;
  if (ambient_ == 0)
    return 1;
  if (ambient_ == 1)
    return vertices_.back()[0] - vertices_.front()[0];
  const std::size_t n = ambient_;
  auto tri = beneath_beyond(vertices_);
  const RatVector &v0 = vertices_[0];
  BigRational total = 0;
  for (const auto &f : tri) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = vertices_[f.idx[i]][j] - v0[j];
    total += abs(determinant(m));
  }
  return total / factorial(n);
}

bool RationalPolytope::contains(std::span<const BigRational> x,
                                bool strictly) const {
  if (x.size() != ambient_)
    throw InputError("point dimension does not match the polytope");
  if (is_empty())
    return false;
  for (const auto &e : equations_)
    if (dot(to_rat(e.normal), x) != e.offset)
      return false;
  for (const auto &h : facets_) {
    BigRational v = dot(to_rat(h.normal), x);
    if (strictly ? v >= h.offset : v > h.offset)
      return false;
  }
  return true;
}

bool operator==(const RationalPolytope &a, const RationalPolytope &b) {
  return a.ambient_ == b.ambient_ && a.dim_ == b.dim_ &&
         a.equations_ == b.equations_ && a.facets_ == b.facets_;
}

RationalPolytope translate(const RationalPolytope &p,
                           std::span<const BigRational> v) {
  if (v.size() != p.ambient_dim())
    throw InputError("translation vector has the wrong dimension");
  std::vector<RatVector> pts;
  for (auto x : p.vertices()) {
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] += v[j];
    pts.push_back(std::move(x));
  }
  return RationalPolytope::hull(pts, p.ambient_dim());
}

RationalPolytope scale(const RationalPolytope &p, const BigRational &c) {
  if (c < 0)
    throw InputError("negative scale factor");
  std::vector<RatVector> pts;
  for (auto x : p.vertices()) {
    for (auto &t : x)
      t *= c;
    pts.push_back(std::move(x));
  }
  return RationalPolytope::hull(pts, p.ambient_dim());
}

bool equals(const RationalPolytope &p, const RationalPolytope &q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw InputError("comparing polytopes in different dimensions");
  return p == q;
}

bool contains_point(const RationalPolytope &p, std::span<const BigRational> x,
                    bool strictly) {
  return p.contains(x, strictly);
}

bool is_subset(const RationalPolytope &p, const RationalPolytope &q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw InputError("comparing polytopes in different dimensions");
  for (const auto &v : p.vertices())
    if (!q.contains(v))
      return false;
  return true;
}

namespace {

// Hull of the vertices with f >= 0 and of the crossing points of all
// vertex pairs with f of opposite strict signs. Every vertex of P cap
// {f >= 0} is of one of these two kinds (it lies on an edge of P).
template <class F>
std::vector<RatVector> cut_points(const RationalPolytope &p, F f,
                                  bool keep_positive) {
  const auto &vs = p.vertices();
  std::vector<BigRational> vals;
  for (const auto &v : vs)
    vals.push_back(f(v));
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vals[i] == 0 || (keep_positive && vals[i] > 0))
      out.push_back(vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!((vals[i] > 0 && vals[j] < 0) || (vals[i] < 0 && vals[j] > 0)))
        continue;
      BigRational lambda = vals[i] / (vals[i] - vals[j]);
      RatVector x(vs[i].size());
      for (std::size_t c = 0; c < x.size(); ++c)
        x[c] = vs[i][c] + lambda * (vs[j][c] - vs[i][c]);
      out.push_back(std::move(x));
    }
  }
  return out;
}

} // namespace

RationalPolytope slice(const RationalPolytope &p, const BigRational &t) {
  if (p.ambient_dim() == 0)
    throw InputError("cannot slice a polytope in R^0");
  auto pts = cut_points(
      p, [&](const RatVector &v) -> BigRational { return v[0] - t; }, false);
  for (auto &x : pts)
    x.erase(x.begin());
  return RationalPolytope::hull(pts, p.ambient_dim() - 1);
}

RationalPolytope intersect_halfspace(const RationalPolytope &p,
                                     std::span<const BigRational> a,
                                     const BigRational &b) {
  if (a.size() != p.ambient_dim())
    throw InputError("halfspace normal has the wrong dimension");
  auto pts = cut_points(
      p, [&](const RatVector &v) -> BigRational { return dot(a, v) - b; }, true);
  return RationalPolytope::hull(pts, p.ambient_dim());
}

} // namespace okb
