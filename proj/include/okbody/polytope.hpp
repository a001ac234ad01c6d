#pragma once

// Exact rational polytopes: convex hulls by beneath-beyond insertion in the
// affine hull, canonical H-representations, volume, slicing.

#include <optional>
#include <span>
#include <vector>

#include "okbody/exactnum.hpp"

namespace okb {

/// normal . x <= offset
struct Halfspace {
  IntVector normal;
  BigRational offset;
  friend bool operator==(const Halfspace &, const Halfspace &) = default;
};

/// normal . x == offset
struct Hyperplane {
  IntVector normal;
  BigRational offset;
  friend bool operator==(const Hyperplane &, const Hyperplane &) = default;
};

class RationalPolytope {
public:
  /// The empty set in R^0.
  RationalPolytope() = default;
  static RationalPolytope empty(std::size_t ambient_dim);
  /// Convex hull. An empty point list gives the empty polytope.
  static RationalPolytope hull(std::span<const RatVector> points,
                               std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  /// Affine dimension; -1 when empty.
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }

  /// Extreme points, ascending lex.
  const std::vector<RatVector> &vertices() const { return vertices_; }
  /// Irredundant facet inequalities. Normals are primitive integer vectors
  /// lying in the direction space of the affine hull; sorted.
  const std::vector<Halfspace> &facets() const { return facets_; }
  /// Affine hull equations, in reduced echelon form scaled to primitive
  /// integers.
  const std::vector<Hyperplane> &equations() const { return equations_; }

  /// Volume in R^ambient_dim; zero unless full-dimensional. A point in R^0
  /// has volume 1.
  BigRational volume() const;

  /// With strictly = true, membership in the relative interior.
  bool contains(std::span<const BigRational> x, bool strictly = false) const;

  /// Structural equality of the canonical H-representations.
  friend bool operator==(const RationalPolytope &a, const RationalPolytope &b);

private:
  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Hyperplane> equations_;
};

RationalPolytope translate(const RationalPolytope &p,
                           std::span<const BigRational> v);
/// c >= 0.
RationalPolytope scale(const RationalPolytope &p, const BigRational &c);
bool equals(const RationalPolytope &p, const RationalPolytope &q);
bool contains_point(const RationalPolytope &p, std::span<const BigRational> x,
                    bool strictly);
/// p is a subset of q.
bool is_subset(const RationalPolytope &p, const RationalPolytope &q);

/// P cap {x_1 = t}, with the first coordinate dropped.
RationalPolytope slice(const RationalPolytope &p, const BigRational &t);
/// P cap {a . x >= b}.
RationalPolytope intersect_halfspace(const RationalPolytope &p,
                                     std::span<const BigRational> a,
                                     const BigRational &b);

std::string to_string(const RatVector &v);

} // namespace okb
