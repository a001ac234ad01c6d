#pragma once

// Zariski decompositions on a surface described by its intersection lattice,
// and the Newton-Okounkov body of a flag C > {x} built from them.

#include <map>
#include <string>
#include <vector>

#include "okbody/exactnum.hpp"
#include "okbody/polytope.hpp"

namespace okb {

struct SurfaceLattice {
  std::size_t rank = 0;
  IntMatrix gram;
  /// Irreducible curves of negative self-intersection.
  std::vector<IntVector> negative_curves;
  /// Generators of the effective cone; every curve class is a non-negative
  /// combination of them.
  std::vector<IntVector> effective_generators;

  /// Throws InputError unless the data is consistent.
  void validate() const;
};

BigRational intersect(const SurfaceLattice &l, std::span<const BigRational> a,
                      std::span<const BigRational> b);

bool is_pseudo_effective(const SurfaceLattice &l,
                         std::span<const BigRational> d);
/// In the interior of the effective cone.
bool is_big(const SurfaceLattice &l, std::span<const BigRational> d);

struct ZariskiDecomposition {
  RatVector positive;
  /// Coefficient of each negative curve, in the order of the lattice.
  std::vector<BigRational> negative;

  std::vector<std::size_t> support() const;
};

/// D = P + N with P nef, N >= 0 supported on negative curves with negative
/// definite Gram matrix, and P orthogonal to supp N.
ZariskiDecomposition zariski(const SurfaceLattice &l,
                             std::span<const BigRational> d);

/// Largest t with D - tC pseudo-effective. D must be big.
BigRational mu(const SurfaceLattice &l, std::span<const BigRational> d,
               std::span<const BigRational> c);

struct LinearPiece {
  BigRational slope;
  BigRational intercept;
  BigRational at(const BigRational &t) const { return slope * t + intercept; }
  friend bool operator==(const LinearPiece &, const LinearPiece &) = default;
};

struct SurfaceBody {
  BigRational nu;
  BigRational mu;
  /// nu = t_0 < t_1 < ... < t_n = mu.
  std::vector<BigRational> breakpoints;
  /// One piece per interval [t_i, t_{i+1}].
  std::vector<LinearPiece> alpha;
  std::vector<LinearPiece> beta;
  /// Negative-curve support of N_t on each interval.
  std::vector<std::vector<std::size_t>> supports;
  /// mult_x(Gamma . C) per negative-curve index; missing entries are 0.
  std::map<std::size_t, int> point_multiplicities;

  BigRational alpha_at(const BigRational &t) const;
  BigRational beta_at(const BigRational &t) const;
  /// Integral of beta - alpha over [nu, mu].
  BigRational area() const;
  RationalPolytope polygon() const;
};

SurfaceBody surface_body(const SurfaceLattice &l,
                         std::span<const BigRational> d,
                         std::span<const BigRational> c,
                         std::map<std::size_t, int> point_multiplicities = {});

enum class BoundaryLabel {
  valuative,
  /// Non-valuative for a very general point on a curve of positive genus;
  /// unknown otherwise.
  upper_graph,
  unknown,
};

std::string to_string(BoundaryLabel label);

struct BoundaryStratum {
  std::string name;
  /// (a), (b), (c) or "?".
  std::string tag;
  BoundaryLabel label;
  BigRational t_from;
  BigRational t_to;
};

std::vector<BoundaryStratum> classify_boundary(const SurfaceBody &body);

} // namespace okb
