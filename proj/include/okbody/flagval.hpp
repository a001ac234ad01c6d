#pragma once

#include <utility>
#include <vector>

#include "okbody/flag.hpp"
#include "okbody/glseries.hpp"

namespace okb {

/// d non-negative integers, compared lexicographically.
using ValuationVector = std::vector<int>;

/// Lex-minimal exponent of f(A X) on the chart X_{d+1} = 1.
/// Throws InputError on the zero form.
ValuationVector valuation(const HomogeneousForm &f, const Flag &flag);

/// { nu(s) : s in S_k nonzero }, ascending. One value per dimension.
std::vector<ValuationVector> level_valuations(const GradedSeries &s,
                                              const Flag &flag, int k);

struct ValueSemigroup {
  std::size_t ambient_dim = 0;
  int truncation = 0;
  /// (nu, k) pairs for 1 <= k <= truncation, sorted by k then nu.
  std::vector<std::pair<ValuationVector, int>> points;

  bool contains(const ValuationVector &v, int k) const;
};

ValueSemigroup semigroup(const GradedSeries &s, const Flag &flag, int K);

/// Subgroup of Z^{d+1} generated by the points (nu, k).
LatticeIndex semigroup_index(const ValueSemigroup &g);

/// dim { s in S_k : nu_i(s) >= sigma_i for i < r }, where r = sigma.size(),
/// counted on the pivots: the coordinates are compared one by one.
std::size_t filtered_dimension(const GradedSeries &s, const Flag &flag, int k,
                               const std::vector<int> &sigma);

} // namespace okb
