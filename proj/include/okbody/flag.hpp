#pragma once

#include <cstdint>
#include <string>

#include "okbody/exactnum.hpp"

namespace okb {

/// A full flag on P^d given by a coordinate change A. In the coordinates
/// X' with X = A X', the flag is Y_i = {X'_1 = ... = X'_i = 0}; its point
/// Y_d is A e_{d+1}, the last column of A.
class Flag {
public:
  Flag() = default;
  Flag(RatMatrix change, std::string label = {});

  static Flag standard(std::size_t nvars);
  /// A flag whose point is x and whose remaining members are coordinate
  /// subspaces through x; x must have a nonzero coordinate.
  static Flag centered_at(std::span<const BigRational> x);

  const RatMatrix &matrix() const { return change_; }
  const RatMatrix &inverse_matrix() const { return inverse_; }
  const std::string &label() const { return label_; }
  std::size_t nvars() const { return change_.rows(); }
  bool is_standard() const;
  /// True when A maps monomials to monomials (a scaled permutation).
  bool is_monomial() const;
  RatVector point() const { return change_.column(change_.cols() - 1); }

private:
  RatMatrix change_;
  RatMatrix inverse_;
  std::string label_;
};

/// Deterministic pseudo-random flag: entries in [-5, 5] from a
/// mersenne-twister stream, resampled until invertible. Seed 0 is the
/// standard flag.
Flag random_flag(std::size_t nvars, std::uint64_t seed);

} // namespace okb
