#pragma once

#include <optional>
#include <string>

#include "okbody/flagval.hpp"
#include "okbody/polytope.hpp"

namespace okb {

struct ExactnessCertificate {
  enum class Kind {
    /// Monomial generators under a monomial flag: the value semigroup is
    /// generated by the generator values, so the hull of the normalized
    /// generator values is the whole body.
    monomial_generators,
    /// The inner hull already equals m times the standard simplex, which
    /// is the body of the complete series and hence an outer bound.
    complete_simplex,
  };
  Kind kind;
  /// Largest degree whose points were needed.
  int degree = 0;
  std::string explanation;
};

struct BodyReport {
  RationalPolytope polytope;
  int truncation = 0;
  /// Always true: the hull of points up to the truncation lies inside the
  /// body. With a certificate it is the body itself.
  bool inner = true;
  std::optional<ExactnessCertificate> certificate;
  std::size_t point_count = 0;
  bool exact() const { return certificate.has_value(); }
};

/// Points nu(s)/k for k = 1..K.
std::vector<RatVector> normalized_points(const GradedSeries &s,
                                         const Flag &flag, int K);

/// Convex hull of the normalized valuation points up to K. Throws
/// InputError when all levels 1..K are zero.
BodyReport okounkov_body(const GradedSeries &s, const Flag &flag, int K);

struct ValuativeWitness {
  int degree = 0;
  /// Index into the reduced basis of the flag-transformed level.
  std::size_t section_index = 0;
  /// The section, in the original coordinates.
  HomogeneousForm section;
};

/// Smallest k <= K with k P integral and k P a value of S_k.
std::optional<ValuativeWitness> valuative_witness(const GradedSeries &s,
                                                  const Flag &flag,
                                                  std::span<const BigRational> p,
                                                  int K);

/// Given nu(s)/k_s = P and nu(t)/k_t = Q, the section
/// s^{a k_t} t^{(b - a) k_s} of degree b k_s k_t has value
/// (a/b) P + (1 - a/b) Q at that degree.
struct SegmentWitness {
  int degree = 0;
  HomogeneousForm section;
};
SegmentWitness segment_witness(const HomogeneousForm &s, int ks,
                               const HomogeneousForm &t, int kt, int a, int b);

/// A section with value k P built as a product of powers of basis sections
/// s_i of levels k_i <= K: write P = sum l_i nu(s_i)/k_i with at most d + 1
/// nonzero l_i, let M be the lcm of the denominators of l_i / k_i, and take
/// prod s_i^{l_i M / k_i}, which lies in S_M.
struct ConstructiveWitness {
  int degree = 0;
  struct Factor {
    int level;
    std::size_t basis_index;
    int power;
  };
  std::vector<Factor> factors;
  ValuationVector value; // = degree * P
  /// In the original coordinates.
  HomogeneousForm section;
};

/// nullopt when P is outside the hull of the points up to K.
std::optional<ConstructiveWitness>
constructive_witness(const GradedSeries &s, const Flag &flag,
                     std::span<const BigRational> p, int K);

/// (1/b) times the body, truncated at K, of the restriction to Y_1 of
/// S^(b) - a Y_1. Lives in R^{d-1}; empty when that series is zero.
RationalPolytope restricted_slice_body(const GradedSeries &s, const Flag &flag,
                                       int a, int b, int K);

} // namespace okb
