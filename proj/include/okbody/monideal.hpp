#pragma once

// Monomial ideals in k[X_1, ..., X_{d+1}] and the base-ideal side of a
// monomial series.

#include <vector>

#include "okbody/glseries.hpp"

namespace okb {

class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// The ideal generated by `gens`; the stored generators are the
  /// divisibility-minimal ones, ascending lex.
  MonomialIdeal(std::size_t nvars, std::vector<Exponent> gens);
  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Exponent> &generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Exponent &e) const;
  /// I contained in J.
  bool is_subset_of(const MonomialIdeal &j) const;
  /// Monomials of the given degree in I, ascending lex.
  std::vector<Exponent> degree_part(int degree) const;

  friend bool operator==(const MonomialIdeal &,
                         const MonomialIdeal &) = default;

private:
  std::size_t nvars_ = 0;
  std::vector<Exponent> gens_;
};

std::string to_string(const MonomialIdeal &i);

MonomialIdeal ideal_sum(const MonomialIdeal &a, const MonomialIdeal &b);
MonomialIdeal ideal_intersection(const MonomialIdeal &a,
                                 const MonomialIdeal &b);
/// I : X_i^infinity.
MonomialIdeal variable_saturation(const MonomialIdeal &ideal, std::size_t i);

/// Ideal generated by the monomials of S_k. Throws UnsupportedError when the
/// level is not spanned by monomials.
MonomialIdeal base_ideal(const GradedSeries &s, int k);

/// I : (X_1, ..., X_{d+1})^infinity, as the intersection of the I : X_i^inf.
MonomialIdeal saturate(const MonomialIdeal &ideal);

/// Level k is the degree-km part of saturate(base_ideal(S, k)), for
/// 1 <= k <= K.
GradedSeries sheafify(const GradedSeries &s, int K);

/// A coordinate subspace {X_i = 0 : i in vanishing} of P^d.
struct CoordinateSubspace {
  std::vector<std::size_t> vanishing; // ascending
  bool contains(std::span<const BigRational> x) const;
  friend bool operator==(const CoordinateSubspace &,
                         const CoordinateSubspace &) = default;
  friend auto operator<=>(const CoordinateSubspace &,
                          const CoordinateSubspace &) = default;
};

/// Zero locus of a monomial ideal on P^d, as its irreducible components.
std::vector<CoordinateSubspace> zero_locus(const MonomialIdeal &ideal);

struct BaseLocusReport {
  int truncation = 0;
  std::vector<MonomialIdeal> base_ideals; // index k - 1 for k = 1..K
  /// Common zeros of every level up to K.
  std::vector<CoordinateSubspace> components;
  bool empty = false;
  /// The locus from levels up to max(1, K/2) already equals the one at K.
  bool stabilized = false;

  bool contains(std::span<const BigRational> x) const;
};

BaseLocusReport base_locus(const GradedSeries &s, int K);

struct BirationalityVerdict {
  bool birational = false;
  /// Hermite basis of the lattice spanned by the dehomogenized exponent
  /// differences within each level up to K.
  IntMatrix hnf;
  LatticeIndex lattice;
  int truncation = 0;
};

/// The monomial map of |S_k| is birational for k >> 0 iff the exponent
/// differences generate Z^d. Differences at level k reappear at every
/// multiple of k, so levels up to K give a lower bound on the lattice.
/// Throws InputError when every level up to K is zero.
BirationalityVerdict is_birational_monomial(const GradedSeries &s, int K);

struct FullVolumeReport {
  HilbertData hilbert;
  BigRational expected; // m^d
  bool volume_side = false;
  bool birational = false;
  bool base_locus_empty = false;
  bool geometric_side = false;
  bool agree() const { return volume_side == geometric_side; }
};

/// Compares vol(S) = m^d against "birational and empty stable base locus".
FullVolumeReport full_volume_check(const GradedSeries &s, int K);

} // namespace okb
