#pragma once

// Homogeneous polynomials over Q and exact linear algebra on their spans.
// Variables are indexed from 0: X_1 of projective space is variable 0.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "okbody/exactnum.hpp"

namespace okb {

/// Exponent vector of a monomial in at most `kMaxVars` variables.
/// Ordered lexicographically, which is the canonical monomial order here.
class Exponent {
public:
  static constexpr std::size_t kMaxVars = 8;

  Exponent() = default;
  explicit Exponent(std::size_t nvars);
  Exponent(std::initializer_list<int> entries);
  explicit Exponent(std::span<const int> entries);

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return e_[i]; }
  int &operator[](std::size_t i) { return e_[i]; }
  int total() const;
  std::vector<int> to_vector() const;

  /// Drops coordinate `i`.
  Exponent without(std::size_t i) const;
  bool divides(const Exponent &other) const;

  friend Exponent operator+(const Exponent &a, const Exponent &b);
  friend Exponent operator-(const Exponent &a, const Exponent &b);
  friend bool operator==(const Exponent &a, const Exponent &b) {
    return a.size_ == b.size_ && a.e_ == b.e_;
  }
  friend std::strong_ordering operator<=>(const Exponent &a,
                                          const Exponent &b) {
    if (a.size_ != b.size_)
      return a.size_ <=> b.size_;
    for (std::size_t i = 0; i < a.size_; ++i)
      if (a.e_[i] != b.e_[i])
        return a.e_[i] <=> b.e_[i];
    return std::strong_ordering::equal;
  }

private:
  std::array<std::int32_t, kMaxVars> e_{};
  std::size_t size_ = 0;
};

std::string to_string(const Exponent &e);

/// All exponents of total degree `degree` in `nvars` variables, ascending lex.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree);
BigInt count_monomials(std::size_t nvars, int degree);

class HomogeneousForm {
public:
  using Terms = std::map<Exponent, BigRational>;

  HomogeneousForm() = default;
  /// The zero form of the given degree.
  HomogeneousForm(std::size_t nvars, int degree);

  static HomogeneousForm monomial(const Exponent &e, BigRational c = 1);
  static HomogeneousForm constant(std::size_t nvars, BigRational c = 1);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Adds c * x^e; drops the term if the coefficient cancels.
  void add_term(const Exponent &e, const BigRational &c);
  BigRational coefficient(const Exponent &e) const;

  /// Lex-minimal exponent. Throws on the zero form.
  const Exponent &lowest_exponent() const;

  BigRational evaluate(std::span<const BigRational> point) const;

  HomogeneousForm &operator+=(const HomogeneousForm &g);
  HomogeneousForm &operator-=(const HomogeneousForm &g);
  HomogeneousForm &operator*=(const BigRational &c);

  friend HomogeneousForm operator+(HomogeneousForm f,
                                   const HomogeneousForm &g) {
    return f += g;
  }
  friend HomogeneousForm operator-(HomogeneousForm f,
                                   const HomogeneousForm &g) {
    return f -= g;
  }
  friend HomogeneousForm operator*(HomogeneousForm f, const BigRational &c) {
    return f *= c;
  }
  friend bool operator==(const HomogeneousForm &a, const HomogeneousForm &b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ &&
           a.terms_ == b.terms_;
  }

private:
  std::size_t nvars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

std::string to_string(const HomogeneousForm &f);

HomogeneousForm multiply(const HomogeneousForm &f, const HomogeneousForm &g);
inline HomogeneousForm operator*(const HomogeneousForm &f,
                                 const HomogeneousForm &g) {
  return multiply(f, g);
}
HomogeneousForm power(const HomogeneousForm &f, int exponent);

/// f(A x): every variable X_i is replaced by sum_j A(i,j) X_j.
/// Throws InputError when A is not square of size nvars or is singular.
HomogeneousForm substitute_linear(const HomogeneousForm &f, const RatMatrix &a);
/// Same, without the invertibility check (callers that already know).
HomogeneousForm substitute_linear_unchecked(const HomogeneousForm &f,
                                            const RatMatrix &a);

/// Restriction to the hyperplane {X_i = 0}: terms divisible by X_i vanish
/// and the variable is removed, giving a form in nvars - 1 variables.
HomogeneousForm set_variable_zero(const HomogeneousForm &f, std::size_t i);

/// f / X_i^a. Throws InvariantError if some term is not divisible.
HomogeneousForm divide_by_variable_power(const HomogeneousForm &f,
                                         std::size_t i, int a);

/// Canonical basis of a space of forms: reduced row echelon form with
/// respect to ascending lex. Each basis form has coefficient 1 at its
/// lex-minimal monomial (its pivot), and no pivot occurs in another basis
/// form.
class FormSpan {
public:
  FormSpan() = default;
  FormSpan(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {}

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t dimension() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<HomogeneousForm> &basis() const { return basis_; }
  /// Pivot exponents, ascending.
  std::vector<Exponent> pivots() const;
  bool is_monomial() const;

  bool contains(const HomogeneousForm &f) const;

  friend bool operator==(const FormSpan &, const FormSpan &) = default;

private:
  friend class SpanBuilder;
  std::size_t nvars_ = 0;
  int degree_ = 0;
  std::vector<HomogeneousForm> basis_;
};

/// Incremental Gaussian elimination over forms of one degree. Insert forms
/// one at a time, then `finish` to get the canonical FormSpan.
class SpanBuilder {
public:
  SpanBuilder(std::size_t nvars, int degree);

  /// Returns true when f enlarged the span.
  bool insert(const HomogeneousForm &f);
  std::size_t dimension() const { return rows_.size(); }
  /// True once the span is all forms of this degree.
  bool full() const { return full_; }

  FormSpan finish() &&;

private:
  using Row = std::vector<std::pair<Exponent, BigRational>>;

  std::size_t nvars_;
  int degree_;
  BigInt ambient_dim_;
  bool full_ = false;
  std::map<Exponent, Row> rows_; // keyed by pivot
};

/// RREF basis of span(forms). All forms must have the given degree and
/// variable count.
FormSpan span_reduce(std::size_t nvars, int degree,
                     std::span<const HomogeneousForm> forms);

} // namespace okb
