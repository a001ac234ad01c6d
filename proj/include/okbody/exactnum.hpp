#pragma once

// Exact integers, rationals and the integer-lattice linear algebra that the
// rest of the library is built on. No floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "okbody/errors.hpp"

namespace okb {

using BigInt = mpz_class;
/// mpq_class keeps values canonical (reduced, positive denominator) after
/// every arithmetic operation; make_rational canonicalizes on construction.
using BigRational = mpq_class;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRational>;

BigRational make_rational(const BigInt &num, const BigInt &den);
BigRational make_rational(long num, long den = 1);

/// Always "p/q", including integers ("3/1"), so the text is lossless for
/// any consumer.
std::string to_string(const BigRational &q);
/// Accepts "p/q" or "p".
BigRational parse_rational(const std::string &text);

BigInt floor_div(const BigInt &a, const BigInt &b);
BigInt ceil_div(const BigInt &a, const BigInt &b);

template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw InputError("matrix entries do not match its shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto &r : rows) {
      if (r.size() != cols_)
        throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<T> &entries() const { return data_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out[i] = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw InputError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix &a, const std::vector<T> &v) {
    if (a.cols_ != v.size())
      throw InputError("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRational>;

RatMatrix to_rational(const IntMatrix &m);
IntMatrix matrix_from_rows(std::span<const IntVector> rows, std::size_t cols);

/// Row-style Hermite normal form: `hnf == transform * input`, `transform`
/// unimodular. Nonzero rows come first, pivots are positive, and entries
/// above a pivot lie in [0, pivot).
struct HermiteForm {
  IntMatrix hnf;
  IntMatrix transform;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix &m);

/// `diagonal == left * input * right` with both transforms unimodular.
/// `factors` lists the min(rows, cols) diagonal entries d1 | d2 | ...,
/// zeros last.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::vector<BigInt> factors;
};
SmithForm smith_normal_form(const IntMatrix &m);

struct LatticeIndex {
  std::size_t rank = 0;
  std::optional<BigInt> index; // empty when the subgroup has lower rank
  /// Largest invariant factor: the exponent of the finite quotient group.
  std::optional<BigInt> exponent;
  bool finite() const { return index.has_value(); }
};
LatticeIndex lattice_index(std::span<const IntVector> generators,
                           std::size_t ambient_rank);

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when inconsistent.
std::optional<RatVector> solve_rational_system(const RatMatrix &a,
                                               const RatVector &b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix &m);
std::size_t rank(RatMatrix m);
BigRational determinant(RatMatrix m);
BigInt determinant(const IntMatrix &m);
std::optional<RatMatrix> inverse(const RatMatrix &m);

BigRational dot(std::span<const BigRational> a, std::span<const BigRational> b);

/// Smallest positive multiple turning `v` into a primitive integer vector
/// (gcd 1). Zero stays zero.
IntVector primitive_integer_vector(std::span<const BigRational> v);

// Exact simplex --------------------------------------------------------------

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  BigRational value;
  RatVector x;
};

/// maximize c.x subject to A x = b, x >= 0. Two-phase tableau simplex with
/// Bland's rule, so it terminates on degenerate problems.
LpResult lp_maximize(const RatMatrix &a, const RatVector &b,
                     const RatVector &c);

/// Is `point` a non-negative combination of `generators`?
bool in_cone(std::span<const RatVector> generators,
             std::span<const BigRational> point);

/// Is `point` in the convex hull of `points`?
bool in_convex_hull(std::span<const RatVector> points,
                    std::span<const BigRational> point);

} // namespace okb
