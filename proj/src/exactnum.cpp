#include "okbody/exactnum.hpp"

#include <algorithm>
#include <utility>

namespace okb {

BigRational make_rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw InputError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_string(const BigRational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string &text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return BigRational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)),
                         BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument &) {
    throw InputError("not a rational number: '" + text + "'");
  }
}

BigInt floor_div(const BigInt &a, const BigInt &b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt &a, const BigInt &b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = BigRational(m(i, j));
  return out;
}

IntMatrix matrix_from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw InputError("vector length does not match the ambient rank");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b (old values)
void combine_rows(IntMatrix &m, std::size_t a, std::size_t b, const BigInt &s,
                  const BigInt &t, const BigInt &u, const BigInt &v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    BigInt x = m(a, j), y = m(b, j);
    m(a, j) = s * x + t * y;
    m(b, j) = u * x + v * y;
  }
}

void add_row_multiple(IntMatrix &m, std::size_t dst, std::size_t src,
                      const BigInt &q) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(dst, j) += q * m(src, j);
}

void add_col_multiple(IntMatrix &m, std::size_t dst, std::size_t src,
                      const BigInt &q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    m(i, dst) += q * m(i, src);
}

void negate_row(IntMatrix &m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    m(r, j) = -m(r, j);
}

} // namespace

HermiteForm hermite_normal_form(const IntMatrix &input) {
  IntMatrix h = input;
  IntMatrix u = IntMatrix::identity(h.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, j) == 0)
        continue;
      BigInt a = h(r, j), b = h(i, j), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      BigInt ua = -b / g, va = a / g;
      combine_rows(h, r, i, s, t, ua, va);
      combine_rows(u, r, i, s, t, ua, va);
    }
    if (h(r, j) == 0)
      continue;
    if (h(r, j) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(h(i, j), h(r, j));
      if (q != 0) {
        add_row_multiple(h, i, r, -q);
        add_row_multiple(u, i, r, -q);
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

SmithForm smith_normal_form(const IntMatrix &input) {
  IntMatrix s = input;
  IntMatrix left = IntMatrix::identity(s.rows());
  IntMatrix right = IntMatrix::identity(s.cols());
  const std::size_t n = std::min(s.rows(), s.cols());

  auto bring_min_to = [&](std::size_t t, bool whole_block) -> bool {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (!whole_block && i != t && j != t)
          continue;
        if (s(i, j) == 0)
          continue;
        if (!found || abs(s(i, j)) < abs(s(bi, bj))) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found)
      return false;
    s.swap_rows(t, bi);
    left.swap_rows(t, bi);
    s.swap_cols(t, bj);
    right.swap_cols(t, bj);
    return true;
  };

  for (std::size_t t = 0; t < n; ++t) {
    if (!bring_min_to(t, true))
      break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0)
          continue;
        BigInt q = floor_div(s(i, t), s(t, t));
        add_row_multiple(s, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (s(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0)
          continue;
        BigInt q = floor_div(s(t, j), s(t, t));
        add_col_multiple(s, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (s(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        bring_min_to(t, false);
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      bool divisible = true;
      for (std::size_t i = t + 1; i < s.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            add_row_multiple(s, t, i, 1);
            add_row_multiple(left, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(left, t);
    }
  }
  std::vector<BigInt> factors(n);
  for (std::size_t t = 0; t < n; ++t)
    factors[t] = s(t, t);
  return {std::move(s), std::move(left), std::move(right), std::move(factors)};
}

LatticeIndex lattice_index(std::span<const IntVector> generators,
                           std::size_t ambient_rank) {
  LatticeIndex out;
  if (ambient_rank == 0) {
    out.index = BigInt(1);
    out.exponent = BigInt(1);
    return out;
  }
  if (generators.empty())
    return out;
  IntMatrix m = matrix_from_rows(generators, ambient_rank);
  SmithForm snf = smith_normal_form(m);
  BigInt product = 1, largest = 1;
  for (const auto &f : snf.factors) {
    if (f == 0)
      continue;
    ++out.rank;
    product *= f;
    largest = f;
  }
  if (out.rank == ambient_rank) {
    out.index = product;
    out.exponent = largest;
  }
  return out;
}

std::vector<std::size_t> row_reduce(RatMatrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t p = r;
    while (p < m.rows() && m(p, j) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(r, p);
    BigRational inv = 1 / m(r, j);
    for (std::size_t k = j; k < m.cols(); ++k)
      m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, j) == 0)
        continue;
      BigRational f = m(i, j);
      for (std::size_t k = j; k < m.cols(); ++k)
        m(i, k) -= f * m(r, k);
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

std::optional<RatVector> solve_rational_system(const RatMatrix &a,
                                               const RatVector &b) {
  if (b.size() != a.rows())
    throw InputError("right-hand side length does not match the system");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt;
  RatVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, a.cols());
  return x;
}

BigRational determinant(RatMatrix m) {
  if (m.rows() != m.cols())
    throw InputError("determinant of a non-square matrix");
  BigRational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    while (p < n && m(p, j) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != j) {
      m.swap_rows(p, j);
      det = -det;
    }
    det *= m(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (m(i, j) == 0)
        continue;
      BigRational f = m(i, j) / m(j, j);
      for (std::size_t k = j; k < n; ++k)
        m(i, k) -= f * m(j, k);
    }
  }
  return det;
}

BigInt determinant(const IntMatrix &m) {
  BigRational d = determinant(to_rational(m));
  return d.get_num();
}

std::optional<RatMatrix> inverse(const RatMatrix &m) {
  if (m.rows() != m.cols())
    throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

BigRational dot(std::span<const BigRational> a, std::span<const BigRational> b) {
  if (a.size() != b.size())
    throw InputError("dot product of vectors of different length");
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

IntVector primitive_integer_vector(std::span<const BigRational> v) {
  BigInt l = 1;
  for (const auto &x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto &x : out)
      x /= g;
  return out;
}

} // namespace okb
