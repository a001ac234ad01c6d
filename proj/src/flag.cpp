#include "okbody/flag.hpp"

#include <random>

namespace okb {

Flag::Flag(RatMatrix change, std::string label)
    : change_(std::move(change)), label_(std::move(label)) {
  if (change_.rows() != change_.cols() || change_.rows() == 0)
    throw InputError("flag matrix must be square and nonempty");
  auto inv = inverse(change_);
  if (!inv)
    throw InputError("flag matrix is singular");
  inverse_ = std::move(*inv);
}

Flag Flag::standard(std::size_t nvars) {
  return Flag(RatMatrix::identity(nvars), "standard");
}

Flag Flag::centered_at(std::span<const BigRational> x) {
  const std::size_t n = x.size();
  std::size_t pivot = n;
  for (std::size_t i = n; i-- > 0;)
    if (x[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == n)
    throw InputError("the zero vector is not a projective point");
  // Columns: e_j for j != pivot in order, then x as the last column.
  RatMatrix a(n, n);
  std::size_t col = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (j != pivot)
      a(j, col++) = 1;
  for (std::size_t i = 0; i < n; ++i)
    a(i, n - 1) = x[i];
  std::string label = "centered at [";
  for (std::size_t i = 0; i < n; ++i)
    label += (i ? ":" : "") + x[i].get_str();
  return Flag(std::move(a), label + "]");
}

bool Flag::is_standard() const {
  return change_ == RatMatrix::identity(change_.rows());
}

bool Flag::is_monomial() const {
  for (std::size_t i = 0; i < change_.rows(); ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < change_.cols(); ++j)
      if (change_(i, j) != 0)
        ++nonzero;
    if (nonzero != 1)
      return false;
  }
  return true;
}

Flag random_flag(std::size_t nvars, std::uint64_t seed) {
  if (seed == 0)
    return Flag::standard(nvars);
  std::mt19937_64 rng(seed);
  for (;;) {
    RatMatrix a(nvars, nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      for (std::size_t j = 0; j < nvars; ++j)
        a(i, j) = static_cast<long>(rng() % 11) - 5;
    if (determinant(a) != 0)
      return Flag(std::move(a), "random seed " + std::to_string(seed));
  }
}

} // namespace okb
