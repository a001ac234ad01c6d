#pragma once

// Graded linear series S_k inside H^0(P^d, O(k m)), computed level by level
// and cached. A series is a cheap handle to a shared node; derived series
// (Veronese, subtraction, restriction, ...) keep their parent alive.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "okbody/flag.hpp"
#include "okbody/polyform.hpp"

namespace okb {

struct GeneratorBlock {
  int degree = 1; // grading degree k; forms have polynomial degree k*m
  std::vector<HomogeneousForm> forms;
};

class SeriesNode;

class GradedSeries {
public:
  GradedSeries() = default;
  explicit GradedSeries(std::shared_ptr<SeriesNode> node)
      : node_(std::move(node)) {}

  /// The series generated as an algebra by the given blocks.
  static GradedSeries generated(std::size_t ambient_dim, int divisor_degree,
                                std::vector<GeneratorBlock> generators);
  static GradedSeries complete(std::size_t ambient_dim, int divisor_degree);
  static GradedSeries zero(std::size_t ambient_dim, int divisor_degree);
  /// Series given level by level by a callback (k >= 1; level 0 is always
  /// the constants).
  static GradedSeries explicit_levels(std::size_t ambient_dim,
                                      int divisor_degree,
                                      std::function<FormSpan(int)> levels,
                                      std::string description);

  std::size_t ambient_dim() const;
  std::size_t nvars() const { return ambient_dim() + 1; }
  int divisor_degree() const;
  std::string description() const;

  /// Level k. Cached; safe to call from several threads.
  const FormSpan &level(int k) const;
  /// The generating blocks when the series was built by `generated`.
  const std::vector<GeneratorBlock> *generators() const;
  /// True when every generator is a monomial (generated series only).
  bool has_monomial_generators() const;

  /// The series {s(A X) : s in S_k}. Cached per matrix.
  GradedSeries transformed(const RatMatrix &a) const;

  const std::shared_ptr<SeriesNode> &node() const { return node_; }

private:
  std::shared_ptr<SeriesNode> node_;
};

/// Level k with the truncation guard: throws InputError when k > K.
const FormSpan &level(const GradedSeries &s, int k, int K);

/// Level l of the result is S_{l b}.
GradedSeries veronese(const GradedSeries &s, int b);

/// (S - a Y_1)_k = { s / x_1^{a k} : s in S_k, ord_{Y_1}(s) >= a k }, where
/// x_1 is the first coordinate of the flag. Forms are written back in the
/// original coordinates. If a > m the result is the zero series.
GradedSeries subtract_divisor(const GradedSeries &s, int a, const Flag &flag);

/// Image of S_k under restriction to Y_1, as a series on P^{d-1} in the
/// coordinates X'_2, ..., X'_{d+1} of the flag.
GradedSeries restrict_to_flag_divisor(const GradedSeries &s, const Flag &flag);

/// S^x_k = { s in S_k : s(x) = 0 } for k >= 1.
GradedSeries puncture(const GradedSeries &s, std::span<const BigRational> x);

/// The subalgebra generated by S_p, graded so that level k = Sym^k(S_p).
GradedSeries fujita_subseries(const GradedSeries &s, int p);

struct HilbertData {
  std::vector<std::size_t> dims; // dims[k] = dim S_k for k = 0..K
  BigRational volume;
  bool stabilized = false;
  int truncation = 0;
};

/// Volume from the d-th finite difference of k -> dim S_k. When the last
/// three differences agree the common value is reported as the volume;
/// otherwise d! dim S_K / K^d with stabilized = false.
HilbertData hilbert_data(const GradedSeries &s, int K);

/// Is x a base point of S_k (every section of level k vanishes at x)?
bool is_base_point(const GradedSeries &s, int k,
                   std::span<const BigRational> x);

// ---------------------------------------------------------------------------

class SeriesNode {
public:
  SeriesNode(std::size_t ambient_dim, int divisor_degree)
      : ambient_dim_(ambient_dim), divisor_degree_(divisor_degree) {}
  virtual ~SeriesNode() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  int divisor_degree() const { return divisor_degree_; }
  virtual std::string description() const = 0;

  const FormSpan &level(int k);
  std::shared_ptr<SeriesNode> transformed(const RatMatrix &a);

  virtual const std::vector<GeneratorBlock> *generators() const {
    return nullptr;
  }

protected:
  virtual FormSpan compute_level(int k) = 0;
  /// Default: substitute into every basis form of every level.
  virtual std::shared_ptr<SeriesNode> make_transformed(const RatMatrix &a);

  std::shared_ptr<SeriesNode> self() { return self_.lock(); }

private:
  friend class GradedSeries;
  template <class T, class... Args>
  friend std::shared_ptr<T> make_node(Args &&...args);

  std::size_t ambient_dim_;
  int divisor_degree_;
  std::recursive_mutex mutex_;
  std::map<int, FormSpan> levels_;
  std::map<std::vector<BigRational>, std::shared_ptr<SeriesNode>> transforms_;
  std::weak_ptr<SeriesNode> self_;
};

template <class T, class... Args>
std::shared_ptr<T> make_node(Args &&...args) {
  auto p = std::make_shared<T>(std::forward<Args>(args)...);
  p->self_ = p;
  return p;
}

} // namespace okb
