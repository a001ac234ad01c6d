#include "okbody/glseries.hpp"

#include <set>

namespace okb {

namespace {

bool is_identity(const RatMatrix &a) {
  return a == RatMatrix::identity(a.rows());
}

FormSpan constants_span(std::size_t nvars) {
  SpanBuilder b(nvars, 0);
  b.insert(HomogeneousForm::constant(nvars));
  return std::move(b).finish();
}

FormSpan complete_span(std::size_t nvars, int degree) {
  SpanBuilder b(nvars, degree);
  for (const auto &e : monomials_of_degree(nvars, degree))
    b.insert(HomogeneousForm::monomial(e));
  return std::move(b).finish();
}

bool is_full(const FormSpan &s) {
  return BigInt(s.dimension()) == count_monomials(s.nvars(), s.degree());
}

FormSpan substitute_span(const FormSpan &s, const RatMatrix &a) {
  if (is_full(s))
    return s;
  std::vector<HomogeneousForm> forms;
  forms.reserve(s.dimension());
  for (const auto &f : s.basis())
    forms.push_back(substitute_linear_unchecked(f, a));
  return span_reduce(s.nvars(), s.degree(), forms);
}

// ---------------------------------------------------------------------------

class GeneratedNode : public SeriesNode {
public:
  GeneratedNode(std::size_t d, int m, std::vector<GeneratorBlock> gens,
                std::shared_ptr<SeriesNode> origin = nullptr)
      : SeriesNode(d, m), gens_(std::move(gens)), origin_(std::move(origin)) {
    monomial_ = true;
    for (auto &block : gens_) {
      if (block.degree < 1)
        throw InputError("generator degree must be at least 1");
      std::vector<HomogeneousForm> kept;
      for (auto &f : block.forms) {
        if (f.is_zero())
          continue;
        if (f.nvars() != d + 1)
          throw InputError("generator has " + std::to_string(f.nvars()) +
                           " variables, expected " + std::to_string(d + 1));
        if (f.degree() != block.degree * m)
          throw InputError("generator " + to_string(f) + " in degree " +
                           std::to_string(block.degree) +
                           " must have polynomial degree " +
                           std::to_string(block.degree * m));
        if (!f.is_monomial())
          monomial_ = false;
        kept.push_back(std::move(f));
      }
      block.forms = std::move(kept);
    }
  }

  std::string description() const override {
    std::size_t count = 0;
    for (auto &b : gens_)
      count += b.forms.size();
    return "generated by " + std::to_string(count) + " forms";
  }

  const std::vector<GeneratorBlock> *generators() const override {
    return &gens_;
  }
  bool monomial() const { return monomial_; }

protected:
  FormSpan compute_level(int k) override {
    const std::size_t n = ambient_dim() + 1;
    const int deg = k * divisor_degree();
    if (k == 0) {
      spanning_[0] = {HomogeneousForm::constant(n)};
      return constants_span(n);
    }
    if (origin_ && is_full(origin_->level(k))) {
      spanning_[k] = complete_span(n, deg).basis();
      return complete_span(n, deg);
    }
    if (monomial_)
      return monomial_level(k, n, deg);

    SpanBuilder builder(n, deg);
    std::vector<HomogeneousForm> span_forms;
    for (const auto &block : gens_) {
      if (block.degree > k || builder.full())
        continue;
      level(k - block.degree); // materializes spanning_[k - degree]
      for (const auto &b : spanning_.at(k - block.degree)) {
        for (const auto &g : block.forms) {
          HomogeneousForm p = b * g;
          if (builder.insert(p))
            span_forms.push_back(std::move(p));
          if (builder.full())
            break;
        }
        if (builder.full())
          break;
      }
    }
    spanning_[k] = std::move(span_forms);
    return std::move(builder).finish();
  }

  std::shared_ptr<SeriesNode> make_transformed(const RatMatrix &a) override {
    std::vector<GeneratorBlock> blocks;
    for (const auto &block : gens_) {
      GeneratorBlock t{block.degree, {}};
      for (const auto &f : block.forms)
        t.forms.push_back(substitute_linear_unchecked(f, a));
      blocks.push_back(std::move(t));
    }
    return make_node<GeneratedNode>(ambient_dim(), divisor_degree(),
                                    std::move(blocks),
                                    origin_ ? origin_ : self());
  }

private:
  FormSpan monomial_level(int k, std::size_t n, int deg) {
    std::set<Exponent> exps;
    for (const auto &block : gens_) {
      if (block.degree > k)
        continue;
      const FormSpan &lower = level(k - block.degree);
      for (const auto &b : lower.basis())
        for (const auto &g : block.forms)
          exps.insert(b.lowest_exponent() + g.lowest_exponent());
    }
    SpanBuilder builder(n, deg);
    for (const auto &e : exps)
      builder.insert(HomogeneousForm::monomial(e));
    return std::move(builder).finish();
  }

  std::vector<GeneratorBlock> gens_;
  std::shared_ptr<SeriesNode> origin_;
  bool monomial_ = true;
  std::map<int, std::vector<HomogeneousForm>> spanning_;
};

class TransformedNode : public SeriesNode {
public:
  TransformedNode(std::shared_ptr<SeriesNode> parent, RatMatrix a)
      : SeriesNode(parent->ambient_dim(), parent->divisor_degree()),
        parent_(std::move(parent)), a_(std::move(a)) {}
  std::string description() const override {
    return "coordinate change of " + parent_->description();
  }

protected:
  FormSpan compute_level(int k) override {
    return substitute_span(parent_->level(k), a_);
  }
  std::shared_ptr<SeriesNode> make_transformed(const RatMatrix &b) override {
    return make_node<TransformedNode>(parent_, a_ * b);
  }

private:
  std::shared_ptr<SeriesNode> parent_;
  RatMatrix a_;
};

class VeroneseNode : public SeriesNode {
public:
  VeroneseNode(std::shared_ptr<SeriesNode> parent, int b)
      : SeriesNode(parent->ambient_dim(), parent->divisor_degree() * b),
        parent_(std::move(parent)), b_(b) {}
  std::string description() const override {
    return "Veronese " + std::to_string(b_) + " of " + parent_->description();
  }

protected:
  FormSpan compute_level(int k) override { return parent_->level(k * b_); }
  std::shared_ptr<SeriesNode> make_transformed(const RatMatrix &a) override {
    return make_node<VeroneseNode>(parent_->transformed(a), b_);
  }

private:
  std::shared_ptr<SeriesNode> parent_;
  int b_;
};

class SubtractNode : public SeriesNode {
public:
  SubtractNode(std::shared_ptr<SeriesNode> parent, int a, Flag flag,
               RatMatrix post)
      : SeriesNode(parent->ambient_dim(), parent->divisor_degree() - a),
        parent_(std::move(parent)), a_(a), flag_(std::move(flag)),
        post_(std::move(post)) {}
  std::string description() const override {
    return parent_->description() + " minus " + std::to_string(a_) + " Y1";
  }

protected:
  FormSpan compute_level(int k) override {
    const std::size_t n = ambient_dim() + 1;
    const FormSpan &lv = parent_->transformed(flag_.matrix())->level(k);
    std::vector<HomogeneousForm> forms;
    for (const auto &f : lv.basis())
      if (f.lowest_exponent()[0] >= a_ * k) {
        HomogeneousForm g = divide_by_variable_power(f, 0, a_ * k);
        if (!is_identity(post_))
          g = substitute_linear_unchecked(g, post_);
        forms.push_back(std::move(g));
      }
    return span_reduce(n, k * divisor_degree(), forms);
  }
  std::shared_ptr<SeriesNode> make_transformed(const RatMatrix &b) override {
    return make_node<SubtractNode>(parent_, a_, flag_, post_ * b);
  }

private:
  std::shared_ptr<SeriesNode> parent_;
  int a_;
  Flag flag_;
  RatMatrix post_;
};

class RestrictNode : public SeriesNode {
public:
  RestrictNode(std::shared_ptr<SeriesNode> parent, Flag flag, RatMatrix post)
      : SeriesNode(parent->ambient_dim() - 1, parent->divisor_degree()),
        parent_(std::move(parent)), flag_(std::move(flag)),
        post_(std::move(post)) {}
  std::string description() const override {
    return "restriction of " + parent_->description() + " to Y1";
  }

protected:
  FormSpan compute_level(int k) override {
    const std::size_t n = ambient_dim() + 1;
    const FormSpan &lv = parent_->transformed(flag_.matrix())->level(k);
    std::vector<HomogeneousForm> forms;
    for (const auto &f : lv.basis()) {
      HomogeneousForm g = set_variable_zero(f, 0);
      if (g.is_zero())
        continue;
      if (!is_identity(post_))
        g = substitute_linear_unchecked(g, post_);
      forms.push_back(std::move(g));
    }
    return span_reduce(n, k * divisor_degree(), forms);
  }
  std::shared_ptr<SeriesNode> make_transformed(const RatMatrix &b) override {
    return make_node<RestrictNode>(parent_, flag_, post_ * b);
  }

private:
  std::shared_ptr<SeriesNode> parent_;
  Flag flag_;
  RatMatrix post_;
};

class PunctureNode : public SeriesNode {
public:
  PunctureNode(std::shared_ptr<SeriesNode> parent, RatVector x)
      : SeriesNode(parent->ambient_dim(), parent->divisor_degree()),
        parent_(std::move(parent)), x_(std::move(x)) {}
  std::string description() const override {
    return parent_->description() + " vanishing at a point";
  }

protected:
  FormSpan compute_level(int k) override {
    const FormSpan &lv = parent_->level(k);
    if (k == 0)
      return lv;
    std::vector<BigRational> values;
    std::size_t j = lv.dimension();
    for (std::size_t i = 0; i < lv.dimension(); ++i) {
      values.push_back(lv.basis()[i].evaluate(x_));
      if (values.back() != 0 && j == lv.dimension())
        j = i;
    }
    if (j == lv.dimension())
      return lv;
    std::vector<HomogeneousForm> kernel;
    for (std::size_t i = 0; i < lv.dimension(); ++i) {
      if (i == j)
        continue;
      kernel.push_back(lv.basis()[i] -
                       lv.basis()[j] * (values[i] / values[j]));
    }
    return span_reduce(lv.nvars(), lv.degree(), kernel);
  }
  std::shared_ptr<SeriesNode> make_transformed(const RatMatrix &a) override {
    auto inv = inverse(a);
    return make_node<PunctureNode>(parent_->transformed(a), *inv * x_);
  }

private:
  std::shared_ptr<SeriesNode> parent_;
  RatVector x_;
};

class ExplicitNode : public SeriesNode {
public:
  ExplicitNode(std::size_t d, int m, std::function<FormSpan(int)> fn,
               std::string description)
      : SeriesNode(d, m), fn_(std::move(fn)),
        description_(std::move(description)) {}
  std::string description() const override { return description_; }

protected:
  FormSpan compute_level(int k) override {
    if (k == 0)
      return constants_span(ambient_dim() + 1);
    FormSpan s = fn_(k);
    if (!s.empty() && (s.nvars() != ambient_dim() + 1 ||
                       s.degree() != k * divisor_degree()))
      throw InvariantError("explicit level has the wrong shape");
    if (s.empty())
      return FormSpan(ambient_dim() + 1, k * divisor_degree());
    return s;
  }

private:
  std::function<FormSpan(int)> fn_;
  std::string description_;
};

} // namespace

// ---------------------------------------------------------------------------

const FormSpan &SeriesNode::level(int k) {
  if (k < 0)
    throw InputError("negative level");
  std::lock_guard lock(mutex_);
  auto it = levels_.find(k);
  if (it != levels_.end())
    return it->second;
  FormSpan s = compute_level(k);
  return levels_.emplace(k, std::move(s)).first->second;
}

std::shared_ptr<SeriesNode> SeriesNode::transformed(const RatMatrix &a) {
  if (a.rows() != ambient_dim_ + 1 || a.cols() != ambient_dim_ + 1)
    throw InputError("coordinate change has the wrong size");
  if (is_identity(a))
    return self();
  std::lock_guard lock(mutex_);
  auto &slot = transforms_[a.entries()];
  if (!slot) {
    if (determinant(a) == 0)
      throw InputError("coordinate change is singular");
    slot = make_transformed(a);
  }
  return slot;
}

std::shared_ptr<SeriesNode> SeriesNode::make_transformed(const RatMatrix &a) {
  return make_node<TransformedNode>(self(), a);
}

GradedSeries GradedSeries::generated(std::size_t ambient_dim,
                                     int divisor_degree,
                                     std::vector<GeneratorBlock> generators) {
  if (divisor_degree < 0)
    throw InputError("divisor degree must be non-negative");
  if (ambient_dim + 1 > Exponent::kMaxVars)
    throw UnsupportedError("ambient dimension too large");
  return GradedSeries(make_node<GeneratedNode>(ambient_dim, divisor_degree,
                                               std::move(generators)));
}

GradedSeries GradedSeries::complete(std::size_t ambient_dim,
                                    int divisor_degree) {
  GeneratorBlock block{1, {}};
  for (const auto &e : monomials_of_degree(ambient_dim + 1, divisor_degree))
    block.forms.push_back(HomogeneousForm::monomial(e));
  return generated(ambient_dim, divisor_degree, {block});
}

GradedSeries GradedSeries::zero(std::size_t ambient_dim, int divisor_degree) {
  return generated(ambient_dim, divisor_degree, {});
}

GradedSeries GradedSeries::explicit_levels(std::size_t ambient_dim,
                                           int divisor_degree,
                                           std::function<FormSpan(int)> levels,
                                           std::string description) {
  return GradedSeries(make_node<ExplicitNode>(
      ambient_dim, divisor_degree, std::move(levels), std::move(description)));
}

std::size_t GradedSeries::ambient_dim() const { return node_->ambient_dim(); }
int GradedSeries::divisor_degree() const { return node_->divisor_degree(); }
std::string GradedSeries::description() const { return node_->description(); }
const FormSpan &GradedSeries::level(int k) const { return node_->level(k); }

const std::vector<GeneratorBlock> *GradedSeries::generators() const {
  return node_->generators();
}

bool GradedSeries::has_monomial_generators() const {
  auto *g = dynamic_cast<GeneratedNode *>(node_.get());
  return g && g->monomial();
}

GradedSeries GradedSeries::transformed(const RatMatrix &a) const {
  return GradedSeries(node_->transformed(a));
}

const FormSpan &level(const GradedSeries &s, int k, int K) {
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  if (k > K)
    throw InputError("level " + std::to_string(k) +
                     " is beyond the truncation bound " + std::to_string(K));
  return s.level(k);
}

GradedSeries veronese(const GradedSeries &s, int b) {
  if (b < 1)
    throw InputError("Veronese degree must be positive");
  if (b == 1)
    return s;
  return GradedSeries(make_node<VeroneseNode>(s.node(), b));
}

GradedSeries subtract_divisor(const GradedSeries &s, int a, const Flag &flag) {
  if (a < 0)
    throw InputError("cannot subtract a negative multiple of Y1");
  if (flag.nvars() != s.nvars())
    throw InputError("flag size does not match the series");
  if (a == 0)
    return s;
  if (a > s.divisor_degree())
    return GradedSeries::zero(s.ambient_dim(), 0);
  return GradedSeries(
      make_node<SubtractNode>(s.node(), a, flag, flag.inverse_matrix()));
}

GradedSeries restrict_to_flag_divisor(const GradedSeries &s, const Flag &flag) {
  if (s.ambient_dim() == 0)
    throw InputError("cannot restrict a series on a point");
  if (flag.nvars() != s.nvars())
    throw InputError("flag size does not match the series");
  return GradedSeries(make_node<RestrictNode>(
      s.node(), flag, RatMatrix::identity(s.ambient_dim())));
}

GradedSeries puncture(const GradedSeries &s, std::span<const BigRational> x) {
  if (x.size() != s.nvars())
    throw InputError("point has the wrong number of coordinates");
  bool nonzero = false;
  for (const auto &c : x)
    if (c != 0)
      nonzero = true;
  if (!nonzero)
    throw InputError("the zero vector is not a projective point");
  return GradedSeries(
      make_node<PunctureNode>(s.node(), RatVector(x.begin(), x.end())));
}

GradedSeries fujita_subseries(const GradedSeries &s, int p) {
  if (p < 1)
    throw InputError("Fujita degree must be positive");
  const FormSpan &sp = s.level(p);
  return GradedSeries::generated(s.ambient_dim(), s.divisor_degree() * p,
                                 {GeneratorBlock{1, sp.basis()}});
}

HilbertData hilbert_data(const GradedSeries &s, int K) {
  if (K < 1)
    throw InputError("truncation bound must be at least 1");
  const std::size_t d = s.ambient_dim();
  HilbertData out;
  out.truncation = K;
  for (int k = 0; k <= K; ++k)
    out.dims.push_back(s.level(k).dimension());

  std::vector<BigInt> diff(out.dims.begin(), out.dims.end());
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<BigInt> next;
    for (std::size_t i = 1; i < diff.size(); ++i)
      next.push_back(diff[i] - diff[i - 1]);
    diff = std::move(next);
  }
  if (diff.size() >= 3) {
    const auto &c = diff.back();
    if (diff[diff.size() - 2] == c && diff[diff.size() - 3] == c) {
      out.volume = BigRational(c);
      out.stabilized = true;
      return out;
    }
  }
  BigInt fact = 1, kd = 1;
  for (std::size_t i = 2; i <= d; ++i)
    fact *= static_cast<unsigned long>(i);
  for (std::size_t i = 0; i < d; ++i)
    kd *= K;
  out.volume = make_rational(fact * out.dims.back(), kd);
  return out;
}

bool is_base_point(const GradedSeries &s, int k,
                   std::span<const BigRational> x) {
  for (const auto &f : s.level(k).basis())
    if (f.evaluate(x) != 0)
      return false;
  return true;
}

} // namespace okb
