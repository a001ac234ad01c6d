#include "okbody/polyform.hpp"

#include <algorithm>
#include <sstream>

namespace okb {

Exponent::Exponent(std::size_t nvars) : size_(nvars) {
  if (nvars > kMaxVars)
    throw UnsupportedError("at most " + std::to_string(kMaxVars) +
                           " homogeneous variables are supported");
}

Exponent::Exponent(std::initializer_list<int> entries)
    : Exponent(std::span<const int>(entries.begin(), entries.size())) {}

Exponent::Exponent(std::span<const int> entries) : Exponent(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0)
      throw InputError("negative exponent");
    e_[i] = entries[i];
  }
}

int Exponent::total() const {
  int s = 0;
  for (std::size_t i = 0; i < size_; ++i)
    s += e_[i];
  return s;
}

std::vector<int> Exponent::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + size_);
}

Exponent Exponent::without(std::size_t i) const {
  Exponent out(size_ - 1);
  for (std::size_t j = 0, k = 0; j < size_; ++j)
    if (j != i)
      out.e_[k++] = e_[j];
  return out;
}

bool Exponent::divides(const Exponent &other) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (e_[i] > other.e_[i])
      return false;
  return true;
}

Exponent operator+(const Exponent &a, const Exponent &b) {
  Exponent out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i)
    out.e_[i] = a.e_[i] + b.e_[i];
  return out;
}

Exponent operator-(const Exponent &a, const Exponent &b) {
  Exponent out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i)
    out.e_[i] = a.e_[i] - b.e_[i];
  return out;
}

std::string to_string(const Exponent &e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

namespace {

void enumerate(std::size_t nvars, int remaining, std::size_t pos, Exponent &cur,
               std::vector<Exponent> &out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[pos] = v;
    enumerate(nvars, remaining - v, pos + 1, cur, out);
  }
}

} // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0)
    return out;
  if (nvars == 0) {
    if (degree == 0)
      out.emplace_back(0);
    return out;
  }
  Exponent cur(nvars);
  enumerate(nvars, degree, 0, cur, out);
  return out;
}

BigInt count_monomials(std::size_t nvars, int degree) {
  if (degree < 0)
    return 0;
  if (nvars == 0)
    return degree == 0 ? 1 : 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(degree + nvars - 1),
               static_cast<unsigned long>(nvars - 1));
  return r;
}

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(std::size_t nvars, int degree)
    : nvars_(nvars), degree_(degree) {
  if (degree < 0)
    throw InputError("negative degree");
}

HomogeneousForm HomogeneousForm::monomial(const Exponent &e, BigRational c) {
  HomogeneousForm f(e.size(), e.total());
  f.add_term(e, c);
  return f;
}

HomogeneousForm HomogeneousForm::constant(std::size_t nvars, BigRational c) {
  return monomial(Exponent(nvars), std::move(c));
}

void HomogeneousForm::add_term(const Exponent &e, const BigRational &c) {
  if (e.size() != nvars_ || e.total() != degree_)
    throw InputError("term " + to_string(e) + " is not of degree " +
                     std::to_string(degree_) + " in " +
                     std::to_string(nvars_) + " variables");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

BigRational HomogeneousForm::coefficient(const Exponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

const Exponent &HomogeneousForm::lowest_exponent() const {
  if (terms_.empty())
    throw InputError("the zero form has no lowest exponent");
  return terms_.begin()->first;
}

BigRational HomogeneousForm::evaluate(std::span<const BigRational> point) const {
  if (point.size() != nvars_)
    throw InputError("evaluation point has the wrong number of coordinates");
  BigRational sum = 0;
  for (const auto &[e, c] : terms_) {
    BigRational v = c;
    for (std::size_t i = 0; i < nvars_ && v != 0; ++i) {
      if (e[i] == 0)
        continue;
      BigRational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

HomogeneousForm &HomogeneousForm::operator+=(const HomogeneousForm &g) {
  if (g.nvars_ != nvars_ || g.degree_ != degree_) {
    if (g.is_zero())
      return *this;
    throw InputError("adding forms of different degree or variable count");
  }
  for (const auto &[e, c] : g.terms_)
    add_term(e, c);
  return *this;
}

HomogeneousForm &HomogeneousForm::operator-=(const HomogeneousForm &g) {
  if (g.nvars_ != nvars_ || g.degree_ != degree_) {
    if (g.is_zero())
      return *this;
    throw InputError("subtracting forms of different degree or variable count");
  }
  for (const auto &[e, c] : g.terms_)
    add_term(e, -c);
  return *this;
}

HomogeneousForm &HomogeneousForm::operator*=(const BigRational &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[e, v] : terms_)
    v *= c;
  return *this;
}

std::string to_string(const HomogeneousForm &f) {
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : f.terms()) {
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    BigRational a = abs(c);
    bool unit = a == 1;
    if (!unit || e.total() == 0)
      os << a.get_str();
    bool star = !unit;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (star)
        os << "*";
      os << "X" << (i + 1);
      if (e[i] > 1)
        os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

HomogeneousForm multiply(const HomogeneousForm &f, const HomogeneousForm &g) {
  if (f.nvars() != g.nvars())
    throw InputError("multiplying forms in different numbers of variables");
  HomogeneousForm out(f.nvars(), f.degree() + g.degree());
  for (const auto &[ef, cf] : f.terms())
    for (const auto &[eg, cg] : g.terms())
      out.add_term(ef + eg, cf * cg);
  return out;
}

HomogeneousForm power(const HomogeneousForm &f, int exponent) {
  if (exponent < 0)
    throw InputError("negative power of a form");
  HomogeneousForm result = HomogeneousForm::constant(f.nvars());
  HomogeneousForm base = f;
  while (exponent > 0) {
    if (exponent & 1)
      result = multiply(result, base);
    exponent >>= 1;
    if (exponent)
      base = multiply(base, base);
  }
  return result;
}

HomogeneousForm substitute_linear_unchecked(const HomogeneousForm &f,
                                            const RatMatrix &a) {
  const std::size_t n = f.nvars();
  if (a.rows() != n || a.cols() != n)
    throw InputError("substitution matrix must be square of size nvars");
  // powers[i][k] = (row i of A, as a linear form)^k
  std::vector<std::vector<HomogeneousForm>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    HomogeneousForm lin(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n);
      e[j] = 1;
      lin.add_term(e, a(i, j));
    }
    powers[i].push_back(HomogeneousForm::constant(n));
    powers[i].push_back(lin);
  }
  auto pw = [&](std::size_t i, int k) -> const HomogeneousForm & {
    while (static_cast<int>(powers[i].size()) <= k)
      powers[i].push_back(multiply(powers[i].back(), powers[i][1]));
    return powers[i][k];
  };
  HomogeneousForm out(n, f.degree());
  for (const auto &[e, c] : f.terms()) {
    HomogeneousForm term = HomogeneousForm::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0)
        term = multiply(term, pw(i, e[i]));
    out += term;
  }
  return out;
}

HomogeneousForm substitute_linear(const HomogeneousForm &f,
                                  const RatMatrix &a) {
  if (a.rows() != f.nvars() || a.cols() != f.nvars())
    throw InputError("substitution matrix must be square of size nvars");
  if (determinant(a) == 0)
    throw InputError("substitution matrix is singular");
  return substitute_linear_unchecked(f, a);
}

HomogeneousForm set_variable_zero(const HomogeneousForm &f, std::size_t i) {
  if (i >= f.nvars())
    throw InputError("variable index out of range");
  HomogeneousForm out(f.nvars() - 1, f.degree());
  for (const auto &[e, c] : f.terms())
    if (e[i] == 0)
      out.add_term(e.without(i), c);
  return out;
}

HomogeneousForm divide_by_variable_power(const HomogeneousForm &f,
                                         std::size_t i, int a) {
  if (a < 0 || a > f.degree())
    throw InvariantError("cannot divide by this power of a variable");
  HomogeneousForm out(f.nvars(), f.degree() - a);
  for (const auto &[e, c] : f.terms()) {
    if (e[i] < a)
      throw InvariantError("form is not divisible by X" +
                           std::to_string(i + 1) + "^" + std::to_string(a));
    Exponent q = e;
    q[i] -= a;
    out.add_term(q, c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Exponent> FormSpan::pivots() const {
  std::vector<Exponent> out;
  out.reserve(basis_.size());
  for (const auto &b : basis_)
    out.push_back(b.lowest_exponent());
  return out;
}

bool FormSpan::is_monomial() const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [](const HomogeneousForm &f) { return f.is_monomial(); });
}

bool FormSpan::contains(const HomogeneousForm &f) const {
  if (f.is_zero())
    return true;
  if (f.nvars() != nvars_ || f.degree() != degree_)
    return false;
  // In RREF the coefficient of f at each pivot determines the combination.
  HomogeneousForm rest = f;
  for (const auto &b : basis_) {
    BigRational c = f.coefficient(b.lowest_exponent());
    if (c != 0)
      rest -= b * c;
  }
  return rest.is_zero();
}

SpanBuilder::SpanBuilder(std::size_t nvars, int degree)
    : nvars_(nvars), degree_(degree),
      ambient_dim_(count_monomials(nvars, degree)) {}

bool SpanBuilder::insert(const HomogeneousForm &f) {
  if (f.is_zero() || full_)
    return false;
  if (f.nvars() != nvars_ || f.degree() != degree_)
    throw InputError("span inputs must share degree and variable count");
  Row v(f.terms().begin(), f.terms().end());
  Row scratch;
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end())
      break;
    // v <- v - lead(v) * row, merging two sorted term lists.
    const Row &r = it->second;
    BigRational factor = v.front().second;
    scratch.clear();
    std::size_t a = 0, b = 0;
    while (a < v.size() || b < r.size()) {
      if (b == r.size() || (a < v.size() && v[a].first < r[b].first)) {
        scratch.push_back(std::move(v[a++]));
      } else if (a == v.size() || r[b].first < v[a].first) {
        scratch.emplace_back(r[b].first, -factor * r[b].second);
        ++b;
      } else {
        BigRational c = v[a].second - factor * r[b].second;
        if (c != 0)
          scratch.emplace_back(v[a].first, std::move(c));
        ++a;
        ++b;
      }
    }
    std::swap(v, scratch);
  }
  if (v.empty())
    return false;
  if (v.front().second != 1) {
    BigRational inv = 1 / v.front().second;
    for (auto &t : v)
      t.second *= inv;
  }
  Exponent pivot = v.front().first;
  rows_.emplace(pivot, std::move(v));
  if (BigInt(rows_.size()) == ambient_dim_)
    full_ = true;
  return true;
}

FormSpan SpanBuilder::finish() && {
  FormSpan out(nvars_, degree_);
  // Back-substitution from the largest pivot down. A row already processed
  // carries no other pivot, so subtracting it never reintroduces one.
  std::map<Exponent, HomogeneousForm> reduced;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    HomogeneousForm f(nvars_, degree_);
    for (auto &[e, c] : it->second)
      f.add_term(e, c);
    HomogeneousForm g = f;
    for (const auto &[e, c] : f.terms()) {
      if (e == it->first)
        continue;
      auto r = reduced.find(e);
      if (r != reduced.end())
        g -= r->second * c;
    }
    reduced.emplace(it->first, std::move(g));
  }
  out.basis_.reserve(reduced.size());
  for (auto &[p, f] : reduced)
    out.basis_.push_back(std::move(f));
  return out;
}

FormSpan span_reduce(std::size_t nvars, int degree,
                     std::span<const HomogeneousForm> forms) {
  for (const auto &f : forms)
    if (!f.is_zero() && (f.nvars() != nvars || f.degree() != degree))
      throw InputError("span_reduce: form of degree " +
                       std::to_string(f.degree()) + " in a degree-" +
                       std::to_string(degree) + " span");
  SpanBuilder b(nvars, degree);
  for (const auto &f : forms) {
    b.insert(f);
    if (b.full())
      break;
  }
  return std::move(b).finish();
}

} // namespace okb
