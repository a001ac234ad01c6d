#include "doctest.h"

#include <random>

#include "okbody/glseries.hpp"
#include "oracles.hpp"

using namespace okb;

namespace {

HomogeneousForm mono(std::initializer_list<int> e, long c = 1) {
  return HomogeneousForm::monomial(Exponent(e), BigRational(c));
}

GradedSeries plane_example() {
  return GradedSeries::generated(
      2, 2,
      {{1,
        {mono({2, 0, 0}), mono({0, 2, 0}), mono({0, 0, 2}), mono({1, 1, 0}),
         mono({1, 0, 1})}}});
}

RatVector pt(std::initializer_list<long> v) {
  RatVector out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

} // namespace

TEST_CASE("levels of generated series") {
  CHECK(GradedSeries::complete(2, 1).level(2).dimension() == 6);
  auto s = plane_example();
  CHECK(s.level(0).dimension() == 1);
  CHECK(s.level(1).dimension() == 5);
  // X2^3 X3 and X2 X3^3 would need the missing X2 X3
  CHECK(level(s, 2, 2).dimension() == 13);
  for (int k = 1; k <= 5; ++k)
    CHECK(s.level(k).dimension() ==
          std::size_t((2 * k + 1) * (2 * k + 2) / 2 - k));
  CHECK_THROWS_AS(level(s, 3, 2), InputError);

  // oracle: every pairwise product of the generators, dense rank
  std::vector<HomogeneousForm> products;
  for (auto &f : s.level(1).basis())
    for (auto &g : s.level(1).basis())
      products.push_back(oracle::naive_multiply(f, g));
  CHECK(oracle::dense_rank(3, 4, products) == 13);

  CHECK(GradedSeries::zero(2, 1).level(3).dimension() == 0);
  CHECK(GradedSeries::zero(2, 1).level(0).dimension() == 1);

  CHECK_THROWS_AS(GradedSeries::generated(2, 2, {{1, {mono({1, 0, 0})}}}),
                  InputError);
}

TEST_CASE("multiplicativity audit") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    GeneratorBlock b1{1, {}}, b2{2, {}};
    for (int i = 0; i < 2; ++i)
      b1.forms.push_back(oracle::random_form(rng, 3, 1, 2, 2));
    b2.forms.push_back(oracle::random_form(rng, 3, 2, 3, 2));
    auto s = GradedSeries::generated(2, 1, {b1, b2});
    int k = 1 + int(rng() % 3), l = 1 + int(rng() % 3);
    const auto &sum = s.level(k + l);
    for (auto &f : s.level(k).basis())
      for (auto &g : s.level(l).basis())
        CHECK(sum.contains(f * g));
  }
}

TEST_CASE("Veronese") {
  auto s = plane_example();
  auto v1 = veronese(s, 1);
  CHECK(v1.level(1) == s.level(1));
  auto o1 = GradedSeries::complete(2, 1);
  auto v2 = veronese(o1, 2);
  CHECK(v2.divisor_degree() == 2);
  auto o2 = GradedSeries::complete(2, 2);
  for (int k = 0; k <= 3; ++k)
    CHECK(v2.level(k) == o2.level(k));
}

TEST_CASE("subtracting a multiple of Y1") {
  auto flag = Flag::standard(3);
  auto o2 = GradedSeries::complete(2, 2);
  CHECK(subtract_divisor(o2, 0, flag).level(1) == o2.level(1));
  auto s1 = subtract_divisor(o2, 1, flag);
  CHECK(s1.divisor_degree() == 1);
  CHECK(s1.level(1).dimension() == 3);
  CHECK(s1.level(1) == GradedSeries::complete(2, 1).level(1));
  auto s2 = subtract_divisor(o2, 2, flag);
  CHECK(s2.level(1).dimension() == 1);
  CHECK(s2.level(1).contains(HomogeneousForm::constant(3)));
  CHECK(subtract_divisor(o2, 3, flag).level(2).dimension() == 0);

  SUBCASE("brute-force filter oracle under a non-standard flag") {
    // forms of S_k vanishing to order a k along A(first coordinate)
    auto f = random_flag(3, 4);
    auto s = subtract_divisor(plane_example(), 1, f);
    for (int k = 1; k <= 2; ++k) {
      const auto &lv = s.level(k);
      for (auto &g : lv.basis()) {
        // g * x1'^k, written back, must lie in S_k
        RatVector row = f.inverse_matrix().row(0);
        HomogeneousForm lin(3, 1);
        for (std::size_t j = 0; j < 3; ++j) {
          Exponent e(3);
          e[j] = 1;
          lin.add_term(e, row[j]);
        }
        CHECK(plane_example().level(k).contains(g * power(lin, k)));
      }
    }
  }
}

TEST_CASE("restriction to Y1") {
  auto flag = Flag::standard(3);
  auto r = restrict_to_flag_divisor(GradedSeries::complete(2, 2), flag);
  CHECK(r.ambient_dim() == 1);
  CHECK(r.level(1).dimension() == 3);
  auto re = restrict_to_flag_divisor(plane_example(), flag);
  CHECK(re.level(1).dimension() == 2);
  CHECK(re.level(1).contains(mono({2, 0})));
  CHECK(re.level(1).contains(mono({0, 2})));
  auto rz = restrict_to_flag_divisor(GradedSeries::zero(2, 2), flag);
  CHECK(rz.level(1).dimension() == 0);
  CHECK(rz.level(2).dimension() == 0);
}

TEST_CASE("punctured series") {
  auto o1 = GradedSeries::complete(2, 1);
  auto p = puncture(o1, pt({0, 0, 1}));
  CHECK(p.level(1).dimension() == 2);
  CHECK(p.level(1).contains(mono({1, 0, 0})));
  CHECK(p.level(1).contains(mono({0, 1, 0})));
  CHECK(p.level(0).dimension() == 1);

  auto x = pt({1, 1, 1});
  auto pe = puncture(plane_example(), x);
  CHECK(pe.level(1).dimension() == 4);
  for (auto &f : pe.level(1).basis())
    CHECK(f.evaluate(x) == 0);

  auto based = GradedSeries::generated(2, 2, {{1, {mono({2, 0, 0}), mono({1, 1, 0})}}});
  auto pb = puncture(based, pt({0, 0, 1}));
  for (int k = 1; k <= 3; ++k)
    CHECK(pb.level(k) == based.level(k));
  CHECK_THROWS_AS(puncture(o1, pt({0, 0, 0})), InputError);

  // transformed puncture keeps the vanishing condition at the moved point
  auto f = random_flag(3, 9);
  auto t = pe.transformed(f.matrix());
  RatVector moved = f.inverse_matrix() * x;
  for (auto &g : t.level(2).basis())
    CHECK(g.evaluate(moved) == 0);
  CHECK(t.level(2).dimension() == pe.level(2).dimension());
}

TEST_CASE("Fujita subseries") {
  auto s = plane_example();
  auto v1 = fujita_subseries(s, 1);
  for (int k = 0; k <= 3; ++k)
    CHECK(v1.level(k) == s.level(k));
  auto p1 = GradedSeries::complete(1, 1);
  CHECK(fujita_subseries(p1, 2).level(1).dimension() == 3);

  // generated by X1, X2 in degree 1 and X3^2 in degree 2
  auto odd = GradedSeries::generated(
      2, 1, {{1, {mono({1, 0, 0}), mono({0, 1, 0})}}, {2, {mono({0, 0, 2})}}});
  BigRational previous = -1;
  for (int p : {1, 2, 4}) {
    auto h = hilbert_data(fujita_subseries(odd, p), 12);
    BigRational normalized = h.volume / (p * p);
    CHECK(normalized >= previous);
    previous = normalized;
  }
  CHECK(previous == make_rational(1, 2));
}

TEST_CASE("Hilbert data") {
  auto h = hilbert_data(GradedSeries::complete(2, 2), 8);
  CHECK(h.stabilized);
  CHECK(h.volume == 4);
  for (int k = 0; k <= 8; ++k)
    CHECK(h.dims[k] == std::size_t((2 * k + 1) * (2 * k + 2) / 2));
  auto he = hilbert_data(plane_example(), 8);
  CHECK(he.stabilized);
  CHECK(he.volume == 4);
  auto hz = hilbert_data(GradedSeries::zero(2, 2), 6);
  CHECK(hz.volume == 0);
  auto short_run = hilbert_data(GradedSeries::complete(2, 1), 2);
  CHECK(!short_run.stabilized);
}

TEST_CASE("base points") {
  auto based = GradedSeries::generated(2, 2, {{1, {mono({2, 0, 0}), mono({1, 1, 0})}}});
  CHECK(is_base_point(based, 1, pt({0, 0, 1})));
  CHECK(!is_base_point(based, 1, pt({1, 0, 0})));
}
