#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "invkit/embeddings.hpp"
#include "test_support.hpp"

using namespace invkit;
using namespace invkit::testing;

namespace {

std::vector<Scalar> S(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RationalMatrix random_point(std::mt19937& rng, int m, int n) {
  RationalMatrix p(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = random_rational(rng, 6);
  return p;
}

// Random unimodular matrix: product of elementary shears.
RationalMatrix random_unimodular(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> idx(0, n - 1), val(-3, 3);
  RationalMatrix g = RationalMatrix::identity(n);
  for (int k = 0; k < 3 * n; ++k) {
    int a = idx(rng), b = idx(rng);
    if (a == b) continue;
    RationalMatrix e = RationalMatrix::identity(n);
    e(a, b) = Scalar(val(rng), 2);
    g = g * e;
  }
  return g;
}

}  // namespace

TEST_CASE("admissible exponents") {
  CHECK(admissible_exponents(1, 6) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(admissible_exponents(2, 12) == std::vector<int>{4, 6, 8, 10, 12});
  CHECK(admissible_exponents(3, 30) == std::vector<int>{18, 24, 30});
  for (int t = 1; t <= 4; ++t) {
    int fact = 1;
    for (int i = 2; i <= t + 1; ++i) fact *= i;
    auto ex = admissible_exponents(t, 200);
    CHECK(std::find(ex.begin(), ex.end(), fact) != ex.end());
  }
}

TEST_CASE("Veronese generation") {
  CHECK(veronese_generation_check(line(), 1, 2, 4).passed);
  auto w = free_algebra({"x", "y"}, {1, 2});
  CHECK(veronese_generation_check(w, 2, 6, 3).passed);
  CHECK(veronese_generation_check(w, 2, 4, 3).passed);
  auto bad = veronese_generation_check(w, 2, 5, 3);
  CHECK_FALSE(bad.passed);
  CHECK(bad.failed_n == 2);
  CHECK(bad.levels.back().rank + 1 == bad.levels.back().target);
  CHECK(veronese_generation_check(grassmannian24(), 4, 2, 5).passed);
}

TEST_CASE("image equations") {
  auto pt = image_equations(line(), 1, 2);
  CHECK(pt.coordinates.size() == 1);
  CHECK(pt.equations.empty());

  auto gr = image_equations(grassmannian24(), 4, 2, 2);
  CHECK(gr.coordinates.size() == 6);
  REQUIRE(gr.equations.size() == 1);
  CHECK(gr.equations[0].degree == 2);
  CHECK(gr.equations[0].form.size() == 3);
  CHECK(gr.nonvanishing_equations().empty());

  auto c = circle();
  auto chart = image_equations(c, 2, 4, 2);
  auto sym = sym_truncated_piece(c, 2, 4);
  CHECK(chart.coordinates.size() == sym.dimension());
  std::size_t n = chart.coordinates.size();
  std::size_t deg1 = 0, deg2 = 0;
  for (const auto& eq : chart.equations) (eq.degree == 1 ? deg1 : deg2)++;
  CHECK(deg1 == n - algebra_piece(c, 4).dimension());
  CHECK(deg2 == n * (n + 1) / 2 - algebra_piece(c, 8).dimension());
  CHECK(chart.nonvanishing_equations().empty());
  for (const auto& eq : chart.equations) CHECK(eq.degree <= 2);
}

TEST_CASE("spec embedding") {
  auto conic = spec_embedding_data(line(), 1, 2);
  REQUIRE(conic.coordinates.size() == 3);
  CHECK(conic.coordinates[0].to_string() == "T^2");
  CHECK(conic.coordinates[1].to_string() == "x*T");
  CHECK(conic.coordinates[2].to_string() == "x^2");
  REQUIRE(conic.equations.size() == 1);
  CHECK(conic.equations[0].degree == 2);
  CHECK(conic.equations[0].form.to_string() == "z1*z3 - z2^2");
  CHECK(conic.nonvanishing_equations().empty());

  auto point = spec_embedding_data(GradedPresentation(PolynomialRing::make({}), {}), 1, 1);
  CHECK(point.coordinates.size() == 1);
  CHECK(point.equations.empty());

  auto circ = spec_embedding_data(circle(), 2, 6);
  CHECK(circ.dmax == 3);
  for (const auto& eq : circ.equations) CHECK(eq.degree <= 3);
  // substitution soundness on a deterministic sample of the forms
  EmbeddingChart sample = circ;
  sample.equations.clear();
  for (std::size_t i = 0; i < circ.equations.size(); i += 97) sample.equations.push_back(circ.equations[i]);
  for (const auto& eq : circ.equations)
    if (eq.form.size() > 2) sample.equations.push_back(eq);
  CHECK(sample.nonvanishing_equations().empty());
}

TEST_CASE("a wrong form is caught by the soundness check") {
  auto gr = image_equations(grassmannian24(), 4, 2, 2);
  gr.equations[0].form = gr.equations[0].form + Polynomial::parse(gr.coordinate_ring, "z1^2");
  CHECK(gr.nonvanishing_equations() == std::vector<std::size_t>{0});
}

TEST_CASE("semistability") {
  auto a = semistable_test(2, 3, mat({{1, 0, 0}, {0, 1, 0}}));
  CHECK(a.semistable);
  CHECK(a.consistent);
  CHECK(a.witnesses == std::vector<std::vector<int>>{{1, 2}});

  auto b = semistable_test(2, 3, mat({{1, 2, 3}, {2, 4, 6}}));
  CHECK_FALSE(b.semistable);
  CHECK(b.rank == 1);
  CHECK(b.witnesses.empty());
  CHECK(b.consistent);
  CHECK_THROWS_AS(plucker_point(2, 3, mat({{1, 2, 3}, {2, 4, 6}})), std::domain_error);
  CHECK_THROWS_AS(semistable_test(2, 4, mat({{1, 2, 3}, {2, 4, 6}})), std::invalid_argument);

  std::size_t semistable = 0;
  for (int code = 0; code < 729; ++code) {
    RationalMatrix p(2, 3);
    int c = code;
    for (int k = 0; k < 6; ++k, c /= 3) p(k / 3, k % 3) = c % 3 - 1;
    auto r = semistable_test(2, 3, p);
    CHECK(r.consistent);
    semistable += r.semistable;
  }
  // 2x3 rank-2 matrices over {-1,0,1}, counted independently: 729 minus rank <= 1
  std::size_t low_rank = 0;
  for (int code = 0; code < 729; ++code) {
    int v[6], c = code;
    for (int k = 0; k < 6; ++k, c /= 3) v[k] = c % 3 - 1;
    bool all_zero = v[0] * v[4] - v[1] * v[3] == 0 && v[0] * v[5] - v[2] * v[3] == 0 && v[1] * v[5] - v[2] * v[4] == 0;
    low_rank += all_zero;
  }
  CHECK(semistable == 729 - low_rank);
}

TEST_CASE("Plücker points") {
  CHECK(plucker_point(2, 4, mat({{1, 0, 0, 0}, {0, 1, 0, 0}})) == S({1, 0, 0, 0, 0, 0}));
  auto p = plucker_point(2, 4, mat({{1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK(p == S({1, 0, 1, -1, 0, 1}));
  CHECK(plucker_relations_vanish(2, 4, p));
  CHECK_FALSE(plucker_relations_vanish(2, 4, S({1, 0, 0, 0, 0, 1})));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto pt = random_point(rng, 2, 4);
    if (pt.rank() < 2) continue;
    CHECK(plucker_relations_vanish(2, 4, plucker_point(2, 4, pt)));
  }
  auto pt3 = random_point(rng, 3, 6);
  CHECK(plucker_relations_vanish(3, 6, plucker_point(3, 6, pt3)));
}

TEST_CASE("equivariance of Plücker points") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix pt = random_point(rng, 2, 4);
    if (pt.rank() < 2) continue;
    auto base = plucker_point(2, 4, pt);

    RationalMatrix g = random_matrix(rng, 2, 2);
    if (g.is_invertible()) {
      auto moved = plucker_point(2, 4, g * pt);
      Vector scaled;
      for (const auto& x : base) scaled.push_back(x * g.determinant());
      CHECK(moved == scaled);
      CHECK(projectively_equal(moved, base));
    }

    RationalMatrix h = random_unimodular(rng, 4);
    CHECK(h.determinant() == 1);
    auto moved = plucker_point(2, 4, pt * h);
    CHECK(moved == compound_matrix(h, 2).transpose().apply(base));
  }
}

TEST_CASE("compound matrices") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    CHECK(compound_matrix(a * b, 2) == compound_matrix(a, 2) * compound_matrix(b, 2));
    CHECK(compound_matrix(a, 4)(0, 0) == a.determinant());
  }
  CHECK(compound_matrix(RationalMatrix::identity(4), 2) == RationalMatrix::identity(6));
}

TEST_CASE("projective equality") {
  CHECK(projectively_equal(S({2, 0, 4}), S({1, 0, 2})));
  CHECK_FALSE(projectively_equal(S({2, 0, 4}), S({1, 1, 2})));
  CHECK_FALSE(projectively_equal(S({0, 0}), S({0, 0})));
}
