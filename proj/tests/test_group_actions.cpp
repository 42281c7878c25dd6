#include <random>

#include "doctest.h"
#include "invkit/group_actions.hpp"
#include "test_support.hpp"

using namespace invkit;
using namespace invkit::testing;

namespace {

FiniteMatrixGroup sign_group(std::size_t m) {
  return FiniteMatrixGroup({RationalMatrix::identity(m), RationalMatrix::identity(m).scaled(-1)});
}

FiniteMatrixGroup c3() { return FiniteMatrixGroup::generated_by({mat({{0, -1}, {1, -1}})}); }

FiniteMatrixGroup s3_permutations() {
  return FiniteMatrixGroup::generated_by({mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})});
}

// Number of partitions of d into parts of size at most 3.
long partitions_max3(int d) {
  long count = 0;
  for (int c = 0; 3 * c <= d; ++c)
    for (int b = 0; 3 * c + 2 * b <= d; ++b) ++count;
  return count;
}

}  // namespace

TEST_CASE("act: identity, sign and rotation") {
  InducedAction a1(1, 1);
  Polynomial x = a1.x(0, 0);
  CHECK(act(a1, RationalMatrix::identity(1), x * x + x) == x * x + x);
  CHECK(act(a1, mat({{-1}}), x) == -x);

  InducedAction a2(2, 1);
  CHECK(act(a2, mat({{0, 1}, {-1, 0}}), a2.x(0, 0)) == -a2.x(1, 0));
  CHECK(act(a2, mat({{0, 1}, {-1, 0}}), a2.x(1, 0)) == a2.x(0, 0));
  CHECK_THROWS_AS(act(a2, RationalMatrix::identity(3), a2.x(0, 0)), std::invalid_argument);
}

TEST_CASE("variable naming of the induced action") {
  InducedAction a(2, 3);
  CHECK(a.ring()->size() == 6);
  CHECK(a.ring()->name(a.var(1, 2)) == "x[2,3]");
  CHECK(a.x(0, 1).to_string() == "x[1,2]");
}

TEST_CASE("composition, automorphism and determinant character") {
  std::mt19937 rng(7);
  InducedAction a(2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMatrix g = random_matrix(rng, 2, 2), h = random_matrix(rng, 2, 2);
    Polynomial f1 = random_poly(rng, a.ring(), 2, 4), f2 = random_poly(rng, a.ring(), 2, 3);
    CHECK(act(a, g, act(a, h, f1)) == act(a, g * h, f1));
    CHECK(act(a, g, f1 * f2) == act(a, g, f1) * act(a, g, f2));
    CHECK(act(a, g, f1).degree() <= f1.degree());
    Polynomial minor = a.x(0, 0) * a.x(1, 1) - a.x(1, 0) * a.x(0, 1);
    CHECK(act(a, g, minor) == minor.scaled(g.determinant()));
  }
}

TEST_CASE("finite group validation") {
  CHECK_THROWS_AS(FiniteMatrixGroup({mat({{-1}})}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMatrixGroup({RationalMatrix::identity(1), mat({{2}})}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMatrixGroup::generated_by({mat({{2}})}, 50), std::invalid_argument);
  CHECK(c3().order() == 3);
  CHECK(s3_permutations().order() == 6);
  std::vector<RationalMatrix> mod2{RationalMatrix::identity(1, Field::modular(2)),
                                   RationalMatrix::identity(1, Field::modular(2)).scaled(-1)};
  // -1 == 1 in Z/2, so the list repeats an element
  CHECK_THROWS_AS(FiniteMatrixGroup{mod2}, std::invalid_argument);
  auto p3 = Field::modular(3);
  CHECK_THROWS_AS(FiniteMatrixGroup::generated_by({RationalMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, p3)}),
                  std::invalid_argument);
}

TEST_CASE("reynolds operator") {
  InducedAction a(2, 1);
  auto g = sign_group(2);
  Polynomial x = a.x(0, 0), y = a.x(1, 0);
  CHECK(reynolds(g, a, x * x) == x * x);
  CHECK(reynolds(g, a, x).is_zero());

  // x -> y -> -x-y under the generator, so the orbit of x^2 is x^2, y^2, (x+y)^2.
  const auto cyclic = c3();
  Polynomial avg = reynolds(cyclic, a, x * x);
  CHECK(avg.to_string() == "2/3*x[1,1]^2 + 2/3*x[1,1]*x[2,1] + 2/3*x[2,1]^2");
  for (const auto& h : cyclic.elements()) CHECK(act(a, h, avg) == avg);

  std::mt19937 rng(11);
  for (const auto& grp : {sign_group(2), c3()}) {
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial f = random_poly(rng, a.ring(), 3, 4);
      Polynomial r = reynolds(grp, a, f);
      CHECK(reynolds(grp, a, r) == r);
    }
  }
}

TEST_CASE("reynolds is the identity on invariants and lands in them") {
  InducedAction a(3, 1);
  auto g = s3_permutations();
  for (int d = 0; d <= 4; ++d)
    for (const auto& f : fixed_space_basis(g, a, d)) CHECK(reynolds(g, a, f) == f);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial r = reynolds(g, a, random_poly(rng, a.ring(), 2, 5));
    for (const auto& h : g.elements()) CHECK(act(a, h, r) == r);
  }
}

TEST_CASE("fixed spaces of the sign group") {
  InducedAction a(2, 1);
  CHECK(fixed_space_basis(sign_group(2), a, 1).empty());
  auto b2 = fixed_space_basis(sign_group(2), a, 2);
  CHECK(b2.size() == 3);
  for (const auto& f : b2) CHECK(f.size() == 1);
}

TEST_CASE("molien series") {
  auto triv = FiniteMatrixGroup({RationalMatrix::identity(1)});
  CHECK(molien_series(triv, 5) == std::vector<mpz_class>{1, 1, 1, 1, 1, 1});
  CHECK(molien_series(sign_group(2), 6) == std::vector<mpz_class>{1, 0, 3, 0, 5, 0, 7});
  // 1/3 (1/(1-t)^2 + 2 (1-t)/(1-t^3))
  const long c3_terms[] = {1, -1, 0};
  auto series = molien_series(c3(), 10);
  for (int d = 0; d <= 10; ++d) CHECK(series[d] == (d + 1 + 2 * c3_terms[d % 3]) / 3);
  auto s3 = molien_series(s3_permutations(), 10);
  for (int d = 0; d <= 10; ++d) CHECK(s3[d] == partitions_max3(d));
  // two copies of {+-1}: even-degree monomials in two variables
  auto two = molien_series(sign_group(1), 6, 2);
  CHECK(two == std::vector<mpz_class>{1, 0, 3, 0, 5, 0, 7});

  auto p5 = FiniteMatrixGroup({RationalMatrix::identity(1, Field::modular(5))});
  CHECK_THROWS_AS(molien_series(p5, 3), std::domain_error);
}

TEST_CASE("fixed-space dimensions agree with Molien coefficients") {
  struct Case {
    FiniteMatrixGroup g;
    int m;
  };
  for (const auto& c : {Case{sign_group(2), 2}, Case{c3(), 2}, Case{s3_permutations(), 3}}) {
    InducedAction a(c.m, 1);
    auto series = molien_series(c.g, 10);
    for (int d = 0; d <= 10; ++d) CHECK(mpz_class(fixed_space_basis(c.g, a, d).size()) == series[d]);
  }
}

TEST_CASE("fixed spaces in characteristic p") {
  auto p7 = Field::modular(7);
  InducedAction a(2, 1, p7);
  FiniteMatrixGroup g({RationalMatrix::identity(2, p7), RationalMatrix::identity(2, p7).scaled(-1)});
  CHECK(fixed_space_basis(g, a, 2).size() == 3);
  CHECK(fixed_space_basis(g, a, 3).empty());
}

TEST_CASE("classical group specs") {
  auto sp = ClassicalGroupSpec::standard(ClassicalKind::Sp, 4);
  CHECK(sp.form(0, 2) == 1);
  CHECK(sp.form(2, 0) == -1);
  CHECK_THROWS_AS(ClassicalGroupSpec::standard(ClassicalKind::Sp, 3), std::invalid_argument);
  CHECK_THROWS_AS(ClassicalGroupSpec::symplectic(mat({{1, 0}, {0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(ClassicalGroupSpec::orthogonal(mat({{0, 1}, {-1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(ClassicalGroupSpec::orthogonal(mat({{1, 1}, {1, 1}})), std::invalid_argument);
  CHECK(parse_classical_kind("SO") == ClassicalKind::SO);
  CHECK_THROWS(parse_classical_kind("GL"));

  CHECK(lie_algebra_basis(ClassicalGroupSpec::special_linear(3)).size() == 8);
  CHECK(lie_algebra_basis(ClassicalGroupSpec::standard(ClassicalKind::Sp, 4)).size() == 10);
  CHECK(lie_algebra_basis(ClassicalGroupSpec::standard(ClassicalKind::SO, 3)).size() == 3);
  for (auto kind : {ClassicalKind::Sp, ClassicalKind::SO}) {
    auto spec = ClassicalGroupSpec::standard(kind, 4);
    for (const auto& X : lie_algebra_basis(spec))
      CHECK((X * spec.form + spec.form * X.transpose()) == RationalMatrix(4, 4));
  }
}

TEST_CASE("orthogonal reflection preserves the form and has determinant -1") {
  for (auto form : {mat({{1, 0}, {0, 1}}), mat({{0, 1}, {1, 0}}), mat({{2, 1, 0}, {1, 0, 0}, {0, 0, -3}})}) {
    auto spec = ClassicalGroupSpec::orthogonal(form);
    RationalMatrix s = orthogonal_reflection(spec);
    CHECK(s * form * s.transpose() == form);
    CHECK(s.determinant() == -1);
  }
}

TEST_CASE("derivations annihilate exactly the infinitesimal invariants") {
  InducedAction a(2, 2);
  auto sl = ClassicalGroupSpec::special_linear(2);
  auto basis = infinitesimal_invariant_basis(sl, a, 2);
  REQUIRE(basis.size() == 1);
  Polynomial minor = a.x(0, 0) * a.x(1, 1) - a.x(1, 0) * a.x(0, 1);
  CHECK(basis[0].normalized() == minor.normalized());
  for (const auto& X : lie_algebra_basis(sl)) CHECK(apply_derivation(a, X, minor).is_zero());

  InducedAction one(2, 1);
  for (int d = 1; d <= 4; ++d) CHECK(infinitesimal_invariant_basis(sl, one, d).empty());

  auto sp = ClassicalGroupSpec::symplectic(mat({{0, 1}, {-1, 0}}));
  auto spb = infinitesimal_invariant_basis(sp, a, 2);
  REQUIRE(spb.size() == 1);
  // <1,2> = x_1^T B x_2
  Polynomial pairing = a.x(0, 0) * a.x(1, 1) - a.x(1, 0) * a.x(0, 1);
  CHECK(spb[0].normalized() == pairing.normalized());
}

TEST_CASE("infinitesimal invariants of orthogonal groups") {
  // O(1) = {+-1}: agrees with the finite computation
  InducedAction a(1, 2);
  auto o1 = ClassicalGroupSpec::standard(ClassicalKind::O, 1);
  auto series = molien_series(sign_group(1), 6, 2);
  for (int d = 0; d <= 6; ++d) CHECK(mpz_class(infinitesimal_invariant_dimension(o1, a, d)) == series[d]);

  // SO(2) on two vectors: <1,1>, <1,2>, <2,2> and the determinant in degree 2; O(2) drops the determinant
  InducedAction b(2, 2);
  CHECK(infinitesimal_invariant_dimension(ClassicalGroupSpec::standard(ClassicalKind::SO, 2), b, 2) == 4);
  CHECK(infinitesimal_invariant_dimension(ClassicalGroupSpec::standard(ClassicalKind::O, 2), b, 2) == 3);

  // each pairing <i,j> is O-invariant
  auto o3 = ClassicalGroupSpec::standard(ClassicalKind::O, 3);
  InducedAction c(3, 2);
  Polynomial p12(c.ring());
  for (int k = 0; k < 3; ++k) p12 += c.x(k, 0) * c.x(k, 1);
  for (const auto& X : lie_algebra_basis(o3)) CHECK(apply_derivation(c, X, p12).is_zero());
  CHECK(act(c, orthogonal_reflection(o3), p12) == p12);
  CHECK(infinitesimal_invariant_dimension(o3, c, 2) == 3);
  CHECK(infinitesimal_invariant_dimension(o3, c, 3) == 0);
}

TEST_CASE("infinitesimal invariants agree with the group on a random element") {
  // Sl: a random unimodular matrix fixes every element of the kernel
  std::mt19937 rng(5);
  InducedAction a(3, 3);
  auto basis = infinitesimal_invariant_basis(ClassicalGroupSpec::special_linear(3), a, 3);
  REQUIRE(basis.size() == 1);
  RationalMatrix u = mat({{1, 2, 0}, {0, 1, -1}, {0, 0, 1}}) * mat({{1, 0, 0}, {3, 1, 0}, {-2, 1, 1}});
  CHECK(act(a, u, basis[0]) == basis[0]);
  CHECK(infinitesimal_invariant_dimension(ClassicalGroupSpec::special_linear(3), a, 2) == 0);
}

TEST_CASE("infinitesimal invariants reject characteristic p") {
  InducedAction a(2, 2, Field::modular(5));
  CHECK_THROWS_AS(infinitesimal_invariant_basis(ClassicalGroupSpec::special_linear(2), a, 2), std::domain_error);
}
