#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invkit/scalar.hpp"

namespace invkit {

/// Exponent vector, one entry per ring variable.
using Monomial = std::vector<unsigned>;

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// Variables with positive integer weights over a base field.
class PolynomialRing {
 public:
  static RingPtr make(std::vector<std::string> names, std::vector<int> weights, Field field = {});
  /// All weights equal to one.
  static RingPtr make(std::vector<std::string> names) { return standard(std::move(names)); }
  static RingPtr standard(std::vector<std::string> names, Field field = {});

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const Field& field() const { return field_; }

  /// Index of a variable; throws std::out_of_range for unknown names.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const;

  int degree(const Monomial& e) const;
  /// Graded-lex comparison: weighted degree first, then the exponent vector
  /// lexicographically. Returns <0, 0, >0.
  int compare(const Monomial& a, const Monomial& b) const;

  /// All monomials of weighted degree d, sorted descending in the term order.
  std::vector<Monomial> monomials_of_degree(int d) const;

  bool same_as(const PolynomialRing& o) const;

 private:
  PolynomialRing() = default;

  std::vector<std::string> names_;
  std::vector<int> weights_;
  Field field_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Term {
  Monomial exponents;
  Scalar coeff;
};

/// Sparse polynomial in canonical form: no zero coefficients, no repeated
/// monomials, terms sorted descending in the ring's graded-lex order.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, Monomial e, const Scalar& c = 1);
  /// Parses the text syntax produced by to_string(); e.g. "3*x^2*y - 1/2*z".
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const;

  /// Maximum weighted degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_component(int d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned k) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const Monomial& e) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  /// Replaces variable i by images[i]; all images must live in one ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// The same terms viewed in another ring with identical variables, or with
  /// variables remapped by name (every variable used must exist in target).
  Polynomial rename_into(RingPtr target) const;
  /// Positive leading coefficient, integer coefficients with gcd 1 (over Q);
  /// monic over Z/p.
  Polynomial normalized() const;

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& o, const char* op) const;
  void canonicalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace invkit
