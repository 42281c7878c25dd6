#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "invkit/linear_algebra.hpp"
#include "invkit/polynomial.hpp"

namespace invkit {

/// Explicit finite group of invertible m x m matrices.
class FiniteMatrixGroup {
 public:
  /// Validates identity, closure under products and inverses, and that |G|
  /// is invertible in the field.
  explicit FiniteMatrixGroup(std::vector<RationalMatrix> elements);
  /// Closure of the given generators under multiplication.
  static FiniteMatrixGroup generated_by(const std::vector<RationalMatrix>& generators, std::size_t max_order = 100000);

  std::size_t dimension() const { return elements_.front().rows(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<RationalMatrix>& elements() const { return elements_; }
  const Field& field() const { return elements_.front().field(); }

 private:
  std::vector<RationalMatrix> elements_;
};

enum class ClassicalKind { Sl, Sp, O, SO };

std::string to_string(ClassicalKind k);
ClassicalKind parse_classical_kind(const std::string& s);

/// Sl(m), or the isometry group of a bilinear form B on the coordinate side:
/// {g : g B g^T = B} (with det g = 1 for SO). For the standard forms this is
/// the usual Sp(B), O(B), SO(B).
struct ClassicalGroupSpec {
  ClassicalKind kind = ClassicalKind::Sl;
  int m = 1;
  RationalMatrix form;  // empty for Sl

  static ClassicalGroupSpec special_linear(int m);
  static ClassicalGroupSpec symplectic(RationalMatrix form);
  static ClassicalGroupSpec orthogonal(RationalMatrix form, bool special = false);
  /// Standard forms: J = [[0, I], [-I, 0]] for Sp, the identity for O/SO.
  static ClassicalGroupSpec standard(ClassicalKind kind, int m);

  /// Throws std::invalid_argument when the form violates the kind's rules.
  void validate() const;
};

using GroupActionSpec = std::variant<FiniteMatrixGroup, ClassicalGroupSpec>;

/// A group acting on n copies of k^m. The coordinate ring has variables
/// x[i,j] (coordinate i, copy j, both 1-based), ordered row-major.
class InducedAction {
 public:
  InducedAction(int m, int n, Field field = {});

  int m() const { return m_; }
  int n() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t var(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }  // 0-based
  Polynomial x(int i, int j) const { return Polynomial::variable(ring_, var(i, j)); }
  /// The generic m x n matrix with entries x[i,j].
  std::vector<std::vector<Polynomial>> generic_matrix() const;

 private:
  int m_, n_;
  RingPtr ring_;
};

/// Contragradient action: x[i,j] -> sum_k g(k,i) x[k,j] on every copy j.
Polynomial act(const InducedAction& action, const RationalMatrix& g, const Polynomial& f);

/// Group average (1/|G|) sum_g act(g, f).
Polynomial reynolds(const FiniteMatrixGroup& group, const InducedAction& action, const Polynomial& f);

/// Basis of the degree-d invariants, from the joint kernel of act(g) - id.
std::vector<Polynomial> fixed_space_basis(const FiniteMatrixGroup& group, const InducedAction& action, int d);

/// Coefficients c_0..c_D of (1/|G|) sum_g det(1 - t g)^(-copies).
std::vector<mpz_class> molien_series(const FiniteMatrixGroup& group, int max_degree, int copies = 1);

/// det(1 - t g) as coefficients in t.
std::vector<Scalar> reverse_characteristic_polynomial(const RationalMatrix& g);

/// Basis of the Lie algebra: traceless matrices for Sl, {X : X B + B X^T = 0}
/// for the form-preserving kinds.
std::vector<RationalMatrix> lie_algebra_basis(const ClassicalGroupSpec& spec);

/// An element of O(B) \ SO(B) under the coordinate convention above.
RationalMatrix orthogonal_reflection(const ClassicalGroupSpec& spec);

/// D_X f = sum_{i,k,j} X(k,i) x[k,j] df/dx[i,j], the infinitesimal form of act.
Polynomial apply_derivation(const InducedAction& action, const RationalMatrix& X, const Polynomial& f);

/// Degree-d invariants of a classical group, via the joint kernel of the Lie
/// algebra derivations (plus the reflection's fixed space for O).
std::vector<Polynomial> infinitesimal_invariant_basis(const ClassicalGroupSpec& spec, const InducedAction& action, int d);
std::size_t infinitesimal_invariant_dimension(const ClassicalGroupSpec& spec, const InducedAction& action, int d);

}  // namespace invkit
