#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invkit/linear_algebra.hpp"
#include "invkit/polynomial.hpp"

namespace invkit {

/// Graded algebra k[g_1..g_l]/(relations). Generator degrees are the ring
/// weights; relations are homogeneous in that grading.
class GradedPresentation {
 public:
  GradedPresentation(RingPtr ring, std::vector<Polynomial> relations, std::optional<int> t_bound = {});
  /// Parses relations in the ring's text syntax.
  static GradedPresentation parse(RingPtr ring, const std::vector<std::string>& relations,
                                  std::optional<int> t_bound = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const Field& field() const { return ring_->field(); }

  /// Largest generator degree (0 without generators).
  int generator_degree() const;
  /// Largest relation degree (0 without relations).
  int relation_degree() const;
  /// Metadata bound when present, else max(generator_degree, relation_degree, 1).
  int t_bound() const;
  bool has_t_bound() const { return t_bound_.has_value(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> relations_;
  std::optional<int> t_bound_;
};

/// Degree-d piece of a presented algebra. The ideal piece I_d is held in
/// echelon form over the degree-d generator monomials (descending order);
/// the non-pivot monomials are a basis of A_d.
class GradedPieceBasis {
 public:
  GradedPieceBasis(const GradedPresentation& p, int d, int max_relation_degree = -1);

  int degree() const { return degree_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  /// Indices into monomials() of the standard monomials, in order.
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Monomial& basis_monomial(std::size_t k) const { return monomials_[basis_[k]]; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ideal_dimension() const { return ideal_.rank(); }

  /// Coordinates of the class of a degree-d element, over basis(). Uses a
  /// shared scratch buffer, so one object must not reduce from two threads.
  SparseVector coordinates(const Polynomial& f) const;
  SparseVector monomial_coordinates(const Monomial& e) const;
  /// Whether f (homogeneous of degree d, or zero) lies in I_d.
  bool in_ideal(const Polynomial& f) const { return coordinates(f).empty(); }
  /// The standard-monomial representative of a coordinate vector.
  Polynomial representative(const SparseVector& coords) const;

 private:
  RingPtr ring_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
  EchelonBasis ideal_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> basis_slot_;
};

/// Generator-monomial basis and reduction for A_d.
GradedPieceBasis algebra_piece(const GradedPresentation& p, int d);

/// One factor of a symmetric-algebra basis element: the k-th basis element of A_i.
struct SymFactor {
  int degree;
  std::size_t index;
  friend auto operator<=>(const SymFactor&, const SymFactor&) = default;
};
/// Formal product of factors, sorted ascending.
using SymElement = std::vector<SymFactor>;

/// Basis of [S^*(A_1 + ... + A_t)]_d: multisets of A_i basis elements of
/// total norm d.
class SymPiece {
 public:
  SymPiece(const std::vector<std::size_t>& piece_dims, int t, int d);

  int degree() const { return degree_; }
  std::size_t dimension() const { return elements_.size(); }
  const std::vector<SymElement>& elements() const { return elements_; }
  /// Position of an element; throws std::out_of_range when absent.
  std::size_t index(const SymElement& s) const;

 private:
  int degree_;
  std::vector<SymElement> elements_;
  std::map<SymElement, std::size_t> index_;
};

/// Sum over tuples of norm d of prod_i C(dim A_i + d_i - 1, d_i).
mpz_class sym_dimension_formula(const std::vector<std::size_t>& piece_dims, int t, int d);

/// Pieces A_0..A_t of p, for building SymPiece and mult maps.
std::vector<GradedPieceBasis> low_pieces(const GradedPresentation& p, int t);

SymPiece sym_truncated_piece(const GradedPresentation& p, int t, int d);

/// Matrix of mu_d : [S^*(A_<=t)]_d -> A_d (rows: A_d basis, columns: sym basis).
RationalMatrix mult_map(const GradedPresentation& p, int t, int d);

struct PggDegreeRecord {
  int d = 0;
  std::size_t dim_sym = 0;
  std::size_t dim_A = 0;
  std::size_t rank_mu = 0;
  std::size_t dim_kernel = 0;
  /// Dimension of the part of ker mu_d generated from degrees <= t.
  std::size_t dim_generated = 0;
  bool surjective = false;
  bool kernel_generated = false;
};

enum class PggRoute {
  Automatic,  // Presentation ideal when every generator has degree <= t, else Literal.
  Presentation,
  Literal,  // Explicit symmetric algebra, mult maps and kernels.
};

struct PggCertificate {
  int t = 0;
  int D = 0;
  std::vector<PggDegreeRecord> degrees;
  bool certified = false;
  /// First failing degree and condition ("surjectivity" or "kernel generation").
  std::optional<int> failed_degree;
  std::string failed_condition;
  PggRoute route = PggRoute::Automatic;

  std::string verdict() const;
};

struct PggOptions {
  PggRoute route = PggRoute::Automatic;
  unsigned threads = 1;
};

/// Checks both t-pgg conditions in every degree d <= D; stops at the first failure.
PggCertificate check_tpgg(const GradedPresentation& p, int t, int D, const PggOptions& options = {});

struct MinPggResult {
  std::optional<int> t_min;  // empty: undetermined up to D
  PggCertificate certificate;
};

MinPggResult min_tpgg(const GradedPresentation& p, int D, const PggOptions& options = {});

/// Generators and relations of both factors; symbols of q clashing with p
/// get the suffix "_2". The bound is t_p + t_q.
GradedPresentation tensor_presentation(const GradedPresentation& p, const GradedPresentation& q);

/// p with extra homogeneous relations; the bound is max(t_p, max extra degree).
GradedPresentation quotient_presentation(const GradedPresentation& p, const std::vector<Polynomial>& extra);

}  // namespace invkit
