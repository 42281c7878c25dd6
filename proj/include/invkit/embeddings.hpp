#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invkit/linear_algebra.hpp"
#include "invkit/pgg.hpp"

namespace invkit {

/// Exponents e <= cap of the form n * m with n >= t and m a positive
/// multiple of lcm(1..t), ascending.
std::vector<int> admissible_exponents(int t, int cap);

struct VeroneseLevel {
  int n = 0;
  std::size_t rank = 0;    // dimension of the image of S^n(coordinates) in A_{n e}
  std::size_t target = 0;  // dim A_{n e}
  bool surjective() const { return rank == target; }
};

struct VeroneseReport {
  int t = 0, e = 0, N = 0;
  std::vector<VeroneseLevel> levels;
  bool passed = true;
  std::optional<int> failed_n;
};

/// For 1 <= n <= N, whether products of n degree-e coordinates span A_{n e}.
/// Coordinates are the images of [S^*(A_<=t)]_e in A_e.
VeroneseReport veronese_generation_check(const GradedPresentation& p, int t, int e, int N);

struct ImageEquation {
  int degree = 0;
  Polynomial form;  // in the coordinate ring z1..zN
};

/// Coordinates of P([S^*(A_<=t)]_e) and the forms cutting out the image.
struct EmbeddingChart {
  GradedPresentation presentation;  // the target algebra (augmented by T for affine charts)
  int t = 0, e = 0, dmax = 0;
  bool affine = false;
  RingPtr coordinate_ring;              // z1..zN, all of degree one
  std::vector<Polynomial> coordinates;  // representative of z_i in the presentation ring
  std::vector<ImageEquation> equations;

  /// Substitutes coordinates into every form and reduces modulo the relations;
  /// returns the indices of forms that do not vanish.
  std::vector<std::size_t> nonvanishing_equations() const;
};

/// Kernel of S^k(coordinates) -> A_{k e} for 1 <= k <= dmax (default max(t, 2)).
EmbeddingChart image_equations(const GradedPresentation& p, int t, int e, std::optional<int> dmax = {});

/// Affine variant: P (x) k[T], coordinates s * T^(e - |s|) for the symmetric
/// monomials s of norm at most e; dmax defaults to max(t + 1, 2).
EmbeddingChart spec_embedding_data(const GradedPresentation& p, int t, int e, std::optional<int> dmax = {});

struct SemistabilityReport {
  int m = 0, n = 0;
  RationalMatrix point;
  std::size_t rank = 0;
  std::vector<std::vector<int>> witnesses;  // 1-based column sets J with d_J != 0
  std::vector<Scalar> minors;               // all d_J in lexicographic J order
  bool semistable = false;
  /// Rank criterion and minor criterion agree.
  bool consistent = false;
};

SemistabilityReport semistable_test(int m, int n, const RationalMatrix& point);

/// All maximal minors d_J(point), J increasing. Throws std::domain_error for
/// unstable points.
std::vector<Scalar> plucker_point(int m, int n, const RationalMatrix& point);

/// Whether every Plücker relation for (m, n) vanishes at the coordinate vector.
bool plucker_relations_vanish(int m, int n, const std::vector<Scalar>& coords);

/// The m-th compound matrix: entry (I, J) = det h[I, J] over m-subsets.
RationalMatrix compound_matrix(const RationalMatrix& h, int m);

/// a = c * b for some nonzero scalar c (both nonzero).
bool projectively_equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

}  // namespace invkit
