#pragma once

#include <string>
#include <vector>

#include "invkit/pgg.hpp"

namespace invkit::testing {

inline GradedPresentation free_algebra(std::vector<std::string> names, std::vector<int> weights) {
  return GradedPresentation(PolynomialRing::make(std::move(names), std::move(weights)), {});
}

inline GradedPresentation line() { return free_algebra({"x"}, {1}); }

inline GradedPresentation circle() {
  auto ring = PolynomialRing::make({"x", "y"});
  return GradedPresentation::parse(ring, {"x^2 + y^2"});
}

/// Homogeneous coordinate ring of Gr(2,4): six degree-2 minors and the Plücker quadric.
inline GradedPresentation grassmannian24() {
  auto ring = PolynomialRing::make({"d[1,2]", "d[1,3]", "d[1,4]", "d[2,3]", "d[2,4]", "d[3,4]"}, {2, 2, 2, 2, 2, 2});
  return GradedPresentation::parse(ring, {"d[1,2]*d[3,4] - d[1,3]*d[2,4] + d[1,4]*d[2,3]"});
}

/// Invariants of {+-I} on k^2: x^2, xy, y^2 with one degree-4 relation.
inline GradedPresentation sign_invariants() {
  auto ring = PolynomialRing::make({"a", "b", "c"}, {2, 2, 2});
  return GradedPresentation::parse(ring, {"b^2 - a*c"});
}

/// Invariants of O(1) on n vectors: pairings p[i,j] (degree 2) and the 2x2
/// minors of the symmetric matrix (p[i,j]).
inline GradedPresentation o1_invariants(int n) {
  std::vector<std::string> names;
  auto name = [](int i, int j) {
    if (i > j) std::swap(i, j);
    return "p[" + std::to_string(i) + "," + std::to_string(j) + "]";
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) names.push_back(name(i, j));
  auto ring = PolynomialRing::make(names, std::vector<int>(names.size(), 2));
  std::vector<std::string> rels;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int e = c + 1; e <= n; ++e)
          rels.push_back(name(a, c) + "*" + name(b, e) + " - " + name(a, e) + "*" + name(b, c));
  return GradedPresentation::parse(ring, rels);
}

}  // namespace invkit::testing
