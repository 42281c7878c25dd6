#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invkit/group_actions.hpp"
#include "invkit/pgg.hpp"

namespace invkit {

struct GeneratorEntry {
  std::string name;  // d[i1,...,im] or p[i,j]
  int degree = 0;
  Polynomial realization;  // in the x[i,j] ring
};

/// First Fundamental Theorem generators of a classical group on n copies of k^m.
struct GeneratorTable {
  ClassicalGroupSpec spec;
  int n = 0;
  InducedAction action;
  std::vector<GeneratorEntry> entries;

  /// Ring with one variable per entry, weighted by degree.
  RingPtr symbol_ring() const;
  /// Realizations in symbol_ring() order, for Polynomial::substitute.
  std::vector<Polynomial> realizations() const;
};

/// Sl: maximal minors d[J]. Sp: p[i,j], i < j. O: p[i,j], i <= j.
/// SO: the O pairings followed by the brackets d[J]. Empty for Sl with n < m.
GeneratorTable fft_generators(const ClassicalGroupSpec& spec, int n, Field field = {});

/// Second Fundamental Theorem relations over table.symbol_ring(): Plücker
/// relations (Sl), Pfaffians of (m+2)-principal submatrices (Sp), and
/// (m+1)-minors of the symmetric pairing matrix (O, SO). Normalized to a
/// positive integral leading coefficient and deduplicated.
std::vector<Polynomial> sft_relations(const GeneratorTable& table);
std::vector<Polynomial> sft_relations(const ClassicalGroupSpec& spec, int n);

struct ClassicalPresentation {
  GeneratorTable table;
  GradedPresentation presentation;
  /// 2m for Sl, m+2 for Sp, O and SO.
  int t_claimed = 0;
  /// 2(m+1), the degree of the minor relations (O and SO only).
  std::optional<int> t_ambient;
};

ClassicalPresentation build_presentation(const ClassicalGroupSpec& spec, int n, Field field = {});

struct VerificationCheck {
  std::string subject;  // generator name, relation text or "degree d"
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> invariance;  // (a)
  std::vector<VerificationCheck> relations;   // (b)
  struct DegreeDims {
    int d;
    std::size_t presentation;
    std::size_t invariants;
  };
  std::vector<DegreeDims> dimensions;  // (c)
  bool invariance_ok = true, relations_ok = true, dimensions_ok = true;

  bool passed() const { return invariance_ok && relations_ok && dimensions_ok; }
  /// Offending generators, relations and degrees.
  std::vector<std::string> failures() const;
};

/// (a) every generator is killed by the Lie algebra (and fixed by the
/// reflection for O); (b) every relation vanishes on the realizations;
/// (c) dim A_d equals the dimension of degree-d invariants for d <= D.
VerificationReport verify_presentation(const ClassicalPresentation& p, int D, unsigned threads = 1);
VerificationReport verify_presentation(const ClassicalGroupSpec& spec, int n, int D, unsigned threads = 1);

}  // namespace invkit
