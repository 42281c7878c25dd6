#include "invkit/classical.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "invkit/parallel.hpp"

namespace invkit {

namespace {

// k-subsets of {0..n-1}, ascending, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::string bracket_name(const std::vector<int>& cols) {
  std::string s = "d[";
  for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + std::to_string(cols[i] + 1);
  return s + "]";
}

std::string pairing_name(int i, int j) { return "p[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]"; }

// Determinant of a square matrix of polynomials by Laplace expansion along the first row.
Polynomial det(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t k = a.size();
  if (k == 0) return Polynomial::constant(ring, 1);
  if (k == 1) return a[0][0];
  Polynomial sum(ring);
  for (std::size_t c = 0; c < k; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(a[r][j]);
      sub.push_back(std::move(row));
    }
    Polynomial term = a[0][c] * det(sub, ring);
    if (c % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

// Pfaffian of a skew-symmetric matrix of even size.
Polynomial pfaffian(const std::vector<std::vector<Polynomial>>& a, const RingPtr& ring) {
  const std::size_t k = a.size();
  if (k == 0) return Polynomial::constant(ring, 1);
  Polynomial sum(ring);
  for (std::size_t j = 1; j < k; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::size_t> keep;
    for (std::size_t r = 1; r < k; ++r)
      if (r != j) keep.push_back(r);
    std::vector<std::vector<Polynomial>> sub;
    for (auto r : keep) {
      std::vector<Polynomial> row;
      for (auto c : keep) row.push_back(a[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = a[0][j] * pfaffian(sub, ring);
    if (j % 2) sum += term;
    else sum -= term;
  }
  return sum;
}

bool has_pairings(ClassicalKind k) { return k != ClassicalKind::Sl; }
bool has_brackets(ClassicalKind k) { return k == ClassicalKind::Sl || k == ClassicalKind::SO; }

}  // namespace

RingPtr GeneratorTable::symbol_ring() const {
  std::vector<std::string> names;
  std::vector<int> weights;
  for (const auto& e : entries) {
    names.push_back(e.name);
    weights.push_back(e.degree);
  }
  return PolynomialRing::make(std::move(names), std::move(weights), action.ring()->field());
}

std::vector<Polynomial> GeneratorTable::realizations() const {
  std::vector<Polynomial> out;
  for (const auto& e : entries) out.push_back(e.realization);
  return out;
}

GeneratorTable fft_generators(const ClassicalGroupSpec& spec, int n, Field field) {
  spec.validate();
  if (n < 1) throw std::invalid_argument("fft_generators: n must be >= 1");
  const int m = spec.m;
  GeneratorTable table{spec, n, InducedAction(m, n, field), {}};
  const InducedAction& a = table.action;
  const RingPtr& ring = a.ring();

  if (has_pairings(spec.kind)) {
    const bool strict = spec.kind == ClassicalKind::Sp;
    for (int i = 0; i < n; ++i)
      for (int j = strict ? i + 1 : i; j < n; ++j) {
        Polynomial p(ring);
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c)
            if (!spec.form(r, c).is_zero()) p += (a.x(r, i) * a.x(c, j)).scaled(spec.form(r, c).in(ring->field()));
        table.entries.push_back({pairing_name(i, j), 2, std::move(p)});
      }
  }
  if (has_brackets(spec.kind)) {
    for (const auto& cols : subsets(n, m)) {
      std::vector<std::vector<Polynomial>> block(static_cast<std::size_t>(m));
      for (int r = 0; r < m; ++r)
        for (int c : cols) block[r].push_back(a.x(r, c));
      table.entries.push_back({bracket_name(cols), m, det(block, ring)});
    }
  }
  return table;
}

namespace {

void add_normalized(std::vector<Polynomial>& out, std::set<std::string>& seen, const Polynomial& f) {
  if (f.is_zero()) return;
  Polynomial g = f.normalized();
  if (seen.insert(g.to_string()).second) out.push_back(std::move(g));
}

std::vector<Polynomial> plucker_relations(const GeneratorTable& t, const RingPtr& ring) {
  const int m = t.spec.m, n = t.n;
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  if (n < m + 1 || m < 1) return out;
  // d of an arbitrary index tuple: sorted with sign, zero on repeats
  auto bracket = [&](std::vector<int> idx) {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return Polynomial(ring);
    Polynomial v = Polynomial::variable(ring, bracket_name(idx));
    return sign > 0 ? v : -v;
  };
  for (const auto& J : subsets(n, m - 1))
    for (const auto& K : subsets(n, m + 1)) {
      Polynomial rel(ring);
      for (int u = 0; u <= m; ++u) {
        std::vector<int> left = J;
        left.push_back(K[u]);
        std::vector<int> right;
        for (int v = 0; v <= m; ++v)
          if (v != u) right.push_back(K[v]);
        Polynomial term = bracket(left) * bracket(right);
        // (-1)^u with u counted from 1
        if (u % 2 == 0) rel -= term;
        else rel += term;
      }
      add_normalized(out, seen, rel);
    }
  return out;
}

Polynomial pairing_symbol(const RingPtr& ring, int i, int j, bool skew) {
  if (i == j) return skew ? Polynomial(ring) : Polynomial::variable(ring, pairing_name(i, i));
  if (i < j) return Polynomial::variable(ring, pairing_name(i, j));
  Polynomial v = Polynomial::variable(ring, pairing_name(j, i));
  return skew ? -v : v;
}

std::vector<Polynomial> pfaffian_relations(const GeneratorTable& t, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (const auto& idx : subsets(t.n, t.spec.m + 2)) {
    std::vector<std::vector<Polynomial>> a;
    for (int r : idx) {
      std::vector<Polynomial> row;
      for (int c : idx) row.push_back(pairing_symbol(ring, r, c, true));
      a.push_back(std::move(row));
    }
    add_normalized(out, seen, pfaffian(a, ring));
  }
  return out;
}

std::vector<Polynomial> minor_relations(const GeneratorTable& t, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  auto idx = subsets(t.n, t.spec.m + 1);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b) {  // minor(R,C) = minor(C,R)
      std::vector<std::vector<Polynomial>> mat;
      for (int r : idx[a]) {
        std::vector<Polynomial> row;
        for (int c : idx[b]) row.push_back(pairing_symbol(ring, r, c, false));
        mat.push_back(std::move(row));
      }
      add_normalized(out, seen, det(mat, ring));
    }
  return out;
}

}  // namespace

std::vector<Polynomial> sft_relations(const GeneratorTable& table) {
  RingPtr ring = table.symbol_ring();
  switch (table.spec.kind) {
    case ClassicalKind::Sl: return plucker_relations(table, ring);
    case ClassicalKind::Sp: return pfaffian_relations(table, ring);
    case ClassicalKind::O:
    case ClassicalKind::SO: return minor_relations(table, ring);
  }
  return {};
}

std::vector<Polynomial> sft_relations(const ClassicalGroupSpec& spec, int n) { return sft_relations(fft_generators(spec, n)); }

ClassicalPresentation build_presentation(const ClassicalGroupSpec& spec, int n, Field field) {
  GeneratorTable table = fft_generators(spec, n, field);
  RingPtr ring = table.symbol_ring();
  std::vector<Polynomial> rels;
  for (const auto& r : sft_relations(table)) rels.push_back(r.rename_into(ring));
  const int m = spec.m;
  int claimed = spec.kind == ClassicalKind::Sl ? 2 * m : m + 2;
  std::optional<int> ambient;
  if (spec.kind == ClassicalKind::O || spec.kind == ClassicalKind::SO) ambient = 2 * (m + 1);
  GradedPresentation pres(ring, std::move(rels), claimed);
  return ClassicalPresentation{std::move(table), std::move(pres), claimed, ambient};
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : invariance)
    if (!c.passed) out.push_back("generator " + c.subject + " is not invariant: " + c.detail);
  for (const auto& c : relations)
    if (!c.passed) out.push_back("relation " + c.subject + " does not vanish");
  for (const auto& d : dimensions)
    if (d.presentation != d.invariants)
      out.push_back("degree " + std::to_string(d.d) + ": presentation dimension " + std::to_string(d.presentation) +
                    " != invariant dimension " + std::to_string(d.invariants));
  return out;
}

VerificationReport verify_presentation(const ClassicalPresentation& p, int D, unsigned threads) {
  if (!p.presentation.field().is_rational()) throw std::domain_error("verify_presentation: requires characteristic 0");
  if (D < 0) throw std::invalid_argument("verify_presentation: negative degree bound");
  const GeneratorTable& t = p.table;
  VerificationReport report;

  const auto lie = lie_algebra_basis(t.spec);
  std::optional<RationalMatrix> reflection;
  if (t.spec.kind == ClassicalKind::O) reflection = orthogonal_reflection(t.spec);
  for (const auto& e : t.entries) {
    VerificationCheck c{e.name, true, ""};
    if (!e.realization.is_homogeneous() || e.realization.degree() != e.degree) {
      c.passed = false;
      c.detail = "realization is not homogeneous of degree " + std::to_string(e.degree);
    }
    for (std::size_t k = 0; k < lie.size() && c.passed; ++k)
      if (!apply_derivation(t.action, lie[k], e.realization).is_zero()) {
        c.passed = false;
        c.detail = "Lie algebra basis element " + std::to_string(k) + " acts nontrivially";
      }
    if (c.passed && reflection && !(act(t.action, *reflection, e.realization) == e.realization)) {
      c.passed = false;
      c.detail = "not fixed by the reflection";
    }
    report.invariance_ok = report.invariance_ok && c.passed;
    report.invariance.push_back(std::move(c));
  }

  const auto images = t.realizations();
  for (const auto& r : p.presentation.relations()) {
    VerificationCheck c{r.to_string(), r.substitute(images).is_zero(), ""};
    report.relations_ok = report.relations_ok && c.passed;
    report.relations.push_back(std::move(c));
  }

  report.dimensions.resize(static_cast<std::size_t>(D) + 1);
  parallel_for(report.dimensions.size(), threads, [&](std::size_t d) {
    const int deg = static_cast<int>(d);
    report.dimensions[d] = {deg, algebra_piece(p.presentation, deg).dimension(),
                            infinitesimal_invariant_dimension(t.spec, t.action, deg)};
  });
  for (const auto& d : report.dimensions) report.dimensions_ok = report.dimensions_ok && d.presentation == d.invariants;
  return report;
}

VerificationReport verify_presentation(const ClassicalGroupSpec& spec, int n, int D, unsigned threads) {
  return verify_presentation(build_presentation(spec, n), D, threads);
}

}  // namespace invkit
