#include "invkit/embeddings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "invkit/classical.hpp"

namespace invkit {

std::vector<int> admissible_exponents(int t, int cap) {
  if (t < 1) throw std::invalid_argument("admissible_exponents: t must be >= 1");
  long l = 1;
  for (int i = 2; i <= t; ++i) l = std::lcm(l, static_cast<long>(i));
  std::set<int> out;
  for (long m = l; m * t <= cap; m += l)
    for (long n = t; n * m <= cap; ++n) out.insert(static_cast<int>(n * m));
  return {out.begin(), out.end()};
}

namespace {

Monomial add(Monomial a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Generator monomials representing the symmetric basis of degree e.
std::vector<Monomial> sym_representatives(const GradedPresentation& p, int t, int e) {
  auto pieces = low_pieces(p, std::min(t, e));
  std::vector<std::size_t> dims;
  for (const auto& a : pieces) dims.push_back(a.dimension());
  SymPiece sym(dims, t, e);
  std::vector<Monomial> out;
  for (const auto& s : sym.elements()) {
    Monomial m(p.ring()->size(), 0);
    for (const auto& f : s) m = add(std::move(m), pieces[static_cast<std::size_t>(f.degree)].basis_monomial(f.index));
    out.push_back(std::move(m));
  }
  return out;
}

EmbeddingChart build_chart(GradedPresentation target, int t, int e, int dmax, bool affine, std::vector<Monomial> reps) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < reps.size(); ++i) names.push_back("z" + std::to_string(i + 1));
  RingPtr zring = PolynomialRing::standard(names, target.field());
  EmbeddingChart chart{target, t, e, dmax, affine, zring, {}, {}};
  for (const auto& r : reps) chart.coordinates.push_back(Polynomial::monomial(target.ring(), r));

  for (int k = 1; k <= dmax; ++k) {
    const auto zmonos = zring->monomials_of_degree(k);
    // group z-monomials by their image monomial in the generator ring
    std::map<Monomial, std::size_t> image_index;
    std::vector<Monomial> images;
    std::vector<std::size_t> first_source;
    std::vector<std::size_t> image_of(zmonos.size());
    for (std::size_t z = 0; z < zmonos.size(); ++z) {
      Monomial img(target.ring()->size(), 0);
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (zmonos[z][i])
          for (std::size_t v = 0; v < img.size(); ++v) img[v] += zmonos[z][i] * reps[i][v];
      auto [it, fresh] = image_index.emplace(img, images.size());
      if (fresh) {
        images.push_back(std::move(img));
        first_source.push_back(z);
      }
      image_of[z] = it->second;
    }
    GradedPieceBasis piece(target, k * e);
    std::vector<SparseVector> rows(piece.dimension());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const auto& [r, x] : piece.monomial_coordinates(images[c])) rows[r].emplace_back(c, x);
    EchelonBasis eb(images.size(), target.field());
    for (const auto& row : rows)
      if (!row.empty()) eb.insert(row);
    for (const auto& v : eb.kernel()) {
      std::vector<Term> terms;
      for (const auto& [c, x] : v) terms.push_back(Term{zmonos[first_source[c]], x});
      chart.equations.push_back({k, Polynomial(zring, std::move(terms)).normalized()});
    }
    // coordinates products with equal images
    for (std::size_t z = 0; z < zmonos.size(); ++z) {
      std::size_t rep = first_source[image_of[z]];
      if (rep == z) continue;
      std::vector<Term> terms{Term{zmonos[rep], Scalar(1)}, Term{zmonos[z], Scalar(-1)}};
      chart.equations.push_back({k, Polynomial(zring, std::move(terms)).normalized()});
    }
  }
  return chart;
}

}  // namespace

VeroneseReport veronese_generation_check(const GradedPresentation& p, int t, int e, int N) {
  if (t < 1 || e < 1 || N < 1) throw std::invalid_argument("veronese_generation_check: t, e and N must be >= 1");
  VeroneseReport report{t, e, N, {}, true, {}};
  std::set<Monomial> base;
  for (auto& m : sym_representatives(p, t, e)) base.insert(std::move(m));
  std::set<Monomial> current = base;
  for (int n = 1; n <= N; ++n) {
    if (n > 1) {
      std::set<Monomial> next;
      for (const auto& a : current)
        for (const auto& b : base) next.insert(add(a, b));
      current = std::move(next);
    }
    GradedPieceBasis piece(p, n * e);
    EchelonBasis span(piece.dimension(), p.field());
    for (const auto& m : current) {
      if (span.rank() == piece.dimension()) break;
      auto v = piece.monomial_coordinates(m);
      if (!v.empty()) span.insert(v);
    }
    VeroneseLevel level{n, span.rank(), piece.dimension()};
    report.levels.push_back(level);
    if (!level.surjective()) {
      report.passed = false;
      report.failed_n = n;
      break;
    }
  }
  return report;
}

EmbeddingChart image_equations(const GradedPresentation& p, int t, int e, std::optional<int> dmax) {
  if (t < 1 || e < 1) throw std::invalid_argument("image_equations: t and e must be >= 1");
  const int k = dmax.value_or(std::max(t, 2));
  if (k < 1) throw std::invalid_argument("image_equations: dmax must be >= 1");
  return build_chart(p, t, e, k, false, sym_representatives(p, t, e));
}

EmbeddingChart spec_embedding_data(const GradedPresentation& p, int t, int e, std::optional<int> dmax) {
  if (t < 1 || e < 1) throw std::invalid_argument("spec_embedding_data: t and e must be >= 1");
  const int k = dmax.value_or(std::max(t + 1, 2));
  GradedPresentation line(PolynomialRing::make({"T"}, {1}, p.field()), {});
  GradedPresentation augmented = tensor_presentation(p, line);
  const std::size_t T = augmented.ring()->size() - 1;
  std::vector<Monomial> reps;
  for (int s = 0; s <= e; ++s)
    for (const auto& m : sym_representatives(p, t, s)) {
      Monomial r(augmented.ring()->size(), 0);
      std::copy(m.begin(), m.end(), r.begin());
      r[T] = static_cast<unsigned>(e - s);
      reps.push_back(std::move(r));
    }
  return build_chart(augmented, t, e, k, true, std::move(reps));
}

std::vector<std::size_t> EmbeddingChart::nonvanishing_equations() const {
  std::map<int, GradedPieceBasis> pieces;
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < equations.size(); ++i) {
    const auto& eq = equations[i];
    auto it = pieces.find(eq.degree);
    if (it == pieces.end()) it = pieces.emplace(eq.degree, GradedPieceBasis(presentation, eq.degree * e)).first;
    if (!it->second.in_ideal(eq.form.substitute(coordinates))) bad.push_back(i);
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Semistability and Plücker points

namespace {

void check_point(int m, int n, const RationalMatrix& point) {
  if (m < 1 || n < 1) throw std::invalid_argument("point: m and n must be >= 1");
  if (point.rows() != static_cast<std::size_t>(m) || point.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("point: expected a " + std::to_string(m) + " x " + std::to_string(n) + " matrix");
}

}  // namespace

SemistabilityReport semistable_test(int m, int n, const RationalMatrix& point) {
  check_point(m, n, point);
  SemistabilityReport r;
  r.m = m;
  r.n = n;
  r.point = point;
  r.rank = point.rank();
  auto table = fft_generators(ClassicalGroupSpec::special_linear(m), n, point.field());
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) values.push_back(point(i, j));
  std::vector<std::size_t> rows(static_cast<std::size_t>(m));
  std::iota(rows.begin(), rows.end(), 0);
  for (const auto& g : table.entries) {
    Scalar v = g.realization.evaluate(values);
    // the name d[j1,...,jm] carries the column set
    std::vector<int> J;
    std::vector<std::size_t> cols;
    std::size_t pos = 2;
    while (pos < g.name.size()) {
      std::size_t end = g.name.find_first_of(",]", pos);
      J.push_back(std::stoi(g.name.substr(pos, end - pos)));
      cols.push_back(static_cast<std::size_t>(J.back() - 1));
      pos = end + 1;
    }
    if (v != point.minor(rows, cols)) throw std::logic_error("semistable_test: minor evaluation disagrees with elimination");
    if (!v.is_zero()) r.witnesses.push_back(J);
    r.minors.push_back(v);
  }
  r.semistable = r.rank == static_cast<std::size_t>(m);
  r.consistent = r.semistable == !r.witnesses.empty();
  return r;
}

std::vector<Scalar> plucker_point(int m, int n, const RationalMatrix& point) {
  SemistabilityReport r = semistable_test(m, n, point);
  if (!r.semistable) throw std::domain_error("plucker_point: point is unstable (rank " + std::to_string(r.rank) + ")");
  return r.minors;
}

bool plucker_relations_vanish(int m, int n, const std::vector<Scalar>& coords) {
  auto table = fft_generators(ClassicalGroupSpec::special_linear(m), n);
  if (coords.size() != table.entries.size()) throw std::invalid_argument("plucker: wrong number of coordinates");
  for (const auto& rel : sft_relations(table))
    if (!rel.evaluate(coords).is_zero()) return false;
  return true;
}

RationalMatrix compound_matrix(const RationalMatrix& h, int m) {
  if (!h.is_square()) throw std::invalid_argument("compound_matrix: square matrix required");
  const int n = static_cast<int>(h.rows());
  if (m < 0 || m > n) throw std::invalid_argument("compound_matrix: bad order");
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> c(static_cast<std::size_t>(m));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    sets.push_back(c);
    int i = m - 1;
    while (i >= 0 && c[i] == static_cast<std::size_t>(n - m + i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
  }
  RationalMatrix out(sets.size(), sets.size(), h.field());
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) out(a, b) = h.minor(sets[a], sets[b]);
  return out;
}

bool projectively_equal(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  std::optional<Scalar> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    if (a[i].is_zero()) continue;
    Scalar r = a[i] / b[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return ratio.has_value();
}

}  // namespace invkit
