#include "invkit/pgg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "invkit/parallel.hpp"

namespace invkit {

// ---------------------------------------------------------------------------
// Presentations

GradedPresentation::GradedPresentation(RingPtr ring, std::vector<Polynomial> relations, std::optional<int> t_bound)
    : ring_(std::move(ring)), t_bound_(t_bound) {
  if (!ring_) throw std::invalid_argument("presentation: missing ring");
  if (t_bound_ && *t_bound_ < 1) throw std::invalid_argument("presentation: t bound must be >= 1");
  for (auto& r : relations) {
    if (!r.ring()->same_as(*ring_)) throw std::invalid_argument("presentation: relation over a different ring");
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw std::invalid_argument("presentation: relation " + r.to_string() + " is not homogeneous");
    if (r.degree() == 0) throw std::invalid_argument("presentation: constant relation makes A_0 vanish");
    relations_.push_back(std::move(r));
  }
}

GradedPresentation GradedPresentation::parse(RingPtr ring, const std::vector<std::string>& relations,
                                             std::optional<int> t_bound) {
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(Polynomial::parse(ring, r));
  return GradedPresentation(std::move(ring), std::move(rels), t_bound);
}

int GradedPresentation::generator_degree() const {
  int d = 0;
  for (int w : ring_->weights()) d = std::max(d, w);
  return d;
}

int GradedPresentation::relation_degree() const {
  int d = 0;
  for (const auto& r : relations_) d = std::max(d, r.degree());
  return d;
}

int GradedPresentation::t_bound() const {
  if (t_bound_) return *t_bound_;
  return std::max({generator_degree(), relation_degree(), 1});
}

// ---------------------------------------------------------------------------
// Graded pieces

GradedPieceBasis::GradedPieceBasis(const GradedPresentation& p, int d, int max_relation_degree)
    : ring_(p.ring()), degree_(d), monomials_(d >= 0 ? p.ring()->monomials_of_degree(d) : std::vector<Monomial>{}),
      ideal_(monomials_.size(), p.field()) {
  if (d < 0) throw std::invalid_argument("graded piece: negative degree");
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  for (const auto& r : p.relations()) {
    const int e = r.degree();
    if (e > d || (max_relation_degree >= 0 && e > max_relation_degree)) continue;
    for (const auto& m : ring_->monomials_of_degree(d - e)) {
      SparseVector row;
      row.reserve(r.size());
      for (const auto& t : r.terms()) {
        Monomial prod = t.exponents;
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += m[i];
        row.emplace_back(index_.at(prod), t.coeff);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ideal_.insert(row);
      if (ideal_.rank() == monomials_.size()) break;
    }
  }
  basis_ = ideal_.free_columns();
  basis_slot_.assign(monomials_.size(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < basis_.size(); ++k) basis_slot_[basis_[k]] = k;
}

SparseVector GradedPieceBasis::coordinates(const Polynomial& f) const {
  if (!f.ring()->same_as(*ring_)) throw std::invalid_argument("graded piece: polynomial over a different ring");
  SparseVector v;
  for (const auto& t : f.terms()) {
    auto it = index_.find(t.exponents);
    if (it == index_.end()) throw std::invalid_argument("graded piece: term of wrong degree in " + f.to_string());
    v.emplace_back(it->second, t.coeff);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector r = ideal_.reduce(v);
  for (auto& [c, x] : r) c = basis_slot_[c];
  return r;
}

SparseVector GradedPieceBasis::monomial_coordinates(const Monomial& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw std::invalid_argument("graded piece: monomial of wrong degree");
  if (basis_slot_[it->second] != static_cast<std::size_t>(-1))
    return {{basis_slot_[it->second], Scalar(1).in(ideal_.field())}};
  SparseVector r = ideal_.reduce({{it->second, Scalar(1).in(ideal_.field())}});
  for (auto& [c, x] : r) c = basis_slot_[c];
  return r;
}

Polynomial GradedPieceBasis::representative(const SparseVector& coords) const {
  std::vector<Term> terms;
  for (const auto& [k, x] : coords) terms.push_back(Term{monomials_[basis_.at(k)], x});
  return Polynomial(ring_, std::move(terms));
}

GradedPieceBasis algebra_piece(const GradedPresentation& p, int d) { return GradedPieceBasis(p, d); }

std::vector<GradedPieceBasis> low_pieces(const GradedPresentation& p, int t) {
  std::vector<GradedPieceBasis> pieces;
  for (int i = 0; i <= t; ++i) pieces.emplace_back(p, i);
  return pieces;
}

// ---------------------------------------------------------------------------
// Symmetric algebra on A_1 + ... + A_t

SymPiece::SymPiece(const std::vector<std::size_t>& piece_dims, int t, int d) : degree_(d) {
  if (t < 1) throw std::invalid_argument("sym piece: t must be >= 1");
  if (d < 0) throw std::invalid_argument("sym piece: negative degree");
  const int top = std::min<int>(t, static_cast<int>(piece_dims.size()) - 1);
  // Choose factors in nondecreasing (degree, index) order.
  SymElement current;
  std::function<void(int, int, std::size_t)> extend = [&](int remaining, int deg, std::size_t idx) {
    if (remaining == 0) {
      index_.emplace(current, elements_.size());
      elements_.push_back(current);
      return;
    }
    for (int i = deg; i <= std::min(top, remaining); ++i) {
      const std::size_t dim = piece_dims[static_cast<std::size_t>(i)];
      for (std::size_t k = (i == deg ? idx : 0); k < dim; ++k) {
        current.push_back({i, k});
        extend(remaining - i, i, k);
        current.pop_back();
      }
    }
  };
  extend(d, 1, 0);
}

std::size_t SymPiece::index(const SymElement& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw std::out_of_range("sym piece: element not in this degree");
  return it->second;
}

mpz_class sym_dimension_formula(const std::vector<std::size_t>& piece_dims, int t, int d) {
  const int top = std::min<int>(t, static_cast<int>(piece_dims.size()) - 1);
  // count[k] = dimension in norm k using the pieces processed so far
  std::vector<mpz_class> count(static_cast<std::size_t>(d) + 1, 0);
  count[0] = 1;
  for (int i = 1; i <= top; ++i) {
    const unsigned long dim = piece_dims[static_cast<std::size_t>(i)];
    std::vector<mpz_class> next(count.size(), 0);
    for (int k = 0; k <= d; ++k) {
      if (count[k] == 0) continue;
      for (int di = 0; k + i * di <= d; ++di) {
        mpz_class c;
        if (dim == 0) {
          c = di == 0 ? 1 : 0;
        } else {
          mpz_bin_uiui(c.get_mpz_t(), dim + static_cast<unsigned long>(di) - 1, static_cast<unsigned long>(di));
        }
        next[k + i * di] += count[k] * c;
      }
    }
    count = std::move(next);
  }
  return count[d];
}

SymPiece sym_truncated_piece(const GradedPresentation& p, int t, int d) {
  std::vector<std::size_t> dims;
  for (const auto& a : low_pieces(p, std::min(t, d))) dims.push_back(a.dimension());
  return SymPiece(dims, t, d);
}

namespace {

Monomial product_monomial(const SymElement& s, const std::vector<GradedPieceBasis>& pieces, std::size_t nvars) {
  Monomial e(nvars, 0);
  for (const auto& f : s) {
    const Monomial& m = pieces[static_cast<std::size_t>(f.degree)].basis_monomial(f.index);
    for (std::size_t i = 0; i < nvars; ++i) e[i] += m[i];
  }
  return e;
}

}  // namespace

RationalMatrix mult_map(const GradedPresentation& p, int t, int d) {
  auto pieces = low_pieces(p, std::min(t, d));
  std::vector<std::size_t> dims;
  for (const auto& a : pieces) dims.push_back(a.dimension());
  SymPiece sym(dims, t, d);
  GradedPieceBasis target(p, d);
  RationalMatrix mu(target.dimension(), sym.dimension(), p.field());
  for (std::size_t c = 0; c < sym.dimension(); ++c)
    for (const auto& [r, x] : target.monomial_coordinates(product_monomial(sym.elements()[c], pieces, p.ring()->size())))
      mu(r, c) = x;
  return mu;
}

// ---------------------------------------------------------------------------
// Certificates

std::string PggCertificate::verdict() const {
  if (certified) return "certified-up-to-" + std::to_string(D);
  return "refuted-at-degree-" + std::to_string(failed_degree.value_or(-1));
}

namespace {

void finish(PggCertificate& cert) {
  cert.certified = true;
  for (std::size_t k = 0; k < cert.degrees.size(); ++k) {
    const auto& r = cert.degrees[k];
    if (r.surjective && r.kernel_generated) continue;
    cert.certified = false;
    cert.failed_degree = r.d;
    cert.failed_condition = r.surjective ? "kernel generation" : "surjectivity";
    cert.degrees.resize(k + 1);
    break;
  }
}

// Valid when every generator has degree <= t: then S^*(A_<=t) modulo its
// degree <= t kernel is k[g]/(relations of degree <= t), so the kernel of mu_d
// is generated from low degrees iff those relations already span I_d.
PggCertificate check_presentation_route(const GradedPresentation& p, int t, int D, unsigned threads) {
  PggCertificate cert;
  cert.t = t;
  cert.D = D;
  cert.route = PggRoute::Presentation;
  std::vector<PggDegreeRecord> records(static_cast<std::size_t>(D) + 1);
  std::vector<std::size_t> dims(static_cast<std::size_t>(D) + 1), low_dims(dims.size());
  parallel_for(dims.size(), threads, [&](std::size_t d) {
    dims[d] = GradedPieceBasis(p, static_cast<int>(d)).dimension();
    low_dims[d] = static_cast<int>(d) <= t ? dims[d] : GradedPieceBasis(p, static_cast<int>(d), t).dimension();
  });
  for (int d = 0; d <= D; ++d) {
    auto& r = records[static_cast<std::size_t>(d)];
    r.d = d;
    mpz_class sym = sym_dimension_formula(std::vector<std::size_t>(dims.begin(), dims.begin() + std::min(t, d) + 1), t, d);
    if (!sym.fits_ulong_p()) throw std::overflow_error("pgg: symmetric piece too large");
    r.dim_sym = sym.get_ui();
    r.dim_A = dims[static_cast<std::size_t>(d)];
    r.rank_mu = r.dim_A;
    r.surjective = true;
    r.dim_kernel = r.dim_sym - r.dim_A;
    r.dim_generated = r.dim_sym - low_dims[static_cast<std::size_t>(d)];
    r.kernel_generated = low_dims[static_cast<std::size_t>(d)] == r.dim_A;
  }
  cert.degrees = std::move(records);
  finish(cert);
  return cert;
}

PggCertificate check_literal_route(const GradedPresentation& p, int t, int D) {
  PggCertificate cert;
  cert.t = t;
  cert.D = D;
  cert.route = PggRoute::Literal;
  const int top = std::min(t, D);
  std::vector<GradedPieceBasis> pieces = low_pieces(p, D);
  std::vector<std::size_t> dims;
  for (int i = 0; i <= top; ++i) dims.push_back(pieces[static_cast<std::size_t>(i)].dimension());
  const Field field = p.field();

  std::vector<SymPiece> syms;
  // spanning vectors of J_d, the part of the kernel generated in degrees <= t
  std::vector<std::vector<SparseVector>> generated;
  for (int d = 0; d <= D; ++d) {
    PggDegreeRecord r;
    r.d = d;
    syms.emplace_back(dims, t, d);
    const SymPiece& sym = syms.back();
    const GradedPieceBasis& target = pieces[static_cast<std::size_t>(d)];
    r.dim_sym = sym.dimension();
    r.dim_A = target.dimension();

    // rows of mu_d, one per A_d basis element
    std::vector<SparseVector> rows(target.dimension());
    for (std::size_t c = 0; c < sym.dimension(); ++c)
      for (const auto& [k, x] : target.monomial_coordinates(product_monomial(sym.elements()[c], pieces, p.ring()->size())))
        rows[k].emplace_back(c, x);
    EchelonBasis mu(sym.dimension(), field);
    for (const auto& row : rows)
      if (!row.empty()) mu.insert(row);
    r.rank_mu = mu.rank();
    r.surjective = r.rank_mu == r.dim_A;
    std::vector<SparseVector> kernel = mu.kernel();
    r.dim_kernel = kernel.size();

    std::vector<SparseVector> span;
    if (d <= t) {
      span = std::move(kernel);
    } else {
      EchelonBasis j(sym.dimension(), field);
      for (int i = 1; i <= top && j.rank() < r.dim_kernel; ++i) {
        const SymPiece& lower = syms[static_cast<std::size_t>(d - i)];
        for (const auto& v : generated[static_cast<std::size_t>(d - i)]) {
          for (std::size_t b = 0; b < dims[static_cast<std::size_t>(i)] && j.rank() < r.dim_kernel; ++b) {
            SparseVector w;
            w.reserve(v.size());
            for (const auto& [c, x] : v) {
              SymElement s = lower.elements()[c];
              s.insert(std::upper_bound(s.begin(), s.end(), SymFactor{i, b}), SymFactor{i, b});
              w.emplace_back(sym.index(s), x);
            }
            std::sort(w.begin(), w.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
            if (j.insert(w)) span.push_back(std::move(w));
          }
          if (j.rank() == r.dim_kernel) break;
        }
      }
    }
    r.dim_generated = span.size();
    r.kernel_generated = r.dim_generated == r.dim_kernel;
    generated.push_back(std::move(span));
    cert.degrees.push_back(r);
    if (!r.surjective || !r.kernel_generated) break;
  }
  finish(cert);
  return cert;
}

}  // namespace

PggCertificate check_tpgg(const GradedPresentation& p, int t, int D, const PggOptions& options) {
  if (t < 1) throw std::invalid_argument("check_tpgg: t must be >= 1");
  if (D < t) throw std::invalid_argument("check_tpgg: D must be >= t");
  const bool low_generators = p.generator_degree() <= t;
  switch (options.route) {
    case PggRoute::Presentation:
      if (!low_generators) throw std::invalid_argument("check_tpgg: presentation route needs generator degrees <= t");
      return check_presentation_route(p, t, D, options.threads);
    case PggRoute::Literal: return check_literal_route(p, t, D);
    case PggRoute::Automatic:
      return low_generators ? check_presentation_route(p, t, D, options.threads) : check_literal_route(p, t, D);
  }
  throw std::invalid_argument("check_tpgg: bad route");
}

MinPggResult min_tpgg(const GradedPresentation& p, int D, const PggOptions& options) {
  if (D < 1) throw std::invalid_argument("min_tpgg: D must be >= 1");
  MinPggResult out;
  for (int t = 1; t <= D; ++t) {
    out.certificate = check_tpgg(p, t, D, options);
    if (out.certificate.certified) {
      out.t_min = t;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

GradedPresentation tensor_presentation(const GradedPresentation& p, const GradedPresentation& q) {
  if (!(p.field() == q.field())) throw std::invalid_argument("tensor: presentations over different fields");
  std::vector<std::string> names = p.ring()->names();
  std::vector<int> weights = p.ring()->weights();
  std::vector<std::string> taken = names;
  auto clash = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
  for (std::size_t i = 0; i < q.ring()->size(); ++i) {
    std::string n = q.ring()->name(i);
    while (clash(n)) n += "_2";
    taken.push_back(n);
    names.push_back(n);
    weights.push_back(q.ring()->weight(i));
  }
  RingPtr ring = PolynomialRing::make(names, weights, p.field());
  const std::size_t offset = p.ring()->size();
  std::vector<Polynomial> rels;
  auto embed = [&](const Polynomial& f, std::size_t shift) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial e(ring->size(), 0);
      for (std::size_t i = 0; i < t.exponents.size(); ++i) e[i + shift] = t.exponents[i];
      terms.push_back(Term{std::move(e), t.coeff});
    }
    return Polynomial(ring, std::move(terms));
  };
  for (const auto& r : p.relations()) rels.push_back(embed(r, 0));
  for (const auto& r : q.relations()) rels.push_back(embed(r, offset));
  return GradedPresentation(ring, std::move(rels), p.t_bound() + q.t_bound());
}

GradedPresentation quotient_presentation(const GradedPresentation& p, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> rels = p.relations();
  int bound = p.t_bound();
  for (const auto& f : extra) {
    if (!f.ring()->same_as(*p.ring())) throw std::invalid_argument("quotient: relation over a different ring");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("quotient: " + f.to_string() + " is not homogeneous");
    bound = std::max(bound, f.degree());
    rels.push_back(f);
  }
  if (extra.empty()) return p;
  return GradedPresentation(p.ring(), std::move(rels), bound);
}

}  // namespace invkit
