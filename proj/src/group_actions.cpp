#include "invkit/group_actions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace invkit {

// ---------------------------------------------------------------------------
// Finite groups

namespace {

std::string key(const RationalMatrix& g) { return g.to_string(); }

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<RationalMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("finite group: no elements");
  const std::size_t m = elements_.front().rows();
  const Field field = elements_.front().field();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& g = elements_[i];
    if (!g.is_square() || g.rows() != m) throw std::invalid_argument("finite group: elements must be m x m");
    if (!(g.field() == field)) throw std::invalid_argument("finite group: elements over different fields");
    if (!g.is_invertible()) throw std::invalid_argument("finite group: element " + std::to_string(i) + " is singular");
    if (!index.emplace(key(g), i).second) throw std::invalid_argument("finite group: repeated element");
  }
  if (!index.count(key(RationalMatrix::identity(m, field)))) throw std::invalid_argument("finite group: identity missing");
  for (const auto& g : elements_) {
    if (!index.count(key(g.inverse()))) throw std::invalid_argument("finite group: not closed under inverses");
    for (const auto& h : elements_)
      if (!index.count(key(g * h))) throw std::invalid_argument("finite group: not closed under multiplication");
  }
  if (field.prime != 0 && elements_.size() % field.prime == 0)
    throw std::invalid_argument("finite group: |G| = " + std::to_string(elements_.size()) + " is zero in " + field.name());
}

FiniteMatrixGroup FiniteMatrixGroup::generated_by(const std::vector<RationalMatrix>& generators, std::size_t max_order) {
  if (generators.empty()) throw std::invalid_argument("finite group: no generators");
  const std::size_t m = generators.front().rows();
  std::vector<RationalMatrix> elems{RationalMatrix::identity(m, generators.front().field())};
  std::map<std::string, bool> seen{{key(elems.front()), true}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      RationalMatrix h = elems[i] * s;
      if (seen.emplace(key(h), true).second) {
        elems.push_back(std::move(h));
        if (elems.size() > max_order) throw std::invalid_argument("finite group: generators span an infinite or too large group");
      }
    }
  }
  return FiniteMatrixGroup(std::move(elems));
}

// ---------------------------------------------------------------------------
// Classical groups

std::string to_string(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::Sl: return "Sl";
    case ClassicalKind::Sp: return "Sp";
    case ClassicalKind::O: return "O";
    case ClassicalKind::SO: return "SO";
  }
  return "?";
}

ClassicalKind parse_classical_kind(const std::string& s) {
  if (s == "Sl" || s == "SL") return ClassicalKind::Sl;
  if (s == "Sp") return ClassicalKind::Sp;
  if (s == "O") return ClassicalKind::O;
  if (s == "SO") return ClassicalKind::SO;
  throw std::invalid_argument("unknown classical group kind '" + s + "'");
}

ClassicalGroupSpec ClassicalGroupSpec::special_linear(int m) {
  ClassicalGroupSpec s{ClassicalKind::Sl, m, {}};
  s.validate();
  return s;
}

ClassicalGroupSpec ClassicalGroupSpec::symplectic(RationalMatrix form) {
  ClassicalGroupSpec s{ClassicalKind::Sp, static_cast<int>(form.rows()), std::move(form)};
  s.validate();
  return s;
}

ClassicalGroupSpec ClassicalGroupSpec::orthogonal(RationalMatrix form, bool special) {
  ClassicalGroupSpec s{special ? ClassicalKind::SO : ClassicalKind::O, static_cast<int>(form.rows()), std::move(form)};
  s.validate();
  return s;
}

ClassicalGroupSpec ClassicalGroupSpec::standard(ClassicalKind kind, int m) {
  if (m < 1) throw std::invalid_argument("classical group: m must be >= 1");
  switch (kind) {
    case ClassicalKind::Sl: return special_linear(m);
    case ClassicalKind::Sp: {
      if (m % 2) throw std::invalid_argument("Sp requires even m");
      RationalMatrix j(m, m);
      for (int i = 0; i < m / 2; ++i) {
        j(i, i + m / 2) = 1;
        j(i + m / 2, i) = -1;
      }
      return symplectic(std::move(j));
    }
    case ClassicalKind::O:
    case ClassicalKind::SO: return orthogonal(RationalMatrix::identity(m), kind == ClassicalKind::SO);
  }
  throw std::invalid_argument("classical group: bad kind");
}

void ClassicalGroupSpec::validate() const {
  if (m < 1) throw std::invalid_argument("classical group: m must be >= 1");
  if (kind == ClassicalKind::Sl) return;
  if (form.rows() != static_cast<std::size_t>(m) || !form.is_square())
    throw std::invalid_argument("classical group: form must be m x m");
  if (!form.is_invertible()) throw std::invalid_argument("classical group: form must be invertible");
  const RationalMatrix t = form.transpose();
  if (kind == ClassicalKind::Sp) {
    if (m % 2) throw std::invalid_argument("Sp requires even m");
    if (!(t == form.scaled(-1))) throw std::invalid_argument("Sp requires a skew-symmetric form");
    for (int i = 0; i < m; ++i)
      if (!form(i, i).is_zero()) throw std::invalid_argument("Sp requires a skew-symmetric form");
  } else {
    if (!(t == form)) throw std::invalid_argument(to_string(kind) + " requires a symmetric form");
    if (form.field().prime == 2) throw std::invalid_argument(to_string(kind) + " requires characteristic != 2");
  }
}

// ---------------------------------------------------------------------------
// Induced action

InducedAction::InducedAction(int m, int n, Field field) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("induced action: m and n must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("x[" + std::to_string(i) + "," + std::to_string(j) + "]");
  ring_ = PolynomialRing::standard(std::move(names), field);
}

std::vector<std::vector<Polynomial>> InducedAction::generic_matrix() const {
  std::vector<std::vector<Polynomial>> mat(m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) mat[i].push_back(x(i, j));
  return mat;
}

Polynomial act(const InducedAction& action, const RationalMatrix& g, const Polynomial& f) {
  const int m = action.m(), n = action.n();
  if (g.rows() != static_cast<std::size_t>(m) || g.cols() != static_cast<std::size_t>(m))
    throw std::invalid_argument("act: group element is not " + std::to_string(m) + " x " + std::to_string(m));
  if (!f.ring()->same_as(*action.ring())) throw std::invalid_argument("act: polynomial is not over the action's ring");
  const Field field = action.ring()->field();
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(m * n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (int k = 0; k < m; ++k) {
        if (g(k, i).is_zero()) continue;
        Monomial e(action.ring()->size(), 0);
        e[action.var(k, j)] = 1;
        terms.push_back(Term{std::move(e), g(k, i).in(field)});
      }
      images.emplace_back(action.ring(), std::move(terms));
    }
  return f.substitute(images);
}

Polynomial reynolds(const FiniteMatrixGroup& group, const InducedAction& action, const Polynomial& f) {
  const Field field = action.ring()->field();
  Scalar order = Scalar(static_cast<long>(group.order())).in(field);
  if (order.is_zero()) throw std::domain_error("reynolds: |G| is zero in " + field.name());
  Polynomial sum(action.ring());
  for (const auto& g : group.elements()) sum += act(action, g, f);
  return sum.scaled(order.inverse());
}

namespace {

// Index of the degree-d monomials of a ring.
struct MonomialIndex {
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> position;

  explicit MonomialIndex(std::vector<Monomial> ms) : monomials(std::move(ms)) {
    for (std::size_t i = 0; i < monomials.size(); ++i) position.emplace(monomials[i], i);
  }
  std::size_t at(const Monomial& e) const {
    auto it = position.find(e);
    if (it == position.end()) throw std::logic_error("monomial outside the indexed degree");
    return it->second;
  }
};

Polynomial combine(const RingPtr& ring, const std::vector<Monomial>& monos, const SparseVector& coeffs) {
  std::vector<Term> terms;
  terms.reserve(coeffs.size());
  for (const auto& [c, x] : coeffs) terms.push_back(Term{monos[c], x});
  return Polynomial(ring, std::move(terms)).normalized();
}

// Rows of a linear system given column images: column c maps to images[c].
EchelonBasis solve_rows(const std::vector<std::map<std::size_t, Scalar>>& rows, std::size_t cols, const Field& field) {
  EchelonBasis eb(cols, field);
  for (const auto& row : rows) {
    SparseVector v;
    for (const auto& [c, x] : row)
      if (!x.is_zero()) v.emplace_back(c, x);
    if (!v.empty()) eb.insert(v);
  }
  return eb;
}

}  // namespace

std::vector<Polynomial> fixed_space_basis(const FiniteMatrixGroup& group, const InducedAction& action, int d) {
  if (group.dimension() != static_cast<std::size_t>(action.m()))
    throw std::invalid_argument("fixed_space_basis: group dimension differs from m");
  const RingPtr& ring = action.ring();
  MonomialIndex idx(ring->monomials_of_degree(d));
  const std::size_t cols = idx.monomials.size();
  const RationalMatrix id = RationalMatrix::identity(group.dimension(), group.field());
  // row (g, output monomial) of act(g) - id
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> rows;
  for (std::size_t gi = 0; gi < group.order(); ++gi) {
    const auto& g = group.elements()[gi];
    if (g == id) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      Polynomial img = act(action, g, Polynomial::monomial(ring, idx.monomials[c]));
      img -= Polynomial::monomial(ring, idx.monomials[c]);
      for (const auto& t : img.terms()) {
        auto& entry = rows[{gi, idx.at(t.exponents)}][c];
        entry += t.coeff;
      }
    }
  }
  std::vector<std::map<std::size_t, Scalar>> flat;
  for (auto& [k, r] : rows) flat.push_back(std::move(r));
  EchelonBasis eb = solve_rows(flat, cols, ring->field());
  std::vector<Polynomial> basis;
  for (const auto& v : eb.kernel()) basis.push_back(combine(ring, idx.monomials, v));
  return basis;
}

std::vector<Scalar> reverse_characteristic_polynomial(const RationalMatrix& g) {
  // Faddeev-LeVerrier: det(lambda - g) = sum c_k lambda^(m-k); det(1 - t g) = sum c_k t^k.
  const std::size_t m = g.rows();
  if (!g.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  std::vector<Scalar> c(m + 1, Scalar(0).in(g.field()));
  c[0] = Scalar(1).in(g.field());
  RationalMatrix mk(m, m, g.field());
  const RationalMatrix id = RationalMatrix::identity(m, g.field());
  for (std::size_t k = 1; k <= m; ++k) {
    mk = g * mk + id.scaled(c[k - 1]);
    RationalMatrix gm = g * mk;
    Scalar tr = Scalar(0).in(g.field());
    for (std::size_t i = 0; i < m; ++i) tr += gm(i, i);
    c[k] = -tr / Scalar(static_cast<long>(k));
  }
  return c;
}

std::vector<mpz_class> molien_series(const FiniteMatrixGroup& group, int max_degree, int copies) {
  if (!group.field().is_rational()) throw std::domain_error("molien_series: requires characteristic 0");
  if (max_degree < 0 || copies < 1) throw std::invalid_argument("molien_series: bad degree or copy count");
  const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<mpq_class> total(len, 0);
  for (const auto& g : group.elements()) {
    std::vector<Scalar> p = reverse_characteristic_polynomial(g);
    // power series inverse of p (p[0] = 1)
    std::vector<mpq_class> inv(len, 0);
    inv[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
      mpq_class s = 0;
      for (std::size_t j = 1; j <= k && j < p.size(); ++j) s += p[j].value() * inv[k - j];
      inv[k] = -s;
    }
    std::vector<mpq_class> series(len, 0);
    series[0] = 1;
    for (int c = 0; c < copies; ++c) {
      std::vector<mpq_class> next(len, 0);
      for (std::size_t a = 0; a < len; ++a)
        for (std::size_t b = 0; a + b < len; ++b) next[a + b] += series[a] * inv[b];
      series = std::move(next);
    }
    for (std::size_t k = 0; k < len; ++k) total[k] += series[k];
  }
  std::vector<mpz_class> out;
  for (auto& t : total) {
    t /= static_cast<long>(group.order());
    t.canonicalize();
    if (t.get_den() != 1) throw std::logic_error("molien_series: non-integral coefficient");
    out.push_back(t.get_num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lie algebras

namespace {

Vector flatten(const RationalMatrix& x) {
  Vector v;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) v.push_back(x(i, j));
  return v;
}

RationalMatrix unflatten(const Vector& v, std::size_t m) {
  RationalMatrix x(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) x(i, j) = v[i * m + j];
  return x;
}

// Span of the Lie subalgebra generated by the given matrices.
EchelonBasis lie_closure(const std::vector<RationalMatrix>& gens, std::size_t m) {
  EchelonBasis span(m * m);
  std::vector<RationalMatrix> basis;
  for (const auto& g : gens)
    if (span.insert(to_sparse(flatten(g)))) basis.push_back(g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      RationalMatrix br = basis[i] * basis[j] - basis[j] * basis[i];
      if (span.insert(to_sparse(flatten(br)))) basis.push_back(br);
    }
  return span;
}

bool is_diagonal(const RationalMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (i != j && !x(i, j).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<RationalMatrix> lie_algebra_basis(const ClassicalGroupSpec& spec) {
  spec.validate();
  const std::size_t m = static_cast<std::size_t>(spec.m);
  std::vector<RationalMatrix> basis;
  if (spec.kind == ClassicalKind::Sl) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        RationalMatrix e(m, m);
        e(a, b) = 1;
        basis.push_back(std::move(e));
      }
    for (std::size_t a = 0; a + 1 < m; ++a) {
      RationalMatrix h(m, m);
      h(a, a) = 1;
      h(a + 1, a + 1) = -1;
      basis.push_back(std::move(h));
    }
    return basis;
  }
  // linear conditions X B + B X^T = 0 on the m^2 entries of X
  RationalMatrix conditions(m * m, m * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      RationalMatrix e(m, m);
      e(k, l) = 1;
      Vector img = flatten(e * spec.form + spec.form * e.transpose());
      for (std::size_t r = 0; r < m * m; ++r) conditions(r, k * m + l) = img[r];
    }
  for (const auto& v : conditions.nullspace()) basis.push_back(unflatten(v, m));
  return basis;
}

RationalMatrix orthogonal_reflection(const ClassicalGroupSpec& spec) {
  if (spec.kind != ClassicalKind::O && spec.kind != ClassicalKind::SO)
    throw std::invalid_argument("orthogonal_reflection: not an orthogonal group");
  const std::size_t m = static_cast<std::size_t>(spec.m);
  const RationalMatrix& b = spec.form;
  auto q = [&](const Vector& v) {
    Scalar s = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s += v[i] * b(i, j) * v[j];
    return s;
  };
  Vector v;
  for (std::size_t i = 0; i < m && v.empty(); ++i)
    for (std::size_t j = i; j < m && v.empty(); ++j) {
      Vector w(m, Scalar(0));
      w[i] = 1;
      if (j != i) w[j] = 1;
      if (!q(w).is_zero()) v = w;
    }
  if (v.empty()) throw std::logic_error("orthogonal_reflection: form has no anisotropic basis vector");
  // R = 1 - 2 v v^T B / q(v) preserves B on points; coordinates move by R^T.
  const Scalar scale = Scalar(2) / q(v);
  RationalMatrix r = RationalMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Scalar vb = 0;
      for (std::size_t k = 0; k < m; ++k) vb += v[k] * b(k, j);
      r(i, j) -= scale * v[i] * vb;
    }
  return r.transpose();
}

Polynomial apply_derivation(const InducedAction& action, const RationalMatrix& X, const Polynomial& f) {
  const int m = action.m(), n = action.n();
  const RingPtr& ring = action.ring();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        unsigned e = t.exponents[action.var(i, j)];
        if (e == 0) continue;
        for (int k = 0; k < m; ++k) {
          if (X(k, i).is_zero()) continue;
          Monomial out = t.exponents;
          --out[action.var(i, j)];
          ++out[action.var(k, j)];
          terms.push_back(Term{std::move(out), t.coeff * X(k, i) * Scalar(static_cast<long>(e))});
        }
      }
  }
  return Polynomial(ring, std::move(terms));
}

namespace {

struct InfinitesimalKernel {
  std::vector<Monomial> columns;
  std::vector<SparseVector> kernel;
};

InfinitesimalKernel lie_kernel(const ClassicalGroupSpec& spec, const InducedAction& action, int d) {
  if (!action.ring()->field().is_rational()) throw std::domain_error("infinitesimal invariants: requires characteristic 0");
  if (action.m() != spec.m) throw std::invalid_argument("infinitesimal invariants: group dimension differs from m");
  const std::size_t m = static_cast<std::size_t>(spec.m);
  const int n = action.n();
  std::vector<RationalMatrix> basis = lie_algebra_basis(spec);

  // Diagonal part of the algebra: its derivations act on monomials by the
  // scalar sum_i h_i * (row degree i), so its kernel is a set of monomials.
  RationalMatrix offdiag(m * m, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) offdiag(i * m + j, k) = basis[k](i, j);
  std::vector<RationalMatrix> diagonal;
  for (const auto& c : offdiag.nullspace()) {
    RationalMatrix h(m, m);
    for (std::size_t k = 0; k < basis.size(); ++k) h = h + basis[k].scaled(c[k]);
    diagonal.push_back(std::move(h));
  }

  // Generators: diagonal part plus enough basis elements to generate the algebra.
  std::vector<RationalMatrix> chosen;
  std::vector<RationalMatrix> gens = diagonal;
  for (const auto& x : basis) {
    if (lie_closure(gens, m).rank() == basis.size()) break;
    if (is_diagonal(x)) continue;
    EchelonBasis cl = lie_closure(gens, m);
    if (cl.contains(to_sparse(flatten(x)))) continue;
    gens.push_back(x);
    chosen.push_back(x);
  }

  InfinitesimalKernel out;
  for (auto& e : action.ring()->monomials_of_degree(d)) {
    bool weight_zero = true;
    for (const auto& h : diagonal) {
      Scalar w = 0;
      for (std::size_t i = 0; i < m; ++i) {
        long row = 0;
        for (int j = 0; j < n; ++j) row += e[action.var(static_cast<int>(i), j)];
        w += h(i, i) * Scalar(row);
      }
      if (!w.is_zero()) {
        weight_zero = false;
        break;
      }
    }
    if (weight_zero) out.columns.push_back(std::move(e));
  }
  const std::size_t cols = out.columns.size();
  std::map<std::pair<std::size_t, Monomial>, std::map<std::size_t, Scalar>> rows;
  for (std::size_t xi = 0; xi < chosen.size(); ++xi) {
    const RationalMatrix& X = chosen[xi];
    for (std::size_t c = 0; c < cols; ++c) {
      const Monomial& e = out.columns[c];
      for (std::size_t i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          unsigned ex = e[action.var(static_cast<int>(i), j)];
          if (ex == 0) continue;
          for (std::size_t k = 0; k < m; ++k) {
            if (X(k, i).is_zero()) continue;
            Monomial o = e;
            --o[action.var(static_cast<int>(i), j)];
            ++o[action.var(static_cast<int>(k), j)];
            rows[{xi, std::move(o)}][c] += X(k, i) * Scalar(static_cast<long>(ex));
          }
        }
    }
  }
  std::vector<std::map<std::size_t, Scalar>> flat;
  flat.reserve(rows.size());
  for (auto& [k, r] : rows) flat.push_back(std::move(r));
  out.kernel = solve_rows(flat, cols, Field{}).kernel();
  return out;
}

std::vector<Polynomial> reflection_fixed(const ClassicalGroupSpec& spec, const InducedAction& action,
                                         const std::vector<Polynomial>& candidates) {
  if (candidates.empty()) return {};
  const RationalMatrix s = orthogonal_reflection(spec);
  std::map<Monomial, std::map<std::size_t, Scalar>> rows;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    Polynomial diff = act(action, s, candidates[k]) - candidates[k];
    for (const auto& t : diff.terms()) rows[t.exponents][k] += t.coeff;
  }
  std::vector<std::map<std::size_t, Scalar>> flat;
  for (auto& [e, r] : rows) flat.push_back(std::move(r));
  EchelonBasis eb = solve_rows(flat, candidates.size(), Field{});
  std::vector<Polynomial> fixed;
  for (const auto& v : eb.kernel()) {
    Polynomial f(action.ring());
    for (const auto& [k, c] : v) f += candidates[k].scaled(c);
    fixed.push_back(f.normalized());
  }
  return fixed;
}

}  // namespace

std::vector<Polynomial> infinitesimal_invariant_basis(const ClassicalGroupSpec& spec, const InducedAction& action, int d) {
  InfinitesimalKernel k = lie_kernel(spec, action, d);
  std::vector<Polynomial> basis;
  for (const auto& v : k.kernel) basis.push_back(combine(action.ring(), k.columns, v));
  if (spec.kind == ClassicalKind::O) return reflection_fixed(spec, action, basis);
  return basis;
}

std::size_t infinitesimal_invariant_dimension(const ClassicalGroupSpec& spec, const InducedAction& action, int d) {
  if (spec.kind == ClassicalKind::O) return infinitesimal_invariant_basis(spec, action, d).size();
  return lie_kernel(spec, action, d).kernel.size();
}

}  // namespace invkit
