#include "invkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace invkit {

// ---------------------------------------------------------------------------
// PolynomialRing

RingPtr PolynomialRing::make(std::vector<std::string> names, std::vector<int> weights, Field field) {
  if (names.size() != weights.size()) throw std::invalid_argument("ring: one weight per variable required");
  auto ring = std::shared_ptr<PolynomialRing>(new PolynomialRing());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw std::invalid_argument("ring: empty variable name");
    if (weights[i] < 1) throw std::invalid_argument("ring: weight of '" + names[i] + "' must be >= 1");
    if (!ring->index_.emplace(names[i], i).second)
      throw std::invalid_argument("ring: duplicate variable '" + names[i] + "'");
  }
  ring->names_ = std::move(names);
  ring->weights_ = std::move(weights);
  ring->field_ = field;
  return ring;
}

RingPtr PolynomialRing::standard(std::vector<std::string> names, Field field) {
  std::vector<int> w(names.size(), 1);
  return make(std::move(names), std::move(w), field);
}

std::size_t PolynomialRing::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::out_of_range("unknown variable '" + std::string(name) + "'");
  return it->second;
}

bool PolynomialRing::contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

int PolynomialRing::degree(const Monomial& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += weights_[i] * static_cast<int>(e[i]);
  return d;
}

int PolynomialRing::compare(const Monomial& a, const Monomial& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<Monomial> PolynomialRing::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(size(), 0);
  // Lexicographically largest first: give the first variable as much as possible.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int k = left / weights_[i]; k >= 0; --k) {
      cur[i] = static_cast<unsigned>(k);
      self(self, i + 1, left - k * weights_[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

bool PolynomialRing::same_as(const PolynomialRing& o) const {
  return this == &o || (names_ == o.names_ && weights_ == o.weights_ && field_ == o.field_);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
  for (auto& t : terms_) {
    if (t.exponents.size() != ring_->size()) throw std::invalid_argument("exponent vector length mismatch");
    t.coeff = t.coeff.in(ring_->field());
  }
  canonicalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Monomial one(ring->size(), 0);
  return Polynomial(ring, {Term{std::move(one), c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  Monomial e(ring->size(), 0);
  e[index] = 1;
  return Polynomial(ring, {Term{std::move(e), Scalar(1)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  std::size_t i = ring->index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial e, const Scalar& c) {
  return Polynomial(std::move(ring), {Term{std::move(e), c}});
}

void Polynomial::canonicalize() {
  const PolynomialRing& r = *ring_;
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.exponents, b.exponents) > 0; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

void Polynomial::check_ring(const Polynomial& o, const char* op) const {
  if (!ring_->same_as(*o.ring_))
    throw std::invalid_argument(std::string("polynomial ") + op + ": operands belong to different rings");
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.exponents));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = ring_->degree(terms_.front().exponents);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return ring_->degree(t.exponents) == d; });
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (ring_->degree(t.exponents) == d) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o, "add");
  const PolynomialRing& r = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = r.compare(terms_[i].exponents, o.terms_[j].exponents);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(terms_[i].exponents), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b, "multiply");
  std::map<Monomial, Scalar> acc;
  Monomial e(a.ring_->size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = s.exponents[k] + t.exponents[k];
      auto [it, fresh] = acc.try_emplace(e, s.coeff * t.coeff);
      if (!fresh) it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (!c.is_zero()) terms.push_back(Term{mono, c});
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Scalar Polynomial::coefficient(const Monomial& e) const {
  for (const auto& t : terms_)
    if (t.exponents == e) return t.coeff;
  return Scalar(0).in(ring_->field());
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("evaluate: point has wrong dimension");
  Scalar total = Scalar(0).in(ring_->field());
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.exponents[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->size()) throw std::invalid_argument("substitute: one image per variable required");
  if (images.empty()) return *this;
  RingPtr target = images.front().ring();
  for (const auto& im : images)
    if (!im.ring()->same_as(*target)) throw std::invalid_argument("substitute: images in different rings");
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(target, 1));
    while (p.size() <= k) p.push_back(p.back() * images[i]);
    return p[k];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      if (t.exponents[i] > 0) prod *= power(i, t.exponents[i]);
    result += prod;
  }
  return result;
}

Polynomial Polynomial::rename_into(RingPtr target) const {
  if (target->same_as(*ring_)) return Polynomial(target, terms_);
  std::vector<std::size_t> map(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->contains(ring_->name(i)) ? target->index(ring_->name(i)) : SIZE_MAX;
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Monomial e(target->size(), 0);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (map[i] == SIZE_MAX) throw std::invalid_argument("rename: variable '" + ring_->name(i) + "' missing in target ring");
      e[map[i]] = t.exponents[i];
    }
    terms.push_back(Term{std::move(e), t.coeff});
  }
  return Polynomial(std::move(target), std::move(terms));
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  if (!ring_->field().is_rational()) return scaled(leading_term().coeff.inverse());
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& t : terms_) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.value().get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), t.coeff.value().get_num_mpz_t());
  }
  mpq_class factor(lcm_den, gcd_num);
  if (leading_term().coeff.sign() < 0) factor = -factor;
  return scaled(Scalar(factor));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff.sign() < 0;
    mpq_class mag = abs(t.coeff.value());
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + " in '" + std::string(text) +
                              "': " + what);
}

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) parse_error(input, 0, "empty input");
  std::vector<Term> terms;
  std::size_t pos = 0;
  const Field field = ring->field();
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!terms.empty()) {
      parse_error(s, pos, "expected '+' or '-'");
    }
    Scalar coeff(1);
    Monomial e(ring->size(), 0);
    bool expect_factor = true;
    while (expect_factor) {
      if (pos >= s.size()) parse_error(s, pos, "missing factor");
      if (digit(s[pos])) {
        std::size_t start = pos;
        while (pos < s.size() && digit(s[pos])) ++pos;
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          if (pos >= s.size() || !digit(s[pos])) parse_error(s, pos, "malformed rational");
          while (pos < s.size() && digit(s[pos])) ++pos;
        }
        coeff *= Scalar::parse(s.substr(start, pos - start));
      } else if (ident_start(s[pos])) {
        std::size_t start = pos;
        while (pos < s.size() && ident_char(s[pos])) ++pos;
        if (pos < s.size() && s[pos] == '[') {
          while (pos < s.size() && s[pos] != ']') ++pos;
          if (pos >= s.size()) parse_error(s, pos, "unterminated '['");
          ++pos;
        }
        std::string name = s.substr(start, pos - start);
        if (!ring->contains(name)) parse_error(s, start, "unknown variable '" + name + "'");
        unsigned k = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t es = pos;
          while (pos < s.size() && digit(s[pos])) ++pos;
          if (es == pos) parse_error(s, pos, "missing exponent");
          k = static_cast<unsigned>(std::stoul(s.substr(es, pos - es)));
        }
        e[ring->index(name)] += k;
      } else {
        parse_error(s, pos, std::string("unexpected character '") + s[pos] + "'");
      }
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    if (negative) coeff = -coeff;
    terms.push_back(Term{std::move(e), coeff.in(field)});
  }
  return Polynomial(std::move(ring), std::move(terms));
}

}  // namespace invkit
