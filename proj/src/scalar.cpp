#include "invkit/scalar.hpp"

#include <cctype>

namespace invkit {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class mod_floor(const mpz_class& a, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Field Field::modular(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "q" || text == "Q") return rationals();
  if (text.size() > 1 && (text[0] == 'p' || text[0] == 'P') && all_digits(text.substr(1))) {
    unsigned long long p = std::stoull(std::string(text.substr(1)));
    if (p > 0xFFFFFFFFull) throw std::invalid_argument("field modulus too large");
    return modular(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unrecognized field '" + std::string(text) + "' (expected q or pPRIME)");
}

std::string Field::name() const { return prime == 0 ? "Q" : "Z/" + std::to_string(prime); }

Scalar::Scalar(const mpq_class& v, std::uint32_t modulus) : value_(v), modulus_(modulus) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::parse(std::string_view text, std::uint32_t modulus) {
  text = trim(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body = trim(body.substr(1));
  }
  auto slash = body.find('/');
  std::string_view num = trim(body.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(body.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Scalar(mpq_class(n, d), modulus);
}

void Scalar::reduce() {
  if (modulus_ == 0) return;
  mpz_class den = value_.get_den();
  mpz_class num = mod_floor(value_.get_num(), modulus_);
  if (den != 1) {
    mpz_class d = mod_floor(den, modulus_);
    mpz_class inv;
    mpz_class p(modulus_);
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible modulo " + std::to_string(modulus_));
    num = mod_floor(num * inv, modulus_);
  }
  value_ = mpq_class(num);
}

std::uint32_t Scalar::join(const Scalar& o) const {
  if (modulus_ == o.modulus_) return modulus_;
  if (modulus_ == 0) return o.modulus_;
  if (o.modulus_ == 0) return modulus_;
  throw std::domain_error("scalars from different prime fields combined");
}

Scalar Scalar::in(const Field& f) const {
  if (f.prime == modulus_) return *this;
  if (modulus_ != 0) throw std::domain_error("cannot move a Z/p value into " + f.name());
  return Scalar(value_, f.prime);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r = *this;
  if (modulus_ == 0) {
    r.value_ = 1 / value_;
  } else {
    mpz_class inv;
    mpz_class p(modulus_);
    mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
    r.value_ = mpq_class(inv);
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = join(o);
  if (p != 0 && modulus_ == 0) *this = in(Field{p});
  if (p != 0 && o.modulus_ == 0) return *this += o.in(Field{p});
  value_ += o.value_;
  modulus_ = p;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = join(o);
  if (p != 0 && modulus_ == 0) *this = in(Field{p});
  if (p != 0 && o.modulus_ == 0) return *this *= o.in(Field{p});
  value_ *= o.value_;
  modulus_ = p;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  std::uint32_t p = join(o);
  if (p != 0 && o.modulus_ == 0) return *this *= o.in(Field{p}).inverse();
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  std::uint32_t p = a.join(b);
  return a.in(Field{p}).value_ == b.in(Field{p}).value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

}  // namespace invkit
