#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invkit {

/// Base field descriptor: the rationals (prime == 0) or Z/p.
struct Field {
  std::uint32_t prime = 0;

  static Field rationals() { return {}; }
  static Field modular(std::uint32_t p);
  /// Accepts "q" or "Q" for the rationals, "pNNN" for Z/NNN.
  static Field parse(std::string_view text);

  bool is_rational() const { return prime == 0; }
  std::uint32_t characteristic() const { return prime; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact field element. Rationals are kept reduced with positive denominator;
/// modular values are integers in [0, p). A rational combined with a modular
/// value is reduced mod p first, so integer literals mix freely with either.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& v, std::uint32_t modulus = 0);
  Scalar(long num, long den) : Scalar(mpq_class(num, den)) {}

  /// Parses "p", "-p", "p/q" (optionally with surrounding whitespace).
  static Scalar parse(std::string_view text, std::uint32_t modulus = 0);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  std::uint32_t modulus() const { return modulus_; }
  const mpq_class& value() const { return value_; }
  /// Sign of the rational value (modular values are compared as integers).
  int sign() const { return sgn(value_); }

  /// Same value viewed in field f (identity when already there).
  Scalar in(const Field& f) const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::uint32_t join(const Scalar& o) const;
  void reduce();

  mpq_class value_;
  std::uint32_t modulus_ = 0;
};

inline Scalar operator""_q(unsigned long long v) { return Scalar(static_cast<long>(v)); }

}  // namespace invkit
