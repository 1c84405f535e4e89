#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pcpw {

/// Raised by decision procedures that are only defined over prime fields.
struct unsupported_field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration would exceed the configured cap.
struct cap_exceeded_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The coefficient field: the rationals Q, or a prime field F_p with
/// 2 <= p < 2^31.  Primality is checked at construction.
class Field {
public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }
  std::uint32_t modulus() const { return p_; }

  std::string name() const {
    return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// One exact field element.  Rationals are arbitrary-precision and kept in
/// lowest terms with positive denominator; prime-field values are residues
/// in [0, p).  All arithmetic is exact; mixing fields throws.
class Scalar {
public:
  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);

  /// Parses "n" or "n/d" over Q; over F_p only integer literals are
  /// accepted (a fraction like "1/2" over F_2 is a parse error).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  std::string to_string() const;

  /// Prime-field residue (only valid for prime fields).
  std::uint32_t residue() const;
  /// Rational value (only valid over Q).
  const mpq_class& rational() const;

private:
  explicit Scalar(const Field& f) : field_(f) {}
  static void check_same(const Scalar& a, const Scalar& b);

  Field field_;
  std::uint64_t res_ = 0;           // prime field residue
  std::optional<mpq_class> rat_;    // rational value (engaged over Q only)
};

}  // namespace pcpw
