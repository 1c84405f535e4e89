#include "pcpw/field.hpp"

#include <cctype>

namespace pcpw {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p prime, a != 0 mod p
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31))
    throw std::invalid_argument("field modulus out of range");
  if (!is_prime_u32(p))
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not prime");
  return Field(Kind::prime, p);
}

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.is_prime_field()) {
    long long p = f.modulus();
    long long r = v % p;
    if (r < 0) r += p;
    s.res_ = static_cast<std::uint64_t>(r);
  } else {
    s.rat_ = mpq_class(static_cast<long>(v));
  }
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto bad = [&](const std::string& why) {
    return std::invalid_argument("cannot parse \"" + text + "\" over " +
                                 f.name() + ": " + why);
  };
  if (text.empty()) throw bad("empty literal");
  auto slash = text.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw bad("empty component");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw bad("sign without digits");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw bad("not an integer literal");
  };
  if (f.is_prime_field()) {
    if (slash != std::string::npos)
      throw bad("fraction literals are not accepted over a prime field");
    check_int(text);
    mpz_class z(text, 10);
    mpz_class r = z % static_cast<unsigned long>(f.modulus());
    if (r < 0) r += static_cast<unsigned long>(f.modulus());
    Scalar s(f);
    s.res_ = r.get_ui();
    return s;
  }
  Scalar s(f);
  if (slash == std::string::npos) {
    check_int(text);
    s.rat_ = mpq_class(mpz_class(text, 10));
  } else {
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den, 10);
    if (d == 0) throw bad("zero denominator");
    s.rat_ = mpq_class(mpz_class(num, 10), d);
    s.rat_->canonicalize();
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? res_ == 0 : *rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? res_ == 1 : *rat_ == 1;
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_)
    throw std::invalid_argument("scalar field mismatch: " + a.field_.name() +
                                " vs " + b.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_prime_field()) {
    r.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
  } else {
    r.rat_ = -*rat_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r(field_);
  if (field_.is_prime_field()) {
    r.res_ = mod_inverse(res_, field_.modulus());
  } else {
    r.rat_ = 1 / *rat_;
  }
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar r(a.field_);
  if (a.field_.is_prime_field()) {
    std::uint64_t s = a.res_ + b.res_;
    if (s >= a.field_.modulus()) s -= a.field_.modulus();
    r.res_ = s;
  } else {
    r.rat_ = *a.rat_ + *b.rat_;
  }
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar r(a.field_);
  if (a.field_.is_prime_field()) {
    std::uint64_t p = a.field_.modulus();
    r.res_ = (a.res_ + p - b.res_) % p;
  } else {
    r.rat_ = *a.rat_ - *b.rat_;
  }
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar r(a.field_);
  if (a.field_.is_prime_field()) {
    r.res_ = (a.res_ * b.res_) % a.field_.modulus();
  } else {
    r.rat_ = *a.rat_ * *b.rat_;
  }
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  return a.field_.is_prime_field() ? a.res_ == b.res_ : *a.rat_ == *b.rat_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  return rat_->get_str();
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime_field())
    throw std::logic_error("residue() on a rational scalar");
  return static_cast<std::uint32_t>(res_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime_field())
    throw std::logic_error("rational() on a prime-field scalar");
  return *rat_;
}

}  // namespace pcpw
