#include "hhkit/scalar.hpp"

#include <utility>

namespace hhkit {

namespace {

BigInt mod_floor(const BigInt& a, long p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  return r;
}

// Inverse of a modulo the prime p, via extended Euclid.
BigInt mod_inverse(const BigInt& a, long p) {
  BigInt r0 = p, r1 = mod_floor(a, p);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0 != 1) throw InternalError("scalar: division by zero mod p");
  return mod_floor(t0, p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

void Scalar::normalize() {
  if (p_ > 0) {
    if (den_ != 1) {
      num_ *= mod_inverse(den_, p_);
      den_ = 1;
    }
    num_ = mod_floor(num_, p_);
    return;
  }
  if (den_ == 0) throw InternalError("scalar: zero denominator");
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Scalar Scalar::integer(BigInt n, long characteristic) {
  Scalar s;
  s.num_ = std::move(n);
  s.den_ = 1;
  s.p_ = characteristic;
  s.normalize();
  return s;
}

Scalar Scalar::fraction(BigInt num, BigInt den, long characteristic) {
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.p_ = characteristic;
  if (characteristic == 0 && s.den_ == 0)
    throw UsageError("scalar: zero denominator");
  if (characteristic > 0 && mod_floor(s.den_, characteristic) == 0)
    throw UsageError("scalar: denominator vanishes mod p");
  s.normalize();
  return s;
}

long Scalar::join_char(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.is_zero()) return b.p_;
  if (b.is_zero()) return a.p_;
  throw InternalError("scalar: mixed characteristics");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  s.normalize();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InternalError("scalar: inverse of zero");
  Scalar s;
  s.p_ = p_;
  if (p_ > 0) {
    s.num_ = mod_inverse(num_, p_);
    s.den_ = 1;
  } else {
    s.num_ = den_;
    s.den_ = num_;
  }
  s.normalize();
  return s;
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar acc = Scalar::integer(1, p_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar s;
  s.p_ = Scalar::join_char(a, b);
  s.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  s.den_ = a.den_ * b.den_;
  s.normalize();
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar s;
  s.p_ = Scalar::join_char(a, b);
  s.num_ = a.num_ * b.num_;
  s.den_ = a.den_ * b.den_;
  s.normalize();
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& b) const {
  if (p_ != b.p_ && !is_zero() && !b.is_zero()) return false;
  return num_ == b.num_ && den_ == b.den_;
}

std::string Scalar::str() const {
  if (p_ > 0 || den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Field::Field(long characteristic) : p_(characteristic) {
  if (characteristic < 0) throw UsageError("field: negative characteristic");
  if (characteristic > 0 && !is_prime(characteristic))
    throw UsageError("field: characteristic must be 0 or a prime");
}

Scalar Field::parse(const std::string& text) const {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar::integer(BigInt(text), p_);
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return Scalar::fraction(std::move(num), std::move(den), p_);
  } catch (const std::exception& e) {
    throw UsageError("cannot parse scalar '" + text + "'");
  }
}

std::string Field::name() const {
  return p_ == 0 ? "Q" : "F " + std::to_string(p_);
}

}  // namespace hhkit
