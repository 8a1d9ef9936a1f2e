#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hhkit/errors.hpp"

namespace hhkit {

using BigInt = boost::multiprecision::cpp_int;

// Exact field scalar: a rational number (characteristic 0) or a residue
// modulo a prime p (characteristic p).  No floating point anywhere.
//
// A Scalar remembers its characteristic so that matrices and chain data can
// be passed around without threading a field object through every call.
// Mixing characteristics is a programming error, except that an exact zero
// is compatible with everything.
class Scalar {
 public:
  Scalar() = default;  // zero over the rationals

  static Scalar integer(BigInt n, long characteristic);
  static Scalar fraction(BigInt num, BigInt den, long characteristic);

  long characteristic() const { return p_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Scalar operator-() const;
  Scalar inverse() const;  // throws InternalError on zero
  Scalar pow(unsigned long e) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  std::string str() const;

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;  // always 1 in characteristic p; positive in char 0
  long p_ = 0;

  void normalize();
  static long join_char(const Scalar& a, const Scalar& b);
};

// A field of scalars: characteristic 0 (exact rationals) or a prime p.
class Field {
 public:
  explicit Field(long characteristic);

  long characteristic() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }

  Scalar zero() const { return Scalar::integer(0, p_); }
  Scalar one() const { return Scalar::integer(1, p_); }
  Scalar from_int(long n) const { return Scalar::integer(n, p_); }
  Scalar from_big(BigInt n) const { return Scalar::integer(std::move(n), p_); }

  // Parses "n" or "n/d" with optional sign.
  Scalar parse(const std::string& text) const;

  std::string name() const;  // "Q" or "F p"

 private:
  long p_;
};

}  // namespace hhkit
