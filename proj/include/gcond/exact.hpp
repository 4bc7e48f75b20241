#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gcond {

using BigInt = mpz_class;
using BigRat = mpq_class;

class ArithError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IncompatibleKinds : public ArithError {
 public:
  using ArithError::ArithError;
};

class DivisionByZero : public ArithError {
 public:
  DivisionByZero() : ArithError("division by zero") {}
};

class InexactDivision : public ArithError {
 public:
  using ArithError::ArithError;
};

class RingParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense polynomial in q over the integers, constant term first.
// The zero polynomial is the empty coefficient vector and has degree -1;
// every other polynomial has a nonzero leading coefficient.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  explicit Poly(const BigInt& constant);

  static Poly monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int k) const;
  BigInt eval_at_one() const;

  friend Poly operator+(const Poly& x, const Poly& y);
  friend Poly operator-(const Poly& x, const Poly& y);
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly operator-() const;
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

  // Quotient of an exact division; throws InexactDivision otherwise.
  static Poly divide_exact(const Poly& x, const Poly& y);

 private:
  void trim();
  std::vector<BigInt> c_;
};

enum class Kind { Integer, Rational, Polynomial };

class RingElem {
 public:
  RingElem() : v_(BigInt(0)) {}
  RingElem(int v) : v_(BigInt(v)) {}
  RingElem(long v) : v_(BigInt(v)) {}
  RingElem(BigInt v) : v_(std::move(v)) {}
  RingElem(BigRat v);
  RingElem(Poly p) : v_(std::move(p)) {}

  static RingElem rational(const BigInt& num, const BigInt& den);
  static RingElem q_power(int k);
  static RingElem zero_of(Kind k);
  static RingElem one_of(Kind k);
  static RingElem parse(std::string_view text);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool is_zero() const;
  bool is_one() const;

  const BigInt& integer() const;
  const BigRat& rational() const;
  const Poly& poly() const;
  BigRat to_rational() const;
  Poly to_poly() const;

  std::string str() const;

  friend RingElem operator+(const RingElem& x, const RingElem& y);
  friend RingElem operator-(const RingElem& x, const RingElem& y);
  friend RingElem operator*(const RingElem& x, const RingElem& y);
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& y) { return *this = *this + y; }
  RingElem& operator-=(const RingElem& y) { return *this = *this - y; }
  RingElem& operator*=(const RingElem& y) { return *this = *this * y; }

  // Values compare equal when they denote the same element once integers are
  // embedded in the rationals and in Z[q]; constant polynomials and integral
  // rationals therefore compare equal to the matching integer.
  friend bool operator==(const RingElem& x, const RingElem& y);

 private:
  std::variant<BigInt, BigRat, Poly> v_;
};

enum class ArithOp { Add, Sub, Mul };

Kind common_kind(Kind a, Kind b);
RingElem ring_arith(const RingElem& x, const RingElem& y, ArithOp op);
RingElem exact_div(const RingElem& x, const RingElem& y);
RingElem eval_at_one(const RingElem& p);
RingElem pow(const RingElem& x, unsigned e);

std::ostream& operator<<(std::ostream& os, const RingElem& x);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace gcond
