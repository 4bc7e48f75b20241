#include "gcond/exact.hpp"

#include <cassert>
#include <cctype>
#include <ostream>
#include <sstream>

namespace gcond {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const BigInt& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly Poly::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

BigInt Poly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

Poly operator+(const Poly& x, const Poly& y) {
  std::vector<BigInt> r(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t i = 0; i < x.c_.size(); ++i) r[i] += x.c_[i];
  for (std::size_t i = 0; i < y.c_.size(); ++i) r[i] += y.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  std::vector<BigInt> r(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::divide_exact(const Poly& x, const Poly& y) {
  if (y.is_zero()) throw DivisionByZero();
  if (x.is_zero()) return Poly();
  if (x.degree() < y.degree()) throw InexactDivision("polynomial division leaves a remainder");
  std::vector<BigInt> rem = x.c_;
  const int dy = y.degree();
  const BigInt& lead = y.c_.back();
  std::vector<BigInt> quot(static_cast<std::size_t>(x.degree() - dy + 1));
  for (int k = x.degree(); k >= dy; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw InexactDivision("polynomial division leaves a remainder");
    BigInt f = top / lead;
    for (int i = 0; i <= dy; ++i)
      rem[static_cast<std::size_t>(k - dy + i)] -= f * y.c_[static_cast<std::size_t>(i)];
    quot[static_cast<std::size_t>(k - dy)] = f;
  }
  for (const auto& c : rem)
    if (c != 0) throw InexactDivision("polynomial division leaves a remainder");
  return Poly(std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    BigInt c = p.coeff(k);
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "q";
    if (k > 1) os << "^" << k;
  }
  return os;
}

// ---------------------------------------------------------------- RingElem

RingElem::RingElem(BigRat v) {
  v.canonicalize();
  v_ = std::move(v);
}

RingElem RingElem::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  return RingElem(BigRat(num, den));
}

RingElem RingElem::q_power(int k) { return RingElem(Poly::monomial(1, k)); }

RingElem RingElem::zero_of(Kind k) {
  switch (k) {
    case Kind::Integer: return RingElem(BigInt(0));
    case Kind::Rational: return RingElem(BigRat(0));
    case Kind::Polynomial: return RingElem(Poly());
  }
  return {};
}

RingElem RingElem::one_of(Kind k) {
  switch (k) {
    case Kind::Integer: return RingElem(BigInt(1));
    case Kind::Rational: return RingElem(BigRat(1));
    case Kind::Polynomial: return RingElem(Poly(BigInt(1)));
  }
  return {};
}

bool RingElem::is_zero() const {
  switch (kind()) {
    case Kind::Integer: return integer() == 0;
    case Kind::Rational: return rational() == 0;
    case Kind::Polynomial: return poly().is_zero();
  }
  return false;
}

bool RingElem::is_one() const { return *this == RingElem(1); }

const BigInt& RingElem::integer() const {
  if (kind() != Kind::Integer) throw IncompatibleKinds("value is not an integer");
  return std::get<BigInt>(v_);
}

const BigRat& RingElem::rational() const {
  if (kind() != Kind::Rational) throw IncompatibleKinds("value is not a rational");
  return std::get<BigRat>(v_);
}

const Poly& RingElem::poly() const {
  if (kind() != Kind::Polynomial) throw IncompatibleKinds("value is not a polynomial");
  return std::get<Poly>(v_);
}

BigRat RingElem::to_rational() const {
  switch (kind()) {
    case Kind::Integer: return BigRat(integer());
    case Kind::Rational: return rational();
    case Kind::Polynomial: break;
  }
  throw IncompatibleKinds("polynomial cannot be used as a rational");
}

Poly RingElem::to_poly() const {
  switch (kind()) {
    case Kind::Integer: return Poly(integer());
    case Kind::Polynomial: return poly();
    case Kind::Rational: break;
  }
  throw IncompatibleKinds("rational cannot be used as a polynomial");
}

Kind common_kind(Kind a, Kind b) {
  if (a == b) return a;
  if (a == Kind::Integer) return b;
  if (b == Kind::Integer) return a;
  throw IncompatibleKinds("rational and polynomial values do not mix");
}

RingElem ring_arith(const RingElem& x, const RingElem& y, ArithOp op) {
  switch (common_kind(x.kind(), y.kind())) {
    case Kind::Integer: {
      const BigInt &a = x.integer(), &b = y.integer();
      if (op == ArithOp::Add) return RingElem(BigInt(a + b));
      if (op == ArithOp::Sub) return RingElem(BigInt(a - b));
      return RingElem(BigInt(a * b));
    }
    case Kind::Rational: {
      BigRat a = x.to_rational(), b = y.to_rational();
      if (op == ArithOp::Add) return RingElem(BigRat(a + b));
      if (op == ArithOp::Sub) return RingElem(BigRat(a - b));
      return RingElem(BigRat(a * b));
    }
    case Kind::Polynomial: {
      Poly a = x.to_poly(), b = y.to_poly();
      if (op == ArithOp::Add) return RingElem(a + b);
      if (op == ArithOp::Sub) return RingElem(a - b);
      return RingElem(a * b);
    }
  }
  return {};
}

RingElem operator+(const RingElem& x, const RingElem& y) { return ring_arith(x, y, ArithOp::Add); }
RingElem operator-(const RingElem& x, const RingElem& y) { return ring_arith(x, y, ArithOp::Sub); }
RingElem operator*(const RingElem& x, const RingElem& y) { return ring_arith(x, y, ArithOp::Mul); }

RingElem RingElem::operator-() const { return RingElem::zero_of(kind()) - *this; }

namespace {

// Integral rationals and constant polynomials collapse to integers.
RingElem demote(const RingElem& x) {
  if (x.kind() == Kind::Rational && x.rational().get_den() == 1)
    return RingElem(BigInt(x.rational().get_num()));
  if (x.kind() == Kind::Polynomial && x.poly().degree() <= 0)
    return RingElem(x.poly().coeff(0));
  return x;
}

}  // namespace

bool operator==(const RingElem& x, const RingElem& y) {
  RingElem a = demote(x), b = demote(y);
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Integer: return a.integer() == b.integer();
    case Kind::Rational: return a.rational() == b.rational();
    case Kind::Polynomial: return a.poly() == b.poly();
  }
  return false;
}

RingElem exact_div(const RingElem& x, const RingElem& y) {
  if (y.is_zero()) throw DivisionByZero();
  switch (common_kind(x.kind(), y.kind())) {
    case Kind::Integer: {
      const BigInt &a = x.integer(), &b = y.integer();
      if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InexactDivision("integer division leaves a remainder");
      return RingElem(BigInt(a / b));
    }
    case Kind::Rational: return RingElem(BigRat(x.to_rational() / y.to_rational()));
    case Kind::Polynomial: return RingElem(Poly::divide_exact(x.to_poly(), y.to_poly()));
  }
  return {};
}

RingElem eval_at_one(const RingElem& p) {
  switch (p.kind()) {
    case Kind::Integer: return p;
    case Kind::Polynomial: return RingElem(p.poly().eval_at_one());
    case Kind::Rational: break;
  }
  throw IncompatibleKinds("eval_at_one needs a polynomial or integer");
}

RingElem pow(const RingElem& x, unsigned e) {
  RingElem result = RingElem::one_of(x.kind());
  RingElem base = x;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string RingElem::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElem& x) {
  switch (x.kind()) {
    case Kind::Integer: return os << x.integer();
    case Kind::Rational: {
      const BigRat& r = x.rational();
      if (r.get_den() == 1) return os << r.get_num();
      return os << r.get_num() << "/" << r.get_den();
    }
    case Kind::Polynomial: return os << x.poly();
  }
  return os;
}

// ---------------------------------------------------------------- parsing

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  BigInt digits() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, i_ - start)));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw RingParseError("cannot parse '" + std::string(s_) + "': " + why);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

Poly parse_poly(Scanner& sc) {
  Poly acc;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.eat('+')) {
      if (first) sc.fail("leading '+'");
    } else if (sc.eat('-')) {
      sign = -1;
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;
    BigInt c = 1;
    int deg = 0;
    bool has_coeff = false;
    if (sc.peek_digit()) {
      c = sc.digits();
      has_coeff = true;
      if (sc.peek() == '*') {
        sc.eat('*');
        if (sc.peek() != 'q') sc.fail("expected 'q' after '*'");
      }
    }
    if (sc.eat('q')) {
      deg = 1;
      if (sc.eat('^')) deg = static_cast<int>(sc.digits().get_si());
    } else if (!has_coeff) {
      sc.fail("empty term");
    }
    acc = acc + Poly::monomial(sign * c, deg);
  }
  if (first) sc.fail("empty polynomial");
  return acc;
}

}  // namespace

RingElem RingElem::parse(std::string_view text) {
  if (text.find('q') != std::string_view::npos) {
    Scanner sc(text);
    Poly p = parse_poly(sc);
    assert(p.is_zero() || p.coeffs().back() != 0);
    return RingElem(std::move(p));
  }
  Scanner sc(text);
  int sign = 1;
  if (sc.eat('-')) sign = -1;
  else sc.eat('+');
  BigInt num = sign * sc.digits();
  if (sc.eat('/')) {
    int dsign = 1;
    if (sc.eat('-')) dsign = -1;
    BigInt den = dsign * sc.digits();
    if (!sc.done()) sc.fail("trailing characters");
    if (den == 0) sc.fail("zero denominator");
    return RingElem(BigRat(num, den));
  }
  if (!sc.done()) sc.fail("trailing characters");
  return RingElem(std::move(num));
}

}  // namespace gcond
