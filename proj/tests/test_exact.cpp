#include <doctest.h>

#include <sstream>

#include "gcond/exact.hpp"

using namespace gcond;

namespace {
RingElem P(const char* s) { return RingElem::parse(s); }
}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational product") {
    RingElem half = RingElem::rational(1, 2);
    CHECK(ring_arith(half, half, ArithOp::Mul) == RingElem::rational(1, 4));
    CHECK((half * half).str() == "1/4");
  }

  TEST_CASE("binomial square") {
    RingElem x = P("1 + q");
    CHECK(ring_arith(x, x, ArithOp::Mul) == P("1 + 2*q + q^2"));
    CHECK((x * x).str() == "1 + 2*q + q^2");
  }

  TEST_CASE("big integers") {
    CHECK(ring_arith(RingElem(1024), RingElem(1024), ArithOp::Mul) == RingElem(1048576));
    CHECK(pow(RingElem(2), 100).str() == "1267650600228229401496703205376");
  }

  TEST_CASE("kinds mix by embedding, but not rational with polynomial") {
    CHECK((RingElem(2) + RingElem::rational(1, 2)) == RingElem::rational(5, 2));
    CHECK((RingElem(2) * P("q")) == P("2*q"));
    CHECK_THROWS_AS(RingElem::rational(1, 2) + P("q"), IncompatibleKinds);
    CHECK(common_kind(Kind::Integer, Kind::Polynomial) == Kind::Polynomial);
    CHECK_THROWS_AS(common_kind(Kind::Rational, Kind::Polynomial), IncompatibleKinds);
  }

  TEST_CASE("exact division") {
    CHECK(exact_div(RingElem(2) * RingElem(8) * RingElem(8), RingElem(2)) == RingElem(64));
    CHECK(exact_div(P("1 - q^3"), P("1 - q")) == P("1 + q + q^2"));
    CHECK_THROWS_AS(exact_div(P("1 + q"), P("1 + q^2")), InexactDivision);
    CHECK_THROWS_AS(exact_div(RingElem(7), RingElem(2)), InexactDivision);
    CHECK_THROWS_AS(exact_div(RingElem(7), RingElem(0)), DivisionByZero);
    CHECK_THROWS_AS(exact_div(P("q"), P("0")), DivisionByZero);
    CHECK(exact_div(RingElem::rational(3, 4), RingElem::rational(3, 2)) == RingElem::rational(1, 2));
    CHECK_THROWS_AS(exact_div(RingElem::rational(3, 4), RingElem(0)), DivisionByZero);
  }

  TEST_CASE("evaluation at one") {
    CHECK(eval_at_one(P("1 + q")) == RingElem(2));
    CHECK(eval_at_one(RingElem(7)) == RingElem(7));
    CHECK_THROWS_AS(eval_at_one(RingElem::rational(1, 2)), IncompatibleKinds);
  }

  TEST_CASE("equality embeds integers") {
    CHECK(RingElem::rational(4, 2) == RingElem(2));
    CHECK(P("5") == RingElem(5));
    CHECK(RingElem::rational(4, 2).str() == "2");
    CHECK_FALSE(P("1 + q") == RingElem(2));
  }

  TEST_CASE("printing and parsing round trip") {
    for (const char* s : {"0", "-3", "7/9", "-7/9", "q", "-q", "1 + 2*q + q^2", "q^2 - 3*q^5", "-1 - q"})
      CHECK(P(s).str() == s);
    std::ostringstream os;
    os << P("q^3");
    CHECK(os.str() == "q^3");
    CHECK_THROWS_AS(P("1 + x"), RingParseError);
    CHECK_THROWS_AS(P("1/0"), RingParseError);
    CHECK_THROWS_AS(P(""), RingParseError);
  }

  TEST_CASE("q powers and units") {
    CHECK(RingElem::q_power(0) == RingElem(1));
    CHECK(RingElem::q_power(3).str() == "q^3");
    CHECK(RingElem::zero_of(Kind::Polynomial).is_zero());
    CHECK(RingElem::one_of(Kind::Rational).is_one());
  }

  TEST_CASE("polynomial core") {
    Poly p({BigInt(1), BigInt(0), BigInt(0)});
    CHECK(p.degree() == 0);
    CHECK(Poly().degree() == -1);
    CHECK((Poly::monomial(3, 2) - Poly::monomial(3, 2)).is_zero());
    CHECK(Poly::divide_exact(Poly::monomial(1, 5), Poly::monomial(1, 2)) == Poly::monomial(1, 3));
  }
}
