#include <doctest.h>

#include "bclab/dyadic.hpp"
#include "bclab/errors.hpp"
#include "test_support.hpp"

using namespace bclab;
using bclab::testing::D;

TEST_CASE("arithmetic examples") {
  CHECK(D("1/2^1") + D("1/2^2") == D("3/2^2"));
  CHECK((D("3/2^2") * Dyadic(0)).is_zero());
  Dyadic z = D("5/2^3") - D("5/2^3");
  CHECK(z.is_zero());
  CHECK(z.exp() == 0);
  CHECK(D("1/2^1") < D("3/2^2"));
  CHECK(-D("1/2^3") < Dyadic(0));
}

TEST_CASE("normalization") {
  Dyadic a = Dyadic::normalize(2, 1);
  CHECK(a.num() == 1);
  CHECK(a.exp() == 0);
  Dyadic b = Dyadic::normalize(6, 3);
  CHECK(b.num() == 3);
  CHECK(b.exp() == 2);
  Dyadic c = Dyadic::normalize(0, 7);
  CHECK(c.num() == 0);
  CHECK(c.exp() == 0);
  CHECK(Dyadic::normalize(3, -2) == Dyadic(12));
}

TEST_CASE("reduction mod 1") {
  CHECK(mod1(D("5/2^2")).rep() == D("1/2^2"));
  CHECK(mod1(D("-1/2^2")).rep() == D("3/2^2"));
  CHECK(mod1(Dyadic(1)).rep() == Dyadic(0));
  CHECK(mod1(Dyadic(-3)).rep() == Dyadic(0));
}

TEST_CASE("parse and format") {
  CHECK(D("3/2^3").to_rational() == mpq_class(3, 8));
  CHECK(D("-1/2^1").to_rational() == mpq_class(-1, 2));
  CHECK(D("7") == Dyadic(7));
  CHECK(D("6/2^2").format() == "3/2^1");
  CHECK(Dyadic(0).format() == "0/2^0");
  CHECK_THROWS_AS(Dyadic::parse("3/5"), ParseError);
  CHECK_THROWS_AS(Dyadic::parse(""), ParseError);
  CHECK_THROWS_AS(Dyadic::parse("1/2^"), ParseError);
  try {
    Dyadic::parse("3/2^x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("x") != std::string::npos);
  }
}

TEST_CASE("floor and midpoint") {
  CHECK(D("-1/2^2").floor() == -1);
  CHECK(D("5/2^2").floor() == 1);
  CHECK(midpoint(D("1/2^2"), D("1/2^1")) == D("3/2^3"));
}

TEST_CASE("ring laws agree with rational arithmetic on random dyadics") {
  SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Dyadic a = testing::random_dyadic(rng), b = testing::random_dyadic(rng), c = testing::random_dyadic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b).to_rational() == a.to_rational() - b.to_rational());
    CHECK((a * b).to_rational() == a.to_rational() * b.to_rational());
    CHECK(((a < b) == (a.to_rational() < b.to_rational())));
    CHECK(Dyadic::parse(a.format()) == a);
    CHECK(mod1(a + Dyadic(1)) == mod1(a));
    const Dyadic r = mod1(a).rep();
    CHECK(r >= Dyadic(0));
    CHECK(r < Dyadic(1));
    CHECK((a - r).is_integer());
  }
}
