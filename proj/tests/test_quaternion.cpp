#include <doctest.h>

#include "quatsurf/error.hpp"
#include "quatsurf/quaternion.hpp"
#include "support/generators.hpp"

using namespace quatsurf;

namespace {
const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
}

TEST_CASE("defining relations") {
  CHECK(I * J == K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(I * I == Quaternion(-1));
  CHECK(J * J == Quaternion(-1));
  CHECK(K * K == Quaternion(-1));
  CHECK(I * J * K == Quaternion(-1));
  CHECK(J * I == -K);
}

TEST_CASE("multiplication examples") {
  const Quaternion q{1, 2, 3, 4};
  CHECK(q * Quaternion(1) == q);
  CHECK((Quaternion(1) + I) * (Quaternion(1) + J) == Quaternion(1, 1, 1, 1));
}

TEST_CASE("conjugation") {
  const Quaternion q{1, 2, 3, 4};
  CHECK(q.conj() == Quaternion(1, -2, -3, -4));
  CHECK(q.conj().conj() == q);
  CHECK(conj(I * J) == conj(J) * conj(I));
  CHECK(conj(I * J) == -K);
  CHECK(q * q.conj() == Quaternion(q.norm2()));
}

TEST_CASE("inverse") {
  CHECK(I.inverse() == -I);
  const Quaternion q{3, 4, 0, 0};
  const Quaternion inv = q.inverse();
  CHECK(inv == Quaternion(Rational(3, 25), Rational(-4, 25), 0, 0));
  CHECK(q * inv == Quaternion(1));
  CHECK(inv * q == Quaternion(1));
  try {
    (void)Quaternion().inverse();
    FAIL("expected ZeroDivision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDivision);
  }
}

TEST_CASE("norm is multiplicative and conj is an anti-automorphism") {
  testing::Rng rng(11);
  for (int n = 0; n < 1000; ++n) {
    const Quaternion a = testing::quaternion(rng, 1000);
    const Quaternion b = testing::quaternion(rng, 1000);
    REQUIRE((a * b).norm2() == a.norm2() * b.norm2());
    REQUIRE(conj(a * b) == conj(b) * conj(a));
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Quaternion(1));
  }
}

TEST_CASE("associativity on random triples") {
  testing::Rng rng(12);
  for (int n = 0; n < 200; ++n) {
    const Quaternion a = testing::quaternion(rng, 50), b = testing::quaternion(rng, 50), c = testing::quaternion(rng, 50);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("rational text forms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("3/-4"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(" 1"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(Rational(5, 2), 0) == "3");
  CHECK(to_decimal(Rational(12), 3) == "12.000");
}

TEST_CASE("quaternion display") {
  CHECK(to_string(Quaternion(1, -2, 3, Rational(4, 5))) == "1-2i+3j+4/5k");
  CHECK(to_string(Quaternion(0, 1, 0, -1)) == "i-k");
  CHECK(to_string(Quaternion()) == "0");
}
