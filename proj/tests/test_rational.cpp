#include <catch2/catch_amalgamated.hpp>

#include <pcbd/rational.hpp>

using pcbd::rational;

TEST_CASE("rational normalizes on construction") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational(-2, 4) == rational(-1, 2));
  CHECK(rational(2, -4) == rational(-1, 2));
  CHECK(rational(-2, -4) == rational(1, 2));
  CHECK(rational(0, 7) == rational(0));
  CHECK(rational(0, -7).den() == 1);
  CHECK(rational(6, 3).is_integer());
  CHECK_THROWS_AS(rational(1, 0), pcbd::error);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(rational(1, 3) + rational(1, 6) == rational(1, 2));
  CHECK(rational(1, 3) - rational(1, 2) == rational(-1, 6));
  CHECK(rational(2, 3) * rational(9, 4) == rational(3, 2));
  CHECK(rational(2, 3) / rational(4, 9) == rational(3, 2));
  CHECK(-rational(5, 7) == rational(-5, 7));
  CHECK_THROWS_AS(rational(1) / rational(0), pcbd::error);

  rational a(7, 12);
  a += rational(5, 12);
  CHECK(a == rational(1));
  a *= rational(3, 7);
  a -= rational(3, 7);
  CHECK(a.is_zero());
}

TEST_CASE("rational ordering") {
  CHECK(rational(1, 3) < rational(1, 2));
  CHECK(rational(-1, 2) < rational(-1, 3));
  CHECK(rational(7, 5) > rational(4, 3));
  CHECK(rational(2, 6) <= rational(1, 3));
  CHECK(rational(2, 6) >= rational(1, 3));
  CHECK(abs(rational(-3, 4)) == rational(3, 4));
}

TEST_CASE("rational survives large intermediates") {
  // num * den products exceed 64 bits before reduction
  rational big(1'000'000'007LL, 998'244'353LL);
  CHECK(big * big / big == big);
  rational x(1LL << 40, 3);
  CHECK(x + x == rational(1LL << 41, 3));
  CHECK_THROWS_AS(rational(1LL << 62) * rational(1LL << 62), pcbd::overflow_error);
}

TEST_CASE("rational string form and parsing") {
  CHECK(rational(3, 4).str() == "3/4");
  CHECK(rational(-3, 4).str() == "-3/4");
  CHECK(rational(5).str() == "5");
  CHECK(pcbd::parse_rational("3/4") == rational(3, 4));
  CHECK(pcbd::parse_rational("-6/8") == rational(-3, 4));
  CHECK(pcbd::parse_rational("12") == rational(12));
  CHECK_THROWS_AS(pcbd::parse_rational("x/y"), pcbd::error);
}

TEST_CASE("rational to_double") {
  CHECK(rational(1, 2).to_double() == 0.5);
  CHECK(rational(-7, 4).to_double() == -1.75);
}
