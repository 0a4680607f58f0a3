#include "blp/rational.hpp"

#include <doctest.h>

#include <random>

using namespace blp;

TEST_CASE("rational literals parse and render") {
  CHECK(parse_rational("-3/4") == Rat(-3) / 4);
  CHECK(parse_rational("7") == Rat(7));
  CHECK(parse_rational("+2/6") == Rat(1) / 3);
  CHECK(parse_rational("0") == Rat(0));
  CHECK(parse_rational("090") == Rat(90));  // leading zeros are decimal
  CHECK(parse_rational("007/010") == Rat(7) / 10);
  CHECK(parse_rational("-000") == Rat(0));
  CHECK(to_string(parse_rational("-3/4")) == "-3/4");
  CHECK(to_string(Rat(14) / 2) == "7");
  CHECK(to_string(Rat(0)) == "0");
}

TEST_CASE("rational literal rejects anything but sign, digits, slash, digits") {
  for (const char* bad : {"", "-", "1.5", "1e3", "1/0", "1/-2", "a", "3/", "/4", "1 2"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("stored values are canonical: lowest terms, positive denominator") {
  Rat v = parse_rational("-6/8");
  CHECK(numerator(v) == -3);
  CHECK(denominator(v) == 4);
  CHECK(numerator(Rat(0)) == 0);
  CHECK(denominator(Rat(0)) == 1);
}

TEST_CASE("exactness: (a+b)-b == a and (a*b)/b == a") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rat a = Rat(num(rng)) / den(rng);
    Rat b = Rat(num(rng)) / den(rng);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a * b) / b == a);
  }
}

TEST_CASE("factorial matches small cases") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("factorial encoding length stays polynomial in m") {
  for (unsigned m = 1; m <= 40; ++m) {
    const Int f = factorial(m);
    const std::size_t bits = boost::multiprecision::msb(f) + 1;
    // ceil(log2(m+1)) via bit length of m.
    const std::size_t log_term = boost::multiprecision::msb(Int(m)) + 1;
    CHECK(bits <= m * (log_term + 1));
  }
}

TEST_CASE("rat_pow uses the base^0 = 1 convention") {
  CHECK(rat_pow(Rat(0), 0) == 1);
  CHECK(rat_pow(Rat(3) / 2, 3) == Rat(27) / 8);
  CHECK(rat_pow(Rat(-2), 2) == 4);
}

TEST_CASE("lcm of denominators") {
  CHECK(lcm_denominators({Rat(1) / 2, Rat(1) / 3}) == 6);
  CHECK(lcm_denominators({Rat(2), Rat(5)}) == 1);
  CHECK(lcm_denominators({Rat(3) / 4, Rat(1) / 6}) == 12);
  CHECK(lcm_denominators({}) == 1);
}
