#include <doctest.h>

#include <random>

#include "permutiple/numeral.hpp"
#include "support.hpp"

using namespace permutiple;

TEST_CASE("parse_numeral stores digits little-endian") {
  CHECK(parse_numeral("8,7,9,1,2", 10).digits == std::vector<int>{2, 1, 9, 7, 8});
  CHECK(parse_numeral("10,3,5,1,8,6", 12).digits == std::vector<int>{6, 8, 1, 5, 3, 10});
  CHECK(parse_numeral("0", 10).digits == std::vector<int>{0});
  CHECK(parse_numeral(" 1 , 2 ", 10).digits == std::vector<int>{2, 1});
}

TEST_CASE("parse_numeral rejects malformed input") {
  CHECK(thrown_code([] { parse_numeral("8,7,9,1,2", 8); }) == Errc::InvalidDigit);
  CHECK(thrown_code([] { parse_numeral("", 10); }) == Errc::EmptyNumeral);
  CHECK(thrown_code([] { parse_numeral("  ", 10); }) == Errc::EmptyNumeral);
  CHECK(thrown_code([] { parse_numeral("1,2", 1); }) == Errc::InvalidBase);
  CHECK(thrown_code([] { parse_numeral("1,,2", 10); }) == Errc::InvalidDigit);
  CHECK(thrown_code([] { parse_numeral("1,2,", 10); }) == Errc::InvalidDigit);
  CHECK(thrown_code([] { parse_numeral("1,x", 10); }) == Errc::InvalidDigit);
  CHECK(thrown_code([] { parse_numeral("-1,2", 10); }) == Errc::InvalidDigit);
}

TEST_CASE("value sums digit-weighted powers") {
  CHECK(value(parse_numeral("8,7,9,1,2", 10)) == 87912);
  CHECK(value(parse_numeral("0", 10)) == 0);

  // base-12 example against a separate power-series evaluation
  const Numeral num = parse_numeral("10,3,5,1,8,6", 12);
  BigInt expected = 0;
  BigInt pow = 1;
  for (int digit : num.digits) {
    expected += digit * pow;
    pow *= 12;
  }
  CHECK(value(num) == expected);
  CHECK(value(num) == 2559414);
}

TEST_CASE("from_value produces little-endian digits") {
  CHECK(from_value(21978, 10).digits == std::vector<int>{8, 7, 9, 1, 2});
  CHECK(from_value(0, 7).digits == std::vector<int>{0});
  CHECK(from_value(2559414, 12).digits == std::vector<int>{6, 8, 1, 5, 3, 10});
  CHECK(thrown_code([] { from_value(5, 1); }) == Errc::InvalidBase);
  CHECK(thrown_code([] { from_value(-1, 10); }) == Errc::NegativeValue);
}

TEST_CASE("format_numeral is most-significant first") {
  CHECK(format_numeral(Numeral{10, {2, 1, 9, 7, 8}}) == "8,7,9,1,2");
  CHECK(format_numeral(Numeral{12, {6, 8, 1, 5, 3, 10}}) == "10,3,5,1,8,6");
  CHECK(format_numeral(Numeral{2, {0}}) == "0");
}

TEST_CASE("validate enforces digit range") {
  CHECK_NOTHROW(validate(Numeral{10, {0, 9}}));
  CHECK(thrown_code([] { validate(Numeral{10, {}}); }) == Errc::EmptyNumeral);
  CHECK(thrown_code([] { validate(Numeral{10, {10}}); }) == Errc::InvalidDigit);
  CHECK(thrown_code([] { validate(Numeral{1, {0}}); }) == Errc::InvalidBase);
}

TEST_CASE("round trips on random values and numerals") {
  std::mt19937_64 rng(20240811);
  for (int iter = 0; iter < 1000; ++iter) {
    const int base = 2 + static_cast<int>(rng() % 15);
    unsigned long long cap = 1;
    for (int i = 0; i < 12; ++i) cap *= static_cast<unsigned long long>(base);
    const BigInt n = static_cast<unsigned long long>(rng() % cap);
    const Numeral num = from_value(n, base);
    CHECK(value(num) == n);
    CHECK(parse_numeral(format_numeral(num), base) == num);
    if (num.digits.back() != 0 || num.length() == 1) CHECK(from_value(value(num), base) == num);
  }
}
