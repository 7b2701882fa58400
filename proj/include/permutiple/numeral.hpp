#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permutiple/error.hpp"

namespace permutiple {

using BigInt = boost::multiprecision::cpp_int;

// Base-b numeral with digits stored little-endian: digits[j] is the
// coefficient of base^j. Display order is most-significant first.
// Leading (most-significant) zeros are representable; callers that care
// filter them out.
struct Numeral {
  int base = 10;
  std::vector<int> digits;  // 0 <= digits[j] < base, size >= 1

  int length() const { return static_cast<int>(digits.size()); }

  friend bool operator==(const Numeral&, const Numeral&) = default;
};

// Throws Error if base < 2, digits is empty, or some digit is out of range.
void validate(const Numeral& num);

// Parses comma-separated decimal digit tokens, most-significant first.
// Digits >= 10 are multi-character tokens, so "10,3,5,1,8,6" is a six-digit
// base-12 numeral.
Numeral parse_numeral(std::string_view text, int base);

// Inverse of parse_numeral.
std::string format_numeral(const Numeral& num);

// The natural number the numeral denotes, as an exact integer.
BigInt value(const Numeral& num);

// Little-endian digits of n in the given base; from_value(0, b) is [0].
Numeral from_value(const BigInt& n, int base);

}  // namespace permutiple
