#include "permutiple/numeral.hpp"

#include <algorithm>
#include <sstream>

namespace permutiple {

void validate(const Numeral& num) {
  if (num.base < 2) throw Error(Errc::InvalidBase, "base must be at least 2");
  if (num.digits.empty()) throw Error(Errc::EmptyNumeral, "numeral has no digits");
  for (int d : num.digits) {
    if (d < 0 || d >= num.base)
      throw Error(Errc::InvalidDigit,
                  "digit " + std::to_string(d) + " out of range for base " + std::to_string(num.base));
  }
}

Numeral parse_numeral(std::string_view text, int base) {
  if (base < 2) throw Error(Errc::InvalidBase, "base must be at least 2");

  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };

  if (trim(text).empty()) throw Error(Errc::EmptyNumeral, "empty numeral");

  Numeral num;
  num.base = base;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view token = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (token.empty()) throw Error(Errc::InvalidDigit, "empty digit token");
    int digit = 0;
    for (char ch : token) {
      if (ch < '0' || ch > '9')
        throw Error(Errc::InvalidDigit, "digit token '" + std::string(token) + "' is not a decimal integer");
      digit = digit * 10 + (ch - '0');
      if (digit >= base)
        throw Error(Errc::InvalidDigit,
                    "digit token '" + std::string(token) + "' is not below base " + std::to_string(base));
    }
    num.digits.push_back(digit);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw Error(Errc::InvalidDigit, "empty digit token");
  }

  // input is most-significant first; storage is little-endian
  std::reverse(num.digits.begin(), num.digits.end());
  return num;
}

std::string format_numeral(const Numeral& num) {
  std::string out;
  for (int j = num.length() - 1; j >= 0; --j) {
    out += std::to_string(num.digits[static_cast<size_t>(j)]);
    if (j > 0) out += ',';
  }
  return out;
}

BigInt value(const Numeral& num) {
  BigInt acc = 0;
  for (int j = num.length() - 1; j >= 0; --j) {
    acc *= num.base;
    acc += num.digits[static_cast<size_t>(j)];
  }
  return acc;
}

Numeral from_value(const BigInt& n, int base) {
  if (base < 2) throw Error(Errc::InvalidBase, "base must be at least 2");
  if (n < 0) throw Error(Errc::NegativeValue, "from_value requires a non-negative value");

  Numeral num;
  num.base = base;
  BigInt rest = n;
  do {
    num.digits.push_back(static_cast<int>(rest % base));
    rest /= base;
  } while (rest > 0);
  return num;
}

}  // namespace permutiple
