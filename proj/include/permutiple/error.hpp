#pragma once

#include <stdexcept>
#include <string>

namespace permutiple {

enum class Errc {
  InvalidBase,
  InvalidDigit,
  EmptyNumeral,
  NegativeValue,
  InvalidMultiplier,
  InvalidSeed,
  LengthMismatch,
  OutOfRange,
  RepeatedElement,
  MalformedCycles,
  TooLong,
  RangeTooLarge,
};

// Thrown on malformed input or violated preconditions. Expected negative
// outcomes (a numeral failing to verify) are returned as values, not thrown.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace permutiple
