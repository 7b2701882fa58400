#pragma once

#include <optional>
#include <vector>

#include "permutiple/numeral.hpp"
#include "permutiple/permutation.hpp"

namespace permutiple {

// Base b and multiplier n of an (n,b,sigma)-permutiple problem.
struct ProblemSpec {
  int base = 10;
  int multiplier = 2;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

// Requires base >= 2 and 2 <= multiplier < base. With allow_unit_multiplier,
// multiplier 1 is admitted (testing only).
void validate(const ProblemSpec& spec, bool allow_unit_multiplier = false);

// carries[j] = c_j. Also reused for permuted carry vectors, which need not
// start with zero.
using CarryVector = std::vector<int>;

enum class CarryFault {
  NotExact,       // a column's carry is not an integer
  CarryOverflow,  // a carry exceeds multiplier-1, or the wraparound carry is nonzero
};

struct CarryFailure {
  CarryFault fault;
  int column;  // index j of the offending column
};

// Result of running the carry recurrence. carries holds (c_0,...,c_k) and is
// meaningful only when ok().
struct CarryOutcome {
  std::optional<CarryFailure> failure;
  CarryVector carries;

  bool ok() const { return !failure.has_value(); }
};

// Carry recurrence for numeral = multiplier x (digits permuted by sigma):
// c_0 = 0, c_{j+1} = (n*d_{sigma(j)} + c_j - d_j) / b, with every division
// exact, every carry in [0, n-1], and the wraparound carry (index k+1,
// identified with index 0) zero.
CarryOutcome compute_carries(const Numeral& num, const Permutation& sigma,
                             const ProblemSpec& spec);

// A verified (n,b,sigma)-permutiple: numeral = multiplier x permuted numeral,
// with its carry vector.
struct PermutipleWitness {
  Numeral numeral;
  ProblemSpec spec;
  Permutation sigma;
  CarryVector carries;
};

enum class RejectReason {
  NotExact,
  CarryOverflow,
  ValueMismatch,
  TrivialIdentity,
  LeadingZeroMultiplicand,
};

struct Rejection {
  RejectReason reason = RejectReason::ValueMismatch;
  int column = -1;  // offending column for the carry faults, -1 otherwise
};

const char* describe(const Rejection& r);

struct WitnessOptions {
  bool allow_trivial = false;       // admit sigma == identity (and multiplier 1)
  bool reject_leading_zero = false; // reject multiplicand leading zero d_{sigma(k)} == 0
};

struct VerifyResult {
  std::optional<PermutipleWitness> witness;
  Rejection rejection;

  bool ok() const { return witness.has_value(); }
};

// Checks the carry recurrence and cross-checks by exact multiplication that
// value(numeral) == multiplier * value(permuted numeral).
VerifyResult is_permutiple(const Numeral& num, const Permutation& sigma,
                           const ProblemSpec& spec, const WitnessOptions& options = {});

// All sigma for which is_permutiple succeeds, in lexicographic image-table
// order. Throws Errc::TooLong for numerals longer than 9 digits.
std::vector<PermutipleWitness> find_sigma(const Numeral& num, const ProblemSpec& spec,
                                          const WitnessOptions& options = {});

}  // namespace permutiple
