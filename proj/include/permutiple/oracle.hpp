#pragma once

#include <vector>

#include "permutiple/solver.hpp"
#include "permutiple/witness.hpp"

namespace permutiple {

// Brute-force references. These share only the Numeral/Permutation types with
// the solver pipeline. Desk-scale only.

struct BruteHit {
  Permutation pi;           // rearrangement applied to the seed digits
  PermutipleWitness witness;  // witness.sigma is the tau of the hit
};

// Tries every rearrangement d_{pi(j)} of the seed digits and keeps each
// (pi, tau) for which the rearranged numeral verifies. pi in lexicographic
// order, tau order per find_sigma. Throws Errc::TooLong beyond 9 digits.
std::vector<BruteHit> brute_force_same_digits(const Numeral& seed, const ProblemSpec& spec,
                                              const SolverOptions& options = {});

// Scans [base^(length-1), base^length) for values divisible by the
// multiplier whose quotient has the same digit multiset (quotient padded
// with leading zeros to the same length). Emits one witness per valid sigma,
// ascending by value. Throws Errc::RangeTooLarge when length > 7 or base > 16.
std::vector<PermutipleWitness> search_permutiples(const ProblemSpec& spec, int length);

}  // namespace permutiple
