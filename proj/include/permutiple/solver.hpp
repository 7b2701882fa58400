#pragma once

#include <vector>

#include "permutiple/witness.hpp"

namespace permutiple {

// From one known permutiple, all permutiples with the same digit multiset,
// multiplier, and length, grouped into conjugacy classes. Three stages:
//
//   1. candidate_images / enumerate_base_permutations: every base
//      permutation beta passing the residue bound lr(d_j + (b-n)*d_{beta(j)}) <= n-1;
//   2. permuted_carries: the permuted carry vector v each beta forces;
//   3. solve_digit_permutations: the digit permutations pi recovered from
//      b*v_{gamma(j)} = n*d_{beta(j)} - d_j + v_j with gamma = pi o shift o pi^-1.
//
// Every emitted solution is independently re-verified.

struct SolverOptions {
  // Keep solutions whose numeral has a leading (most-significant) zero.
  bool allow_leading_zero = false;
};

// A base permutation that passed the residue bound, with the permuted carry
// vector it forces.
struct Candidate {
  Permutation beta;
  CarryVector permuted_carries;
};

// One permutiple derived from the seed: digits d_{pi(j)}, digit permutation
// tau = pi^-1 o beta o pi, carries c_j = v_{pi(j)}.
struct Solution {
  Permutation pi;
  Permutation tau;
  Numeral numeral;
  CarryVector carries;
};

struct ConjugacyClass {
  Permutation beta;
  CarryVector permuted_carries;
  std::vector<Solution> solutions;  // sorted by pi image table; may be empty
  bool contains_seed = false;       // beta equals the seed's sigma
};

// Least non-negative residue of x modulo b.
int least_residue(long long x, int modulus);

// images[j] = all i with least_residue(d_j + (b-n)*d_i, b) <= n-1, ascending.
std::vector<std::vector<int>> candidate_images(const Numeral& d, const ProblemSpec& spec);

// All bijections beta with beta(j) in images[j], in lexicographic image-table
// order (backtracking with used-value pruning).
std::vector<Permutation> enumerate_base_permutations(const std::vector<std::vector<int>>& images);

// v_j = least_residue(d_j + (b-n)*d_{beta(j)}, b). For beta from
// enumerate_base_permutations every component is <= n-1.
CarryVector permuted_carries(const Permutation& beta, const Numeral& d, const ProblemSpec& spec);

// All pi (sorted by image table) such that the digits d_{pi(j)} form a
// permutiple with base permutation beta and permuted carries v. Empty when
// no full cycle gamma satisfies v_{gamma(j)} = (n*d_{beta(j)} - d_j + v_j)/b,
// or when no rotation puts a zero carry in the units column.
std::vector<Permutation> solve_digit_permutations(const Permutation& beta, const CarryVector& v,
                                                  const Numeral& d, const ProblemSpec& spec,
                                                  const SolverOptions& options = {});

// Full pipeline. Returns one class per candidate beta (empty classes
// retained), sorted by beta's canonical cycle string.
std::vector<ConjugacyClass> find_all(const PermutipleWitness& seed,
                                     const SolverOptions& options = {});

}  // namespace permutiple
