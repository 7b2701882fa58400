#include "permutiple/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace permutiple {

std::vector<BruteHit> brute_force_same_digits(const Numeral& seed, const ProblemSpec& spec,
                                              const SolverOptions& options) {
  validate(seed);
  validate(spec);
  if (seed.length() > 9)
    throw Error(Errc::TooLong, "brute_force_same_digits supports at most 9 digits");

  const int len = seed.length();
  std::vector<int> idx(static_cast<size_t>(len));
  std::iota(idx.begin(), idx.end(), 0);

  std::vector<BruteHit> hits;
  do {
    if (!options.allow_leading_zero && seed.digits[static_cast<size_t>(idx.back())] == 0) continue;
    Numeral candidate;
    candidate.base = seed.base;
    candidate.digits.reserve(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j)
      candidate.digits.push_back(seed.digits[static_cast<size_t>(idx[static_cast<size_t>(j)])]);
    for (PermutipleWitness& w : find_sigma(candidate, spec))
      hits.push_back(BruteHit{Permutation::from_images(idx), std::move(w)});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return hits;
}

std::vector<PermutipleWitness> search_permutiples(const ProblemSpec& spec, int length) {
  validate(spec);
  if (length < 1 || length > 7)
    throw Error(Errc::RangeTooLarge, "search_permutiples supports lengths 1 to 7");
  if (spec.base > 16)
    throw Error(Errc::RangeTooLarge, "search_permutiples supports bases up to 16");

  const unsigned long long b = static_cast<unsigned long long>(spec.base);
  const unsigned long long n = static_cast<unsigned long long>(spec.multiplier);
  unsigned long long lo = 1;
  for (int i = 1; i < length; ++i) lo *= b;
  const unsigned long long hi = lo * b;

  std::vector<int> value_counts(static_cast<size_t>(spec.base));
  std::vector<int> quotient_counts(static_cast<size_t>(spec.base));

  std::vector<PermutipleWitness> out;
  unsigned long long first = lo % n == 0 ? lo : lo + (n - lo % n);
  for (unsigned long long val = first; val < hi; val += n) {
    // quotient padded with leading zeros to the same length
    std::fill(value_counts.begin(), value_counts.end(), 0);
    std::fill(quotient_counts.begin(), quotient_counts.end(), 0);
    unsigned long long t = val;
    for (int i = 0; i < length; ++i) {
      ++value_counts[static_cast<size_t>(t % b)];
      t /= b;
    }
    t = val / n;
    for (int i = 0; i < length; ++i) {
      ++quotient_counts[static_cast<size_t>(t % b)];
      t /= b;
    }
    if (value_counts != quotient_counts) continue;

    Numeral num = from_value(BigInt(val), spec.base);
    for (PermutipleWitness& w : find_sigma(num, spec)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace permutiple
