#include "permutiple/witness.hpp"

#include <algorithm>
#include <numeric>

namespace permutiple {

void validate(const ProblemSpec& spec, bool allow_unit_multiplier) {
  if (spec.base < 2) throw Error(Errc::InvalidBase, "base must be at least 2");
  const int min_mult = allow_unit_multiplier ? 1 : 2;
  if (spec.multiplier < min_mult || spec.multiplier >= spec.base)
    throw Error(Errc::InvalidMultiplier,
                "multiplier must satisfy " + std::to_string(min_mult) + " <= n < base");
}

CarryOutcome compute_carries(const Numeral& num, const Permutation& sigma,
                             const ProblemSpec& spec) {
  if (sigma.size() != num.length())
    throw Error(Errc::LengthMismatch, "compute_carries: sigma length mismatch");

  const auto& d = num.digits;
  const long long n = spec.multiplier;
  const long long b = spec.base;
  const int len = num.length();

  CarryOutcome out;
  out.carries.assign(static_cast<size_t>(len), 0);
  long long carry = 0;
  for (int j = 0; j < len; ++j) {
    const long long column = n * d[static_cast<size_t>(sigma(j))] + carry - d[static_cast<size_t>(j)];
    if (column % b != 0) {
      out.failure = CarryFailure{CarryFault::NotExact, j};
      return out;
    }
    carry = column / b;
    if (carry < 0 || carry > n - 1) {
      out.failure = CarryFailure{CarryFault::CarryOverflow, j};
      return out;
    }
    if (j + 1 < len) {
      out.carries[static_cast<size_t>(j + 1)] = static_cast<int>(carry);
    } else if (carry != 0) {
      // wraparound carry c_{k+1} is identified with c_0 and must vanish
      out.failure = CarryFailure{CarryFault::CarryOverflow, j};
      return out;
    }
  }
  return out;
}

const char* describe(const Rejection& r) {
  switch (r.reason) {
    case RejectReason::NotExact: return "carry is not an integer";
    case RejectReason::CarryOverflow: return "carry bound violated";
    case RejectReason::ValueMismatch: return "value is not the stated multiple";
    case RejectReason::TrivialIdentity: return "identity permutation is trivial";
    case RejectReason::LeadingZeroMultiplicand: return "multiplicand has a leading zero";
  }
  return "not a permutiple";
}

VerifyResult is_permutiple(const Numeral& num, const Permutation& sigma,
                           const ProblemSpec& spec, const WitnessOptions& options) {
  validate(num);
  validate(spec, options.allow_trivial);
  if (sigma.size() != num.length())
    throw Error(Errc::LengthMismatch, "is_permutiple: sigma length mismatch");

  VerifyResult result;
  if (!options.allow_trivial && sigma.is_identity()) {
    result.rejection = {RejectReason::TrivialIdentity, -1};
    return result;
  }
  if (options.reject_leading_zero && num.digits[static_cast<size_t>(sigma(num.length() - 1))] == 0) {
    result.rejection = {RejectReason::LeadingZeroMultiplicand, -1};
    return result;
  }

  CarryOutcome carries = compute_carries(num, sigma, spec);
  if (!carries.ok()) {
    result.rejection = {carries.failure->fault == CarryFault::NotExact ? RejectReason::NotExact
                                                                       : RejectReason::CarryOverflow,
                        carries.failure->column};
    return result;
  }

  // independent cross-check by exact multiplication
  Numeral multiplicand{num.base, act_on_vector(sigma, num.digits)};
  if (value(num) != spec.multiplier * value(multiplicand)) {
    result.rejection = {RejectReason::ValueMismatch, -1};
    return result;
  }

  result.witness = PermutipleWitness{num, spec, sigma, std::move(carries.carries)};
  return result;
}

namespace {

// Depth-first search over sigma images with the carry chain as pruning: at
// column j only digits whose column sum is an exact multiple of the base can
// extend the assignment.
void sigma_search(const Numeral& num, const ProblemSpec& spec, const WitnessOptions& options,
                  int j, long long carry, std::vector<int>& images, std::vector<bool>& used,
                  std::vector<PermutipleWitness>& out) {
  const auto& d = num.digits;
  const int len = num.length();
  const long long n = spec.multiplier;
  const long long b = spec.base;

  if (j == len) {
    Permutation sigma = Permutation::from_images(images);
    VerifyResult checked = is_permutiple(num, sigma, spec, options);
    if (checked.ok()) out.push_back(std::move(*checked.witness));
    return;
  }

  for (int i = 0; i < len; ++i) {
    if (used[static_cast<size_t>(i)]) continue;
    const long long column = n * d[static_cast<size_t>(i)] + carry - d[static_cast<size_t>(j)];
    if (column % b != 0) continue;
    const long long next = column / b;
    if (next < 0 || next > n - 1) continue;
    if (j == len - 1 && next != 0) continue;
    used[static_cast<size_t>(i)] = true;
    images[static_cast<size_t>(j)] = i;
    sigma_search(num, spec, options, j + 1, next, images, used, out);
    used[static_cast<size_t>(i)] = false;
  }
}

}  // namespace

std::vector<PermutipleWitness> find_sigma(const Numeral& num, const ProblemSpec& spec,
                                          const WitnessOptions& options) {
  validate(num);
  validate(spec, options.allow_trivial);
  if (num.length() > 9)
    throw Error(Errc::TooLong, "find_sigma supports at most 9 digits");

  std::vector<PermutipleWitness> out;
  std::vector<int> images(static_cast<size_t>(num.length()), 0);
  std::vector<bool> used(static_cast<size_t>(num.length()), false);
  sigma_search(num, spec, options, 0, 0, images, used, out);
  return out;
}

}  // namespace permutiple
