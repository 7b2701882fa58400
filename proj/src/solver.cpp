#include "permutiple/solver.hpp"

#include <algorithm>

namespace permutiple {

int least_residue(long long x, int modulus) {
  if (modulus < 2) throw Error(Errc::InvalidBase, "least_residue: modulus must be at least 2");
  long long r = x % modulus;
  if (r < 0) r += modulus;
  return static_cast<int>(r);
}

std::vector<std::vector<int>> candidate_images(const Numeral& d, const ProblemSpec& spec) {
  validate(d);
  validate(spec);
  const int len = d.length();
  const long long spread = spec.base - spec.multiplier;

  std::vector<std::vector<int>> images(static_cast<size_t>(len));
  for (int j = 0; j < len; ++j) {
    for (int i = 0; i < len; ++i) {
      const long long x = d.digits[static_cast<size_t>(j)] + spread * d.digits[static_cast<size_t>(i)];
      if (least_residue(x, spec.base) <= spec.multiplier - 1)
        images[static_cast<size_t>(j)].push_back(i);
    }
  }
  return images;
}

namespace {

void beta_search(const std::vector<std::vector<int>>& images, int j, std::vector<int>& chosen,
                 std::vector<bool>& used, std::vector<Permutation>& out) {
  const int len = static_cast<int>(images.size());
  if (j == len) {
    out.push_back(Permutation::from_images(chosen));
    return;
  }
  for (int i : images[static_cast<size_t>(j)]) {
    if (used[static_cast<size_t>(i)]) continue;
    used[static_cast<size_t>(i)] = true;
    chosen[static_cast<size_t>(j)] = i;
    beta_search(images, j + 1, chosen, used, out);
    used[static_cast<size_t>(i)] = false;
  }
}

}  // namespace

std::vector<Permutation> enumerate_base_permutations(const std::vector<std::vector<int>>& images) {
  if (images.empty()) return {};
  std::vector<Permutation> out;
  std::vector<int> chosen(images.size(), 0);
  std::vector<bool> used(images.size(), false);
  beta_search(images, 0, chosen, used, out);
  return out;
}

CarryVector permuted_carries(const Permutation& beta, const Numeral& d, const ProblemSpec& spec) {
  if (beta.size() != d.length())
    throw Error(Errc::LengthMismatch, "permuted_carries: beta length mismatch");
  const long long spread = spec.base - spec.multiplier;

  CarryVector v(static_cast<size_t>(d.length()));
  for (int j = 0; j < d.length(); ++j) {
    const long long x =
        d.digits[static_cast<size_t>(j)] + spread * d.digits[static_cast<size_t>(beta(j))];
    v[static_cast<size_t>(j)] = least_residue(x, spec.base);
  }
  return v;
}

namespace {

void gamma_search(const std::vector<std::vector<int>>& allowed, int j, std::vector<int>& chosen,
                  std::vector<bool>& used, std::vector<Permutation>& out) {
  const int len = static_cast<int>(allowed.size());
  if (j == len) {
    Permutation gamma = Permutation::from_images(chosen);
    if (is_full_cycle(gamma)) out.push_back(std::move(gamma));
    return;
  }
  for (int i : allowed[static_cast<size_t>(j)]) {
    if (used[static_cast<size_t>(i)]) continue;
    used[static_cast<size_t>(i)] = true;
    chosen[static_cast<size_t>(j)] = i;
    gamma_search(allowed, j + 1, chosen, used, out);
    used[static_cast<size_t>(i)] = false;
  }
}

}  // namespace

std::vector<Permutation> solve_digit_permutations(const Permutation& beta, const CarryVector& v,
                                                  const Numeral& d, const ProblemSpec& spec,
                                                  const SolverOptions& options) {
  const int len = d.length();
  if (beta.size() != len || static_cast<int>(v.size()) != len)
    throw Error(Errc::LengthMismatch, "solve_digit_permutations: length mismatch");
  const long long n = spec.multiplier;
  const long long b = spec.base;

  // w_j = (n*d_{beta(j)} - d_j + v_j) / b; the shifted carries gamma must produce
  std::vector<int> w(static_cast<size_t>(len));
  for (int j = 0; j < len; ++j) {
    const long long r = n * d.digits[static_cast<size_t>(beta(j))] -
                        d.digits[static_cast<size_t>(j)] + v[static_cast<size_t>(j)];
    if (r % b != 0) return {};
    w[static_cast<size_t>(j)] = static_cast<int>(r / b);
  }

  // v and w must agree as multisets or no gamma can exist
  {
    std::vector<int> vc(static_cast<size_t>(spec.multiplier), 0);
    std::vector<int> wc(static_cast<size_t>(spec.multiplier), 0);
    for (int x : v) {
      if (x < 0 || x >= spec.multiplier) return {};
      ++vc[static_cast<size_t>(x)];
    }
    for (int x : w) {
      if (x < 0 || x >= spec.multiplier) return {};
      ++wc[static_cast<size_t>(x)];
    }
    if (vc != wc) return {};
  }

  // gamma(j) may be any index carrying the required value
  std::vector<std::vector<int>> allowed(static_cast<size_t>(len));
  for (int j = 0; j < len; ++j)
    for (int i = 0; i < len; ++i)
      if (v[static_cast<size_t>(i)] == w[static_cast<size_t>(j)])
        allowed[static_cast<size_t>(j)].push_back(i);

  std::vector<Permutation> gammas;
  {
    std::vector<int> chosen(static_cast<size_t>(len), 0);
    std::vector<bool> used(static_cast<size_t>(len), false);
    gamma_search(allowed, 0, chosen, used, gammas);
  }

  std::vector<Permutation> pis;
  for (const Permutation& gamma : gammas) {
    for (const Permutation& pi : solve_conjugation_to_shift(gamma)) {
      if (v[static_cast<size_t>(pi(0))] != 0) continue;  // units column must carry zero
      if (!options.allow_leading_zero && d.digits[static_cast<size_t>(pi(len - 1))] == 0) continue;
      pis.push_back(pi);
    }
  }
  std::sort(pis.begin(), pis.end());
  return pis;
}

std::vector<ConjugacyClass> find_all(const PermutipleWitness& seed, const SolverOptions& options) {
  const Numeral& d = seed.numeral;
  {
    VerifyResult checked = is_permutiple(d, seed.sigma, seed.spec, {});
    if (!checked.ok()) throw Error(Errc::InvalidSeed, "find_all: seed does not verify");
  }

  std::vector<ConjugacyClass> classes;
  for (const Permutation& beta : enumerate_base_permutations(candidate_images(d, seed.spec))) {
    ConjugacyClass cls;
    cls.beta = beta;
    cls.permuted_carries = permuted_carries(beta, d, seed.spec);
    cls.contains_seed = beta == seed.sigma;

    for (const Permutation& pi :
         solve_digit_permutations(beta, cls.permuted_carries, d, seed.spec, options)) {
      Solution sol;
      sol.pi = pi;
      sol.tau = compose(compose(inverse(pi), beta), pi);
      sol.numeral = Numeral{d.base, act_on_vector(pi, d.digits)};
      sol.carries = act_on_vector(pi, cls.permuted_carries);

      VerifyResult checked = is_permutiple(sol.numeral, sol.tau, seed.spec, {});
      if (!checked.ok() || checked.witness->carries != sol.carries) continue;
      cls.solutions.push_back(std::move(sol));
    }
    classes.push_back(std::move(cls));
  }

  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    const std::string ca = format_cycles(a.beta);
    const std::string cb = format_cycles(b.beta);
    return ca != cb ? ca < cb : a.beta < b.beta;
  });
  return classes;
}

}  // namespace permutiple
