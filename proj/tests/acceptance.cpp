// Acceptance suite: runs every gate criterion and prints one line per result.
// Needs the CLI binary; pass its path as argv[1] or set PERMUTIPLE_CLI.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permutiple/oracle.hpp"
#include "permutiple/report.hpp"
#include "permutiple/solver.hpp"
#include "support.hpp"

using namespace permutiple;

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& failures, bool condition, const std::string& message) {
  if (!condition) failures.push_back(message);
}

PermutipleWitness golden_seed() {
  auto result =
      is_permutiple(parse_numeral("8,7,9,1,2", 10), Permutation::reversal(4), ProblemSpec{10, 4});
  if (!result.ok()) throw std::runtime_error("golden seed does not verify");
  return *result.witness;
}

std::set<std::pair<std::string, std::string>> solver_pair_set(const std::vector<ConjugacyClass>& classes) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& cls : classes)
    for (const auto& sol : cls.solutions)
      pairs.emplace(format_numeral(sol.numeral), format_cycles(sol.tau));
  return pairs;
}

std::set<std::pair<std::string, std::string>> brute_pair_set(const std::vector<BruteHit>& hits) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& hit : hits)
    pairs.emplace(format_numeral(hit.witness.numeral), format_cycles(hit.witness.sigma));
  return pairs;
}

// ---------------------------------------------------------------------------
// criterion 1: the full pipeline on the seed 87912 = 4 x 21978 reproduces the
// four candidate base permutations and the exact class contents
Failures criterion_golden_pipeline() {
  Failures failures;
  auto classes = find_all(golden_seed());

  expect(failures, classes.size() == 4, "expected exactly 4 base-permutation candidates");
  std::set<std::vector<int>> betas;
  for (const auto& cls : classes) betas.insert(cls.beta.images());
  const std::set<std::vector<int>> expected_betas{
      {4, 3, 2, 1, 0}, {4, 0, 3, 1, 2}, {4, 0, 2, 1, 3}, {4, 3, 0, 1, 2}};
  expect(failures, betas == expected_betas, "candidate base permutations differ");
  if (!failures.empty()) return failures;

  for (const auto& cls : classes) {
    const std::vector<int>& beta = cls.beta.images();
    if (beta == std::vector<int>{4, 3, 2, 1, 0}) {
      expect(failures, cls.contains_seed, "reversal class must contain the seed");
      expect(failures, cls.solutions.size() == 4, "reversal class must have 4 rows");
      if (cls.solutions.size() == 4) {
        const std::vector<std::string> numerals{"8,7,9,1,2", "8,7,1,9,2", "7,9,1,2,8", "7,1,9,2,8"};
        const std::vector<std::vector<int>> carries{
            {0, 3, 3, 3, 0}, {0, 3, 3, 3, 0}, {3, 3, 3, 0, 0}, {3, 3, 3, 0, 0}};
        for (size_t i = 0; i < 4; ++i) {
          expect(failures, format_numeral(cls.solutions[i].numeral) == numerals[i],
                 "reversal class row " + std::to_string(i) + " numeral differs");
          expect(failures, big_endian(cls.solutions[i].carries) == carries[i],
                 "reversal class row " + std::to_string(i) + " carries differ");
        }
      }
    } else if (beta == std::vector<int>{4, 0, 3, 1, 2}) {
      expect(failures, cls.solutions.size() == 1, "the (0,4,2,3,1) class must be a singleton");
      if (cls.solutions.size() == 1) {
        const Solution& sol = cls.solutions.front();
        expect(failures, format_numeral(sol.numeral) == "7,8,9,1,2", "singleton numeral differs");
        expect(failures, format_cycles(sol.tau) == "(0,3,2,4,1)", "singleton tau differs");
        expect(failures, big_endian(sol.carries) == std::vector<int>{3, 2, 1, 3, 0},
               "singleton carries differ");
        expect(failures,
               value(sol.numeral) == 4 * value(Numeral{10, act_on_vector(sol.tau, sol.numeral.digits)}),
               "singleton multiplication identity fails");
      }
    } else {
      expect(failures, cls.solutions.empty(),
             "class " + format_cycles(cls.beta) + " must be empty");
    }
  }

  // the CLI agrees byte for byte with the library-built report
  auto cli = run_cli(
      "solve --base 10 --mult 4 --digits 8,7,9,1,2 --sigma \"(0,4)(1,3)\" --show-empty --format json");
  expect(failures, cli.exit_code == 0, "solve exit code");
  const std::string expected_json =
      to_json(build_solve_report(golden_seed(), classes, ReportOptions{.show_empty = true})).dump(2) + "\n";
  expect(failures, cli.output == expected_json, "CLI solve JSON differs from library report");
  return failures;
}

// ---------------------------------------------------------------------------
// criterion 2: brute force on the golden seed yields the known numeral-value
// set and matches the solver
Failures criterion_golden_oracle() {
  Failures failures;
  auto seed = golden_seed();
  auto hits = brute_force_same_digits(seed.numeral, seed.spec);

  std::set<BigInt> values;
  for (const auto& hit : hits) values.insert(value(hit.witness.numeral));
  expect(failures, values == std::set<BigInt>{87912, 87192, 79128, 71928, 78912},
         "brute-force numeral-value set differs");
  expect(failures, brute_pair_set(hits) == solver_pair_set(find_all(seed)),
         "brute-force set does not match the solver");

  auto cli = run_cli("brute --base 10 --mult 4 --digits 8,7,9,1,2");
  expect(failures, cli.exit_code == 0, "brute exit code");
  expect(failures, cli.output.find("MATCH") != std::string::npos, "brute did not print MATCH");
  return failures;
}

// ---------------------------------------------------------------------------
// criterion 3: randomized solver/oracle equivalence over discovered seeds
Failures criterion_randomized_equivalence(const std::vector<PermutipleWitness>& pool,
                                          const std::vector<size_t>& selected) {
  Failures failures;
  expect(failures, selected.size() >= 100,
         "discovered only " + std::to_string(selected.size()) + " seeds");

  std::set<int> lengths, bases;
  for (size_t index : selected) {
    lengths.insert(pool[index].numeral.length());
    bases.insert(pool[index].spec.base);
  }
  expect(failures, lengths == std::set<int>{3, 4, 5, 6}, "seed lengths do not cover 3..6");
  expect(failures, bases.size() >= 4, "seed bases lack diversity");

  int mismatches = 0;
  for (size_t index : selected) {
    const PermutipleWitness& seed = pool[index];
    auto solver = solver_pair_set(find_all(seed));
    auto brute = brute_pair_set(brute_force_same_digits(seed.numeral, seed.spec));
    if (solver != brute) {
      ++mismatches;
      if (mismatches <= 3)
        failures.push_back("solver/brute mismatch on seed " + format_numeral(seed.numeral) +
                           " (base " + std::to_string(seed.spec.base) + ", n " +
                           std::to_string(seed.spec.multiplier) + ")");
    }
    if (solver.count({format_numeral(seed.numeral), format_cycles(seed.sigma)}) == 0) {
      failures.push_back("solver output misses the seed itself: " + format_numeral(seed.numeral));
      break;
    }
  }
  if (mismatches > 3)
    failures.push_back("... " + std::to_string(mismatches) + " mismatching seeds in total");
  return failures;
}

// ---------------------------------------------------------------------------
// criterion 4: the base-12 carry vector is itself a base-6 palintiple
Failures criterion_carry_regression() {
  Failures failures;
  const Numeral num = parse_numeral("10,3,5,1,8,6", 12);
  auto carries = compute_carries(num, power(Permutation::cycle_shift(5), 3), {12, 6});
  expect(failures, carries.ok(), "carry recurrence failed");
  if (!carries.ok()) return failures;
  expect(failures, carries.carries == CarryVector{0, 2, 1, 5, 3, 4}, "carry vector differs");

  // truncated carries (c_5,...,c_1) read as the base-6 numeral (4,3,5,1,2)
  std::vector<int> truncated(carries.carries.begin() + 1, carries.carries.end());
  const Numeral derived{6, truncated};
  expect(failures, format_numeral(derived) == "4,3,5,1,2", "truncated carry numeral differs");
  auto palintiple = is_permutiple(derived, Permutation::reversal(4), {6, 2});
  expect(failures, palintiple.ok(), "(4,3,5,1,2) base 6 must verify under reversal with n=2");
  if (palintiple.ok()) {
    expect(failures, value(derived) == 2 * value(Numeral{6, act_on_vector(Permutation::reversal(4), truncated)}),
           "derived palintiple multiplication identity fails");
  }
  return failures;
}

// ---------------------------------------------------------------------------
// criterion 5: the classic base-10 examples verify
Failures criterion_known_numbers() {
  Failures failures;

  auto cyclic = find_sigma(parse_numeral("7,1,4,2,8,5", 10), {10, 5});
  expect(failures, cyclic.size() == 1, "714285 must have exactly one sigma");
  if (!cyclic.empty()) {
    bool is_shift_power = false;
    const Permutation psi = Permutation::cycle_shift(5);
    for (int e = 0; e <= 5; ++e) is_shift_power |= cyclic.front().sigma == power(psi, e);
    expect(failures, is_shift_power, "714285's sigma must be a power of the cyclic shift");
  }

  expect(failures,
         is_permutiple(parse_numeral("9,8,9,0,1", 10), Permutation::reversal(4), {10, 9}).ok(),
         "98901 = 9 x 10989 must verify");
  expect(failures,
         is_permutiple(parse_numeral("8,7,9,1,2", 10), Permutation::reversal(4), {10, 4}).ok(),
         "87912 = 4 x 21978 must verify");
  return failures;
}

// ---------------------------------------------------------------------------
// criterion 6: property suites, 1000 randomized cases each
Failures criterion_properties(const std::vector<PermutipleWitness>& pool) {
  Failures failures;
  std::mt19937_64 rng(0x5eed5eedULL);

  // permutation algebra laws
  int algebra_failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const int k = static_cast<int>(rng() % 9);
    const Permutation a = random_permutation(rng, k);
    const Permutation b = random_permutation(rng, k);
    const Permutation psi = Permutation::cycle_shift(k);
    std::vector<int> x(static_cast<size_t>(k) + 1);
    for (int& xi : x) xi = static_cast<int>(rng() % 50);

    bool ok = compose(inverse(a), a) == Permutation::identity(k);
    ok = ok && compose(a, Permutation::identity(k)) == a;
    ok = ok && act_on_vector(compose(b, a), x) == act_on_vector(a, act_on_vector(b, x));
    ok = ok && cycle_type(conjugate(a, b)) == cycle_type(b);
    ok = ok && conjugate(a, conjugate(inverse(a), b)) == b;
    ok = ok && is_full_cycle(conjugate(a, psi));
    algebra_failures += ok ? 0 : 1;
  }
  expect(failures, algebra_failures == 0,
         std::to_string(algebra_failures) + " permutation algebra failures");

  // witness soundness on random inputs: structured accept/reject, never a crash
  int witness_failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const int base = 3 + static_cast<int>(rng() % 14);
    const int mult = 2 + static_cast<int>(rng() % (base - 2));
    const int len = 1 + static_cast<int>(rng() % 6);
    Numeral num{base, {}};
    for (int j = 0; j < len; ++j) num.digits.push_back(static_cast<int>(rng() % base));
    const Permutation sigma = random_permutation(rng, len - 1);
    try {
      auto result = is_permutiple(num, sigma, ProblemSpec{base, mult});
      if (result.ok()) {
        const Numeral multiplicand{base, act_on_vector(sigma, num.digits)};
        if (value(num) != mult * value(multiplicand)) ++witness_failures;
        if (result.witness->carries.front() != 0) ++witness_failures;
      }
    } catch (...) {
      ++witness_failures;
    }
  }
  expect(failures, witness_failures == 0,
         std::to_string(witness_failures) + " witness soundness failures");

  // every pooled witness re-verifies by exact multiplication
  int pool_failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const PermutipleWitness& w = pool[rng() % pool.size()];
    const Numeral multiplicand{w.numeral.base, act_on_vector(w.sigma, w.numeral.digits)};
    if (value(w.numeral) != w.spec.multiplier * value(multiplicand)) ++pool_failures;
  }
  expect(failures, pool_failures == 0,
         std::to_string(pool_failures) + " pooled witness re-verification failures");

  // solver soundness and byte-identical determinism on random seeds
  int solver_failures = 0;
  int determinism_failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const PermutipleWitness& seed = pool[rng() % pool.size()];
    auto classes = find_all(seed);
    for (const auto& cls : classes) {
      for (int v : cls.permuted_carries)
        if (v > seed.spec.multiplier - 1) ++solver_failures;
      for (const auto& sol : cls.solutions) {
        if (!is_permutiple(sol.numeral, sol.tau, seed.spec).ok()) ++solver_failures;
        if (conjugate(sol.pi, sol.tau) != cls.beta) ++solver_failures;
        if (sol.carries.front() != 0) ++solver_failures;
      }
    }
    auto again = find_all(seed);
    const ReportOptions options{.show_empty = true};
    if (render_table(build_solve_report(seed, classes, options)) !=
        render_table(build_solve_report(seed, again, options)))
      ++determinism_failures;
    if (to_json(build_solve_report(seed, classes, options)).dump(2) !=
        to_json(build_solve_report(seed, again, options)).dump(2))
      ++determinism_failures;
  }
  expect(failures, solver_failures == 0,
         std::to_string(solver_failures) + " solver soundness failures");
  expect(failures, determinism_failures == 0,
         std::to_string(determinism_failures) + " determinism failures");
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) setenv("PERMUTIPLE_CLI", argv[1], 1);

  // discovered-seed pool shared by criteria 3 and 6: every witness found in
  // bases 5..12, multipliers 2..b-1, lengths 3..6
  std::vector<PermutipleWitness> pool;
  std::vector<std::vector<size_t>> per_combo;  // pool indices per (base, n, length)
  for (int base = 5; base <= 12; ++base) {
    for (int mult = 2; mult < base; ++mult) {
      for (int length = 3; length <= 6; ++length) {
        per_combo.emplace_back();
        for (auto& witness : search_permutiples(ProblemSpec{base, mult}, length)) {
          per_combo.back().push_back(pool.size());
          pool.push_back(std::move(witness));
        }
      }
    }
  }

  // equivalence seeds: round-robin one witness per combo so every length and
  // base contributes
  std::vector<size_t> selected;
  for (size_t round = 0; selected.size() < 120; ++round) {
    bool any = false;
    for (const auto& combo : per_combo) {
      if (round < combo.size() && selected.size() < 120) {
        selected.push_back(combo[round]);
        any = true;
      }
    }
    if (!any) break;
  }

  struct Criterion {
    int number;
    std::string name;
    std::function<Failures()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "golden seed full pipeline", criterion_golden_pipeline},
      {2, "golden oracle equivalence", criterion_golden_oracle},
      {3, "randomized oracle equivalence (" + std::to_string(selected.size()) + " seeds)",
       [&] { return criterion_randomized_equivalence(pool, selected); }},
      {4, "carry vector regression", criterion_carry_regression},
      {5, "known-number verifications", criterion_known_numbers},
      {6, "property suites (1000 cases each)", [&] { return criterion_properties(pool); }},
  };
  const std::vector<double> budgets{1.0, 1.0, 300.0, 1.0, 0.0, 0.0};  // seconds; 0 = untimed

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Failures failures;
    try {
      failures = criteria[i].run();
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budgets[i] > 0 && elapsed >= budgets[i])
      failures.push_back("over time budget: " + std::to_string(elapsed) + "s >= " +
                         std::to_string(budgets[i]) + "s");

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (failures.empty() ? "[PASS]" : "[FAIL]") << " criterion " << criteria[i].number << ": "
         << criteria[i].name << " (" << elapsed << "s)";
    std::cout << line.str() << "\n";
    for (const auto& failure : failures) std::cout << "       - " << failure << "\n";
    if (!failures.empty()) ++failed;
  }

  std::cout << "acceptance: " << (criteria.size() - static_cast<size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed;
}
