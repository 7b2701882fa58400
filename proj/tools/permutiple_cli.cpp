#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permutiple/oracle.hpp"
#include "permutiple/report.hpp"
#include "permutiple/solver.hpp"

namespace {

using namespace permutiple;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBounds = 3;

struct CommonArgs {
  int base = 10;
  int multiplier = 2;
  std::string digits;
  std::string sigma;
  std::string format = "table";
  bool verbose = false;
};

void add_format_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--verbose", args.verbose, "Also print two-line image tables");
}

void emit(const std::string& table, const Json& json, const std::string& csv,
          const std::string& format) {
  if (format == "json")
    std::cout << json.dump(2) << "\n";
  else if (format == "csv")
    std::cout << csv;
  else
    std::cout << table;
}

int run_verify(const CommonArgs& args) {
  Numeral num = parse_numeral(args.digits, args.base);
  ProblemSpec spec{args.base, args.multiplier};
  validate(spec);

  std::vector<PermutipleWitness> witnesses;
  std::string reason;
  if (!args.sigma.empty()) {
    Permutation sigma = parse_cycles(args.sigma, num.length() - 1);
    VerifyResult result = is_permutiple(num, sigma, spec);
    if (result.ok())
      witnesses.push_back(std::move(*result.witness));
    else
      reason = describe(result.rejection);
  } else {
    witnesses = find_sigma(num, spec);
    reason = "no valid digit permutation";
  }

  VerifyReport report = build_verify_report(num, spec, witnesses, reason);
  emit(render_table(report, args.verbose), to_json(report), render_csv(report), args.format);
  return report.ok ? kExitOk : kExitNegative;
}

int run_solve(const CommonArgs& args, const SolverOptions& solver_options,
              const ReportOptions& report_options) {
  Numeral num = parse_numeral(args.digits, args.base);
  ProblemSpec spec{args.base, args.multiplier};
  validate(spec);
  Permutation sigma = parse_cycles(args.sigma, num.length() - 1);

  VerifyResult seed = is_permutiple(num, sigma, spec);
  if (!seed.ok()) {
    std::cerr << "seed does not verify: " << describe(seed.rejection) << "\n";
    return kExitNegative;
  }

  std::vector<ConjugacyClass> classes = find_all(*seed.witness, solver_options);
  SolveReport report = build_solve_report(*seed.witness, classes, report_options);
  emit(render_table(report, args.verbose), to_json(report), render_csv(report), args.format);
  return kExitOk;
}

int run_brute(const CommonArgs& args, const SolverOptions& solver_options) {
  Numeral num = parse_numeral(args.digits, args.base);
  ProblemSpec spec{args.base, args.multiplier};
  validate(spec);

  std::vector<PermutipleWitness> seeds = find_sigma(num, spec);
  if (seeds.empty()) {
    std::cerr << "seed does not verify: no valid digit permutation\n";
    return kExitNegative;
  }

  std::vector<BruteHit> hits = brute_force_same_digits(num, spec, solver_options);
  std::vector<ConjugacyClass> classes = find_all(seeds.front(), solver_options);
  BruteReport report = build_brute_report(seeds.front(), hits, classes);
  emit(render_table(report, args.verbose), to_json(report), render_csv(report), args.format);
  return report.match ? kExitOk : kExitNegative;
}

int run_search(const CommonArgs& args, int length) {
  ProblemSpec spec{args.base, args.multiplier};
  validate(spec);

  std::vector<PermutipleWitness> witnesses = search_permutiples(spec, length);
  SearchReport report = build_search_report(spec, length, witnesses);
  emit(render_table(report, args.verbose), to_json(report), render_csv(report), args.format);
  return witnesses.empty() ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finds every permutiple sharing a known example's digits, multiplier, and length"};
  app.require_subcommand(1);

  CommonArgs verify_args, solve_args, brute_args, search_args;
  SolverOptions solve_options, brute_options;
  ReportOptions report_options;
  int search_length = 3;

  CLI::App* verify = app.add_subcommand("verify", "Check a numeral against a digit permutation");
  verify->add_option("--base", verify_args.base, "Numeral base")->required();
  verify->add_option("--mult", verify_args.multiplier, "Multiplier")->required();
  verify->add_option("--digits", verify_args.digits, "Digits, most-significant first")->required();
  verify->add_option("--sigma", verify_args.sigma,
                     "Digit permutation in cycle notation; omit to search for all");
  add_format_flags(verify, verify_args);

  CLI::App* solve = app.add_subcommand("solve", "All same-digit permutiples, by conjugacy class");
  solve->add_option("--base", solve_args.base, "Numeral base")->required();
  solve->add_option("--mult", solve_args.multiplier, "Multiplier")->required();
  solve->add_option("--digits", solve_args.digits, "Digits, most-significant first")->required();
  solve->add_option("--sigma", solve_args.sigma, "Seed digit permutation in cycle notation")
      ->required();
  solve->add_flag("--allow-leading-zero", solve_options.allow_leading_zero,
                  "Keep solutions whose leading digit is zero");
  solve->add_flag("--dedupe-numerals", report_options.dedupe_numerals,
                  "Collapse rows that repeat a numeral value");
  solve->add_flag("--show-empty", report_options.show_empty,
                  "Show base permutations whose class is empty");
  add_format_flags(solve, solve_args);

  CLI::App* brute = app.add_subcommand("brute", "Brute-force reference; cross-checks solve");
  brute->add_option("--base", brute_args.base, "Numeral base")->required();
  brute->add_option("--mult", brute_args.multiplier, "Multiplier")->required();
  brute->add_option("--digits", brute_args.digits, "Digits, most-significant first")->required();
  brute->add_flag("--allow-leading-zero", brute_options.allow_leading_zero,
                  "Keep rearrangements whose leading digit is zero");
  add_format_flags(brute, brute_args);

  CLI::App* search = app.add_subcommand("search", "Scan a digit length for permutiples");
  search->add_option("--base", search_args.base, "Numeral base")->required();
  search->add_option("--mult", search_args.multiplier, "Multiplier")->required();
  search->add_option("--length", search_length, "Digit length to scan")->required();
  add_format_flags(search, search_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(verify_args);
    if (solve->parsed()) return run_solve(solve_args, solve_options, report_options);
    if (brute->parsed()) return run_brute(brute_args, brute_options);
    return run_search(search_args, search_length);
  } catch (const permutiple::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool bounds = e.code() == permutiple::Errc::TooLong ||
                        e.code() == permutiple::Errc::RangeTooLarge;
    return bounds ? kExitBounds : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
