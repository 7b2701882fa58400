#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "permutiple/oracle.hpp"
#include "permutiple/solver.hpp"

namespace permutiple {

using Json = nlohmann::ordered_json;

// Presentation layer shared by the CLI and the python bindings. Carries are
// rendered big-endian (c_k,...,c_0) everywhere; permutations in canonical
// cycle notation.

struct OutputRecord {
  std::string numeral;
  BigInt value;
  std::string pi;
  std::string tau;
  std::string beta;
  std::vector<int> carries;  // big-endian
  int class_index = -1;
  bool is_seed = false;
};

struct ClassReport {
  int index = 0;
  std::string beta;
  bool is_seed_class = false;
  std::vector<OutputRecord> solutions;
};

struct SeedReport {
  std::string numeral;
  BigInt value;
  int base = 0;
  int multiplier = 0;
  std::string sigma;
  std::string multiplicand;
  std::vector<int> carries;  // big-endian
};

struct SolveReport {
  SeedReport seed;
  int candidates = 0;  // total base-permutation candidates found
  std::vector<ClassReport> classes;
};

struct ReportOptions {
  bool show_empty = false;
  bool dedupe_numerals = false;
};

SolveReport build_solve_report(const PermutipleWitness& seed,
                               const std::vector<ConjugacyClass>& classes,
                               const ReportOptions& options = {});
Json to_json(const SolveReport& report);
SolveReport solve_report_from_json(const Json& j);
std::string render_table(const SolveReport& report, bool verbose = false);
std::string render_csv(const SolveReport& report);

struct WitnessRow {
  std::string sigma;
  std::string multiplicand;
  std::vector<int> carries;  // big-endian
};

struct VerifyReport {
  std::string numeral;
  BigInt value;
  int base = 0;
  int multiplier = 0;
  bool ok = false;
  std::string reason;  // set when !ok
  std::vector<WitnessRow> witnesses;
};

VerifyReport build_verify_report(const Numeral& num, const ProblemSpec& spec,
                                 const std::vector<PermutipleWitness>& witnesses,
                                 const std::string& reason);
Json to_json(const VerifyReport& report);
std::string render_table(const VerifyReport& report, bool verbose = false);
std::string render_csv(const VerifyReport& report);

struct BruteReport {
  SeedReport seed;  // sigma = the one used for the solver comparison
  std::vector<OutputRecord> hits;
  int distinct_numerals = 0;
  bool match = false;  // brute-force (value, tau) set equals the solver's
};

BruteReport build_brute_report(const PermutipleWitness& seed, const std::vector<BruteHit>& hits,
                               const std::vector<ConjugacyClass>& solver_classes);
Json to_json(const BruteReport& report);
std::string render_table(const BruteReport& report, bool verbose = false);
std::string render_csv(const BruteReport& report);

struct SearchRow {
  BigInt value;
  std::string numeral;
  std::string sigma;
  std::string multiplicand;
  std::vector<int> carries;  // big-endian
};

struct SearchReport {
  int base = 0;
  int multiplier = 0;
  int length = 0;
  std::vector<SearchRow> rows;
};

SearchReport build_search_report(const ProblemSpec& spec, int length,
                                 const std::vector<PermutipleWitness>& witnesses);
Json to_json(const SearchReport& report);
std::string render_table(const SearchReport& report, bool verbose = false);
std::string render_csv(const SearchReport& report);

// Big-endian copy (c_k,...,c_0) of a little-endian carry vector.
std::vector<int> big_endian(const CarryVector& carries);

// "(0,3,3,3,0)" rendering of a big-endian carry list.
std::string carries_tuple(const std::vector<int>& big_endian_carries);

}  // namespace permutiple
