#include "permutiple/report.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>

namespace permutiple {

std::vector<int> big_endian(const CarryVector& carries) {
  return std::vector<int>(carries.rbegin(), carries.rend());
}

std::string carries_tuple(const std::vector<int>& big_endian_carries) {
  std::string out = "(";
  for (size_t i = 0; i < big_endian_carries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(big_endian_carries[i]);
  }
  out += ')';
  return out;
}

namespace {

Json json_value(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt value_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

// Left-aligned columns, two spaces apart, trailing whitespace trimmed.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(fields[i]);
  }
  out += '\n';
  return out;
}

int numeral_max_index(const std::string& numeral) {
  return static_cast<int>(std::count(numeral.begin(), numeral.end(), ','));
}

// Indented two-line image table for a permutation given in cycle notation.
std::string verbose_tables(const std::string& label_a, const std::string& cycles_a,
                           const std::string& label_b, const std::string& cycles_b, int k) {
  std::string out;
  for (const auto& [label, cycles] : {std::pair{label_a, cycles_a}, std::pair{label_b, cycles_b}}) {
    if (label.empty()) continue;
    std::string table = format_image_table(parse_cycles(cycles, k));
    size_t newline = table.find('\n');
    out += "    " + label + "  " + table.substr(0, newline) + '\n';
    out += std::string(4 + label.size() + 2, ' ') + table.substr(newline + 1) + '\n';
  }
  return out;
}

Json record_to_json(const OutputRecord& rec) {
  Json j;
  j["numeral"] = rec.numeral;
  j["value"] = json_value(rec.value);
  j["pi"] = rec.pi;
  j["tau"] = rec.tau;
  j["beta"] = rec.beta;
  j["carries"] = rec.carries;
  j["class_index"] = rec.class_index;
  j["is_seed"] = rec.is_seed;
  return j;
}

OutputRecord record_from_json(const Json& j) {
  OutputRecord rec;
  rec.numeral = j.at("numeral").get<std::string>();
  rec.value = value_from_json(j.at("value"));
  rec.pi = j.at("pi").get<std::string>();
  rec.tau = j.at("tau").get<std::string>();
  rec.beta = j.at("beta").get<std::string>();
  rec.carries = j.at("carries").get<std::vector<int>>();
  rec.class_index = j.at("class_index").get<int>();
  rec.is_seed = j.at("is_seed").get<bool>();
  return rec;
}

Json seed_to_json(const SeedReport& seed) {
  Json j;
  j["numeral"] = seed.numeral;
  j["value"] = json_value(seed.value);
  j["base"] = seed.base;
  j["multiplier"] = seed.multiplier;
  j["sigma"] = seed.sigma;
  j["multiplicand"] = seed.multiplicand;
  j["carries"] = seed.carries;
  return j;
}

SeedReport seed_from_json(const Json& j) {
  SeedReport seed;
  seed.numeral = j.at("numeral").get<std::string>();
  seed.value = value_from_json(j.at("value"));
  seed.base = j.at("base").get<int>();
  seed.multiplier = j.at("multiplier").get<int>();
  seed.sigma = j.at("sigma").get<std::string>();
  seed.multiplicand = j.at("multiplicand").get<std::string>();
  seed.carries = j.at("carries").get<std::vector<int>>();
  return seed;
}

SeedReport make_seed_report(const PermutipleWitness& seed) {
  SeedReport rep;
  rep.numeral = format_numeral(seed.numeral);
  rep.value = value(seed.numeral);
  rep.base = seed.spec.base;
  rep.multiplier = seed.spec.multiplier;
  rep.sigma = format_cycles(seed.sigma);
  rep.multiplicand =
      format_numeral(Numeral{seed.numeral.base, act_on_vector(seed.sigma, seed.numeral.digits)});
  rep.carries = big_endian(seed.carries);
  return rep;
}

std::string seed_header(const SeedReport& seed) {
  return "seed " + seed.numeral + " (base " + std::to_string(seed.base) + ") = " +
         std::to_string(seed.multiplier) + " x " + seed.multiplicand + "\n" + "sigma " +
         seed.sigma + "  carries " + carries_tuple(seed.carries) + "\n";
}

}  // namespace

SolveReport build_solve_report(const PermutipleWitness& seed,
                               const std::vector<ConjugacyClass>& classes,
                               const ReportOptions& options) {
  SolveReport rep;
  rep.seed = make_seed_report(seed);
  rep.candidates = static_cast<int>(classes.size());

  std::set<std::string> seen_values;
  for (size_t i = 0; i < classes.size(); ++i) {
    const ConjugacyClass& cls = classes[i];
    ClassReport cr;
    cr.index = static_cast<int>(i);
    cr.beta = format_cycles(cls.beta);
    cr.is_seed_class = cls.contains_seed;
    for (const Solution& sol : cls.solutions) {
      OutputRecord rec;
      rec.value = value(sol.numeral);
      if (options.dedupe_numerals && !seen_values.insert(rec.value.str()).second) continue;
      rec.numeral = format_numeral(sol.numeral);
      rec.pi = format_cycles(sol.pi);
      rec.tau = format_cycles(sol.tau);
      rec.beta = cr.beta;
      rec.carries = big_endian(sol.carries);
      rec.class_index = cr.index;
      rec.is_seed = cls.contains_seed && sol.pi.is_identity();
      cr.solutions.push_back(std::move(rec));
    }
    if (!cr.solutions.empty() || options.show_empty) rep.classes.push_back(std::move(cr));
  }
  return rep;
}

Json to_json(const SolveReport& report) {
  Json j;
  j["seed"] = seed_to_json(report.seed);
  j["order"] = "big-endian";
  j["candidates"] = report.candidates;
  j["classes"] = Json::array();
  for (const ClassReport& cls : report.classes) {
    Json jc;
    jc["index"] = cls.index;
    jc["beta"] = cls.beta;
    jc["is_seed_class"] = cls.is_seed_class;
    jc["solutions"] = Json::array();
    for (const OutputRecord& rec : cls.solutions) jc["solutions"].push_back(record_to_json(rec));
    j["classes"].push_back(std::move(jc));
  }
  return j;
}

SolveReport solve_report_from_json(const Json& j) {
  SolveReport report;
  report.seed = seed_from_json(j.at("seed"));
  report.candidates = j.at("candidates").get<int>();
  for (const Json& jc : j.at("classes")) {
    ClassReport cls;
    cls.index = jc.at("index").get<int>();
    cls.beta = jc.at("beta").get<std::string>();
    cls.is_seed_class = jc.at("is_seed_class").get<bool>();
    for (const Json& jr : jc.at("solutions")) cls.solutions.push_back(record_from_json(jr));
    report.classes.push_back(std::move(cls));
  }
  return report;
}

std::string render_table(const SolveReport& report, bool verbose) {
  std::string out = seed_header(report.seed);
  out += "candidates " + std::to_string(report.candidates) + ", classes shown " +
         std::to_string(report.classes.size()) + "\n";

  const int k = numeral_max_index(report.seed.numeral);
  for (const ClassReport& cls : report.classes) {
    out += "\nclass " + std::to_string(cls.index) + ": beta " + cls.beta +
           (cls.is_seed_class ? " [seed]" : "") + "\n";
    if (cls.solutions.empty()) {
      out += "(empty)\n";
      continue;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"numeral", "pi", "tau", "carries", ""});
    for (const OutputRecord& rec : cls.solutions)
      rows.push_back({rec.numeral, rec.pi, rec.tau, carries_tuple(rec.carries),
                      rec.is_seed ? "[seed]" : ""});
    if (!verbose) {
      out += render_columns(rows);
    } else {
      for (size_t r = 1; r < rows.size(); ++r) {
        out += render_columns({rows[0], rows[r]});
        const OutputRecord& rec = cls.solutions[r - 1];
        out += verbose_tables("pi ", rec.pi, "tau", rec.tau, k);
      }
    }
  }
  return out;
}

std::string render_csv(const SolveReport& report) {
  std::string out = csv_line({"numeral", "value", "pi", "tau", "beta", "carries", "class_index", "is_seed"});
  for (const ClassReport& cls : report.classes)
    for (const OutputRecord& rec : cls.solutions)
      out += csv_line({rec.numeral, rec.value.str(), rec.pi, rec.tau, rec.beta,
                       carries_tuple(rec.carries), std::to_string(rec.class_index),
                       rec.is_seed ? "true" : "false"});
  return out;
}

VerifyReport build_verify_report(const Numeral& num, const ProblemSpec& spec,
                                 const std::vector<PermutipleWitness>& witnesses,
                                 const std::string& reason) {
  VerifyReport rep;
  rep.numeral = format_numeral(num);
  rep.value = value(num);
  rep.base = spec.base;
  rep.multiplier = spec.multiplier;
  rep.ok = !witnesses.empty();
  rep.reason = rep.ok ? "" : reason;
  for (const PermutipleWitness& w : witnesses) {
    WitnessRow row;
    row.sigma = format_cycles(w.sigma);
    row.multiplicand = format_numeral(Numeral{num.base, act_on_vector(w.sigma, num.digits)});
    row.carries = big_endian(w.carries);
    rep.witnesses.push_back(std::move(row));
  }
  return rep;
}

Json to_json(const VerifyReport& report) {
  Json j;
  j["numeral"] = report.numeral;
  j["value"] = json_value(report.value);
  j["base"] = report.base;
  j["multiplier"] = report.multiplier;
  j["ok"] = report.ok;
  if (!report.ok) j["reason"] = report.reason;
  j["order"] = "big-endian";
  j["witnesses"] = Json::array();
  for (const WitnessRow& row : report.witnesses) {
    Json jr;
    jr["sigma"] = row.sigma;
    jr["multiplicand"] = row.multiplicand;
    jr["carries"] = row.carries;
    j["witnesses"].push_back(std::move(jr));
  }
  return j;
}

std::string render_table(const VerifyReport& report, bool verbose) {
  std::string out = "numeral " + report.numeral + " (base " + std::to_string(report.base) +
                    "), multiplier " + std::to_string(report.multiplier) + "\n";
  if (!report.ok) {
    out += "not a permutiple: " + report.reason + "\n";
    return out;
  }
  out += "witnesses " + std::to_string(report.witnesses.size()) + "\n";
  const int k = numeral_max_index(report.numeral);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"sigma", "multiplicand", "carries"});
  for (const WitnessRow& row : report.witnesses)
    rows.push_back({row.sigma, row.multiplicand, carries_tuple(row.carries)});
  if (!verbose) {
    out += render_columns(rows);
  } else {
    for (size_t r = 1; r < rows.size(); ++r) {
      out += render_columns({rows[0], rows[r]});
      out += verbose_tables("sigma", report.witnesses[r - 1].sigma, "", "", k);
    }
  }
  return out;
}

std::string render_csv(const VerifyReport& report) {
  std::string out = csv_line({"sigma", "multiplicand", "carries"});
  for (const WitnessRow& row : report.witnesses)
    out += csv_line({row.sigma, row.multiplicand, carries_tuple(row.carries)});
  return out;
}

BruteReport build_brute_report(const PermutipleWitness& seed, const std::vector<BruteHit>& hits,
                               const std::vector<ConjugacyClass>& solver_classes) {
  BruteReport rep;
  rep.seed = make_seed_report(seed);

  std::set<std::string> numerals;
  std::set<std::pair<std::string, std::string>> brute_pairs;
  for (const BruteHit& hit : hits) {
    OutputRecord rec;
    rec.numeral = format_numeral(hit.witness.numeral);
    rec.value = value(hit.witness.numeral);
    rec.pi = format_cycles(hit.pi);
    rec.tau = format_cycles(hit.witness.sigma);
    rec.beta = format_cycles(conjugate(hit.pi, hit.witness.sigma));
    rec.carries = big_endian(hit.witness.carries);
    rec.class_index = -1;
    rec.is_seed = hit.pi.is_identity() && hit.witness.sigma == seed.sigma;
    numerals.insert(rec.numeral);
    brute_pairs.emplace(rec.numeral, rec.tau);
    rep.hits.push_back(std::move(rec));
  }
  rep.distinct_numerals = static_cast<int>(numerals.size());

  std::set<std::pair<std::string, std::string>> solver_pairs;
  for (const ConjugacyClass& cls : solver_classes)
    for (const Solution& sol : cls.solutions)
      solver_pairs.emplace(format_numeral(sol.numeral), format_cycles(sol.tau));
  rep.match = brute_pairs == solver_pairs;
  return rep;
}

Json to_json(const BruteReport& report) {
  Json j;
  j["seed"] = seed_to_json(report.seed);
  j["order"] = "big-endian";
  j["hits"] = Json::array();
  for (const OutputRecord& rec : report.hits) j["hits"].push_back(record_to_json(rec));
  j["distinct_numerals"] = report.distinct_numerals;
  j["match"] = report.match;
  return j;
}

std::string render_table(const BruteReport& report, bool verbose) {
  std::string out = seed_header(report.seed);
  out += "hits " + std::to_string(report.hits.size()) + ", distinct numerals " +
         std::to_string(report.distinct_numerals) + "\n";
  const int k = numeral_max_index(report.seed.numeral);
  if (!report.hits.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"numeral", "pi", "tau", "beta", "carries", ""});
    for (const OutputRecord& rec : report.hits)
      rows.push_back({rec.numeral, rec.pi, rec.tau, rec.beta, carries_tuple(rec.carries),
                      rec.is_seed ? "[seed]" : ""});
    if (!verbose) {
      out += render_columns(rows);
    } else {
      for (size_t r = 1; r < rows.size(); ++r) {
        out += render_columns({rows[0], rows[r]});
        const OutputRecord& rec = report.hits[r - 1];
        out += verbose_tables("pi ", rec.pi, "tau", rec.tau, k);
      }
    }
  }
  out += report.match ? "MATCH: brute-force result set equals solver result set\n"
                      : "MISMATCH: brute-force result set differs from solver result set\n";
  return out;
}

std::string render_csv(const BruteReport& report) {
  std::string out = csv_line({"numeral", "value", "pi", "tau", "beta", "carries", "class_index", "is_seed"});
  for (const OutputRecord& rec : report.hits)
    out += csv_line({rec.numeral, rec.value.str(), rec.pi, rec.tau, rec.beta,
                     carries_tuple(rec.carries), std::to_string(rec.class_index),
                     rec.is_seed ? "true" : "false"});
  return out;
}

SearchReport build_search_report(const ProblemSpec& spec, int length,
                                 const std::vector<PermutipleWitness>& witnesses) {
  SearchReport rep;
  rep.base = spec.base;
  rep.multiplier = spec.multiplier;
  rep.length = length;
  for (const PermutipleWitness& w : witnesses) {
    SearchRow row;
    row.value = value(w.numeral);
    row.numeral = format_numeral(w.numeral);
    row.sigma = format_cycles(w.sigma);
    row.multiplicand =
        format_numeral(Numeral{w.numeral.base, act_on_vector(w.sigma, w.numeral.digits)});
    row.carries = big_endian(w.carries);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Json to_json(const SearchReport& report) {
  Json j;
  j["base"] = report.base;
  j["multiplier"] = report.multiplier;
  j["length"] = report.length;
  j["order"] = "big-endian";
  j["results"] = Json::array();
  for (const SearchRow& row : report.rows) {
    Json jr;
    jr["value"] = json_value(row.value);
    jr["numeral"] = row.numeral;
    jr["sigma"] = row.sigma;
    jr["multiplicand"] = row.multiplicand;
    jr["carries"] = row.carries;
    j["results"].push_back(std::move(jr));
  }
  return j;
}

std::string render_table(const SearchReport& report, bool verbose) {
  std::string out = "search base " + std::to_string(report.base) + ", multiplier " +
                    std::to_string(report.multiplier) + ", length " +
                    std::to_string(report.length) + "\n";
  out += "results " + std::to_string(report.rows.size()) + "\n";
  if (report.rows.empty()) return out;
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"value", "numeral", "sigma", "multiplicand", "carries"});
  for (const SearchRow& row : report.rows)
    rows.push_back({row.value.str(), row.numeral, row.sigma, row.multiplicand,
                    carries_tuple(row.carries)});
  if (!verbose) {
    out += render_columns(rows);
  } else {
    for (size_t r = 1; r < rows.size(); ++r) {
      out += render_columns({rows[0], rows[r]});
      out += verbose_tables("sigma", report.rows[r - 1].sigma, "", "",
                            report.length - 1);
    }
  }
  return out;
}

std::string render_csv(const SearchReport& report) {
  std::string out = csv_line({"value", "numeral", "sigma", "multiplicand", "carries"});
  for (const SearchRow& row : report.rows)
    out += csv_line({row.value.str(), row.numeral, row.sigma, row.multiplicand,
                     carries_tuple(row.carries)});
  return out;
}

}  // namespace permutiple
