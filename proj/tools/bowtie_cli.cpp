// Command-line front end: property reports, spectrum lifting tables, and the
// one-shot verification suite over the built-in corpus.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bowtie/homology.hpp"
#include "bowtie/properties.hpp"
#include "bowtie/specparse.hpp"
#include "bowtie/suite.hpp"
#include "bowtie/version.hpp"

namespace {

using bowtie::Ideal;
using bowtie::RingPtr;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    std::string item = csv.substr(start, end - start);
    if (!item.empty()) out.push_back(item);
    start = end + 1;
  }
  return out;
}

json report_row(const bowtie::PropertyReport& rep) {
  json row;
  row["property"] = rep.property;
  row["verdict"] = rep.verdict;
  row["method"] = bowtie::method_name(rep.method);
  if (rep.witness) row["witness"] = *rep.witness;
  if (!rep.note.empty()) row["note"] = rep.note;
  return row;
}

void print_report_table(const std::string& ring, const json& rows) {
  std::printf("ring %s\n", ring.c_str());
  std::printf("  %-12s %-7s %-15s %s\n", "property", "verdict", "method", "detail");
  for (const json& row : rows) {
    std::string detail;
    if (row.contains("witness")) detail += "witness=" + row["witness"].get<std::string>() + " ";
    if (row.contains("note")) detail += row["note"].get<std::string>();
    std::printf("  %-12s %-7s %-15s %s\n", row["property"].get<std::string>().c_str(),
                row["verdict"].get<bool>() ? "true" : "false",
                row["method"].get<std::string>().c_str(), detail.c_str());
  }
}

int cmd_report(const std::string& spec, const std::string& ideal_gens,
               const std::string& props_csv, const std::string& format, std::uint64_t cap) {
  RingPtr ring = bowtie::parse_ring_spec(spec);
  std::vector<std::string> props = split_csv(props_csv);
  if (props.empty()) props = bowtie::property_names();
  for (const std::string& name : props) {
    const auto& known = bowtie::property_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw bowtie::parse_error("unknown property '" + name + "'");
  }

  bool had_error = false;
  auto run_properties = [&](const RingPtr& r) {
    json rows = json::array();
    for (const std::string& name : props) {
      try {
        rows.push_back(report_row(bowtie::property_report(r, name, cap)));
      } catch (const bowtie::error& e) {
        json row;
        row["property"] = name;
        row["error"] = e.what();
        rows.push_back(std::move(row));
        had_error = true;
      }
    }
    return rows;
  };

  json doc;
  doc["ring"] = ring->descriptor();
  doc["reports"] = run_properties(ring);
  RingPtr dup;
  if (!ideal_gens.empty()) {
    Ideal ideal = bowtie::parse_ideal(ring, ideal_gens);
    dup = bowtie::duplicate(ring, ideal);
    doc["dup"] = dup->descriptor();
    doc["dup_reports"] = run_properties(dup);
  }

  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_report_table(doc["ring"], doc["reports"]);
    if (dup) print_report_table(doc["dup"], doc["dup_reports"]);
  }
  return had_error ? kExitCheckFailure : kExitPass;
}

int cmd_spectrum(const std::string& spec, const std::string& ideal_gens, const std::string& format,
                 std::uint64_t cap) {
  RingPtr ring = bowtie::parse_ring_spec(spec);
  Ideal ideal = bowtie::parse_ideal(ring, ideal_gens);
  bowtie::DupPtr dup = bowtie::duplicate(ring, ideal);
  if (!dup->enumerable() || dup->cardinality() > cap) {
    std::cerr << "cap exceeded: the duplication is not enumerable within " << cap << " elements\n";
    return kExitCheckFailure;
  }

  json doc;
  doc["ring"] = ring->descriptor();
  doc["dup"] = dup->descriptor();
  json rows = json::array();
  std::set<std::vector<bowtie::Value>> lifted;
  std::uint64_t expected = 0;
  for (const Ideal& p : bowtie::spectrum(ring, cap)) {
    bowtie::PrimeLift lift = bowtie::lift_prime(dup, p);
    json row;
    row["prime"] = "(" + p.format_generators() + ")";
    row["case"] = lift.kind == bowtie::LiftCase::ContainsI ? "contains-I" : "splits";
    row["lifts"] = lift.lifts.size();
    expected += lift.lifts.size();
    for (const Ideal& q : lift.lifts) lifted.insert(q.elements());
    rows.push_back(std::move(row));
  }
  std::uint64_t actual = bowtie::spectrum(dup, cap).size();
  std::set<std::vector<bowtie::Value>> actual_set;
  for (const Ideal& q : bowtie::spectrum(dup, cap)) actual_set.insert(q.elements());
  bool exact = lifted == actual_set;

  doc["rows"] = std::move(rows);
  doc["lift_total"] = expected;
  doc["dup_primes"] = actual;
  doc["exact_match"] = exact;

  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("Spec(%s) lifting into %s\n", doc["ring"].get<std::string>().c_str(),
                doc["dup"].get<std::string>().c_str());
    std::printf("  %-16s %-12s %s\n", "prime", "case", "lifts");
    for (const json& row : doc["rows"])
      std::printf("  %-16s %-12s %llu\n", row["prime"].get<std::string>().c_str(),
                  row["case"].get<std::string>().c_str(),
                  static_cast<unsigned long long>(row["lifts"].get<std::uint64_t>()));
    std::printf("  lifts total %llu, |Spec(dup)| %llu, exact set match: %s\n",
                static_cast<unsigned long long>(expected),
                static_cast<unsigned long long>(actual), exact ? "yes" : "NO");
  }
  return exact ? kExitPass : kExitCheckFailure;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::uint64_t samples,
               const std::string& format, std::uint64_t cap) {
  if (suite != "paper") throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
  bowtie::SuiteOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.cap = cap;
  bowtie::SuiteReport report = bowtie::run_paper_suite(opt);
  std::cout << (format == "json" ? bowtie::render_json(report) : bowtie::render_table(report));
  return report.failures == 0 ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(bowtie::kToolName) +
               " - amalgamated duplications of computable commutative rings"};
  app.set_version_flag("--version", bowtie::kToolVersion);
  app.require_subcommand(1);

  std::string spec, ideal_gens, props, format = "table", suite = "paper";
  std::uint64_t seed = 42, samples = 1000, cap = bowtie::kDefaultLatticeCap;

  CLI::App* report = app.add_subcommand("report", "property report for a ring (and its duplication)");
  report->add_option("spec", spec, "ring spec, e.g. \"Z/6\" or \"dup(Z/6; 2)\"")->required();
  report->add_option("--ideal", ideal_gens, "ideal generators; adds the duplication to the report");
  report->add_option("--props", props, "comma-separated property list");
  report->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  report->add_option("--cap", cap, "lattice cap");

  CLI::App* spectrum = app.add_subcommand("spectrum", "prime lifting table for R into R bowtie I");
  spectrum->add_option("spec", spec, "ring spec")->required();
  spectrum->add_option("--ideal", ideal_gens, "ideal generators (default: zero ideal)");
  spectrum->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  spectrum->add_option("--cap", cap, "lattice cap");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite over the corpus");
  verify->add_option("--suite", suite, "suite name (paper)");
  verify->add_option("--seed", seed, "seed for the sampled checks");
  verify->add_option("--samples", samples, "sample count; 0 skips sampled checks");
  verify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--cap", cap, "lattice cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (report->parsed()) return cmd_report(spec, ideal_gens, props, format, cap);
    if (spectrum->parsed()) return cmd_spectrum(spec, ideal_gens, format, cap);
    return cmd_verify(suite, seed, samples, format, cap);
  } catch (const bowtie::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bowtie::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const bowtie::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}
