#include "bowtie/suite.hpp"

#include <chrono>
#include <set>

#include "bowtie/homology.hpp"
#include "bowtie/properties.hpp"
#include "bowtie/specparse.hpp"
#include "bowtie/version.hpp"

namespace bowtie {

namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

struct Tally {
  SuiteReport* report;
  void pass() { ++report->checks; }
  void fail() {
    ++report->checks;
    ++report->failures;
  }
  void skip() {
    ++report->checks;
    ++report->skipped;
  }
  const char* record(bool ok) {
    ok ? pass() : fail();
    return ok ? "pass" : "fail";
  }
};

std::vector<CorpusInstance> enumerable_instances() {
  std::vector<CorpusInstance> out;
  for (const CorpusEntry& e : builtin_corpus()) {
    CorpusInstance inst = instantiate(e);
    if (inst.ring->enumerable()) out.push_back(std::move(inst));
  }
  return out;
}

std::vector<CorpusInstance> sampleable_instances() {
  std::vector<CorpusInstance> out;
  for (const CorpusEntry& e : builtin_corpus()) {
    CorpusInstance inst = instantiate(e);
    if (!inst.ring->enumerable()) out.push_back(std::move(inst));
  }
  return out;
}

// --- ring axioms -----------------------------------------------------------

bool axiom_triple_ok(const Ring& r, const Value& a, const Value& b, const Value& c) {
  if (!(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)))) return false;
  if (!(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)))) return false;
  if (!(r.mul(a, b) == r.mul(b, a))) return false;
  if (!r.is_zero(r.add(a, r.neg(a)))) return false;
  if (!(r.mul(r.one(), a) == a)) return false;
  // results must stay in canonical form
  return r.contains(r.add(a, b)) && r.contains(r.mul(a, b)) && r.contains(r.neg(a));
}

json check_axioms(const RingPtr& r, std::uint64_t seed, Tally& tally) {
  json row;
  row["ring"] = r->descriptor();
  bool ok = true;
  if (r->enumerable() && r->cardinality() <= 16) {
    std::uint64_t n = r->cardinality();
    for (std::uint64_t i = 0; i < n && ok; ++i)
      for (std::uint64_t j = 0; j < n && ok; ++j)
        for (std::uint64_t k = 0; k < n && ok; ++k)
          ok = axiom_triple_ok(*r, r->element_at(i), r->element_at(j), r->element_at(k));
    row["mode"] = "exhaustive";
    row["triples"] = n * n * n;
  } else {
    SeededRng rng = seeded_stream(seed, "axioms:" + r->descriptor());
    const std::uint64_t triples = 10000;
    for (std::uint64_t t = 0; t < triples && ok; ++t)
      ok = axiom_triple_ok(*r, r->sample(rng, 50), r->sample(rng, 50), r->sample(rng, 50));
    row["mode"] = "sampled";
    row["triples"] = triples;
  }
  row["status"] = tally.record(ok);
  return row;
}

// --- section runners ----------------------------------------------------------

json run_transfer_section(const std::vector<CorpusInstance>& pairs, const SuiteOptions& opt,
                          Tally& tally) {
  json section = json::array();
  for (const std::string& theorem : transfer_theorems()) {
    json block;
    block["theorem"] = theorem;
    if (theorem == "local") block["empirically_checked_dependency"] = true;
    json rows = json::array();
    bool all_agree = true;
    for (const CorpusInstance& inst : pairs) {
      json row;
      row["id"] = inst.entry.id;
      try {
        TransferRecord rec = verify_transfer(theorem, inst.ring, inst.ideal, opt.cap);
        row["base"] = rec.base.verdict;
        row["dup"] = rec.dup.verdict;
        row["agree"] = rec.agreement;
        row["status"] = tally.record(rec.agreement);
        all_agree = all_agree && rec.agreement;
      } catch (const cap_exceeded& e) {
        row["status"] = "skip";
        row["note"] = e.what();
        tally.skip();
      } catch (const error& e) {
        row["status"] = "error";
        row["note"] = e.what();
        tally.fail();
        all_agree = false;
      }
      rows.push_back(std::move(row));
    }
    block["pairs"] = std::move(rows);
    block["all_agree"] = all_agree;
    section.push_back(std::move(block));
  }
  return section;
}

json run_spectrum_section(const std::vector<CorpusInstance>& pairs, const SuiteOptions& opt,
                          Tally& tally) {
  json section = json::array();
  for (const CorpusInstance& inst : pairs) {
    json row;
    row["id"] = inst.entry.id;
    if (inst.dup->cardinality() > opt.cap) {
      row["status"] = "skip";
      row["note"] = "duplication exceeds the lattice cap";
      tally.skip();
      section.push_back(std::move(row));
      continue;
    }
    try {
      std::vector<Ideal> base_primes = spectrum(inst.ring, opt.cap);
      std::set<std::vector<Value>> lifted;
      std::uint64_t contains_i = 0, splits = 0;
      for (const Ideal& p : base_primes) {
        PrimeLift lift = lift_prime(inst.dup, p);
        (lift.kind == LiftCase::ContainsI ? contains_i : splits) += 1;
        for (const Ideal& q : lift.lifts) lifted.insert(q.elements());
      }
      std::set<std::vector<Value>> actual;
      for (const Ideal& q : spectrum(inst.dup, opt.cap)) actual.insert(q.elements());

      row["base_primes"] = base_primes.size();
      row["contains_i"] = contains_i;
      row["splits"] = splits;
      row["dup_primes"] = actual.size();
      bool exact = lifted == actual;
      bool counted = actual.size() == contains_i + 2 * splits;
      row["exact_match"] = exact;
      row["count_match"] = counted;
      row["status"] = tally.record(exact && counted);
    } catch (const cap_exceeded& e) {
      row["status"] = "skip";
      row["note"] = e.what();
      tally.skip();
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
    section.push_back(std::move(row));
  }
  return section;
}

json run_resolution_section(const std::vector<CorpusInstance>& pairs, const SuiteOptions& opt,
                            Tally& tally) {
  json section = json::array();
  for (const CorpusInstance& inst : pairs) {
    json row;
    row["id"] = inst.entry.id;
    row["dup"] = inst.dup->descriptor();
    if (opt.samples == 0) {
      row["status"] = "skip";
      row["note"] = "sampled checks disabled";
      tally.skip();
      section.push_back(std::move(row));
      continue;
    }
    try {
      SeededRng rng = seeded_stream(opt.seed, "resolution:" + inst.entry.id);
      ResolutionReport rep =
          verify_periodic_resolution(inst.ring, inst.ideal.generators().at(0), rng, opt.samples);
      row["ker_u_equals_o2"] = rep.ker_u_equals_o2;
      row["ker_v_equals_o1"] = rep.ker_v_equals_o1;
      row["o1_idempotent_generated"] = rep.o1_idempotent_generated;
      row["o2_idempotent_generated"] = rep.o2_idempotent_generated;
      row["pd_verdict"] =
          rep.pd_verdict == PdVerdict::InfinitePeriodic ? "infinite-periodic" : "inconclusive";
      row["samples_checked"] = rep.samples_checked;
      row["sweep_checked"] = rep.sweep_checked;
      bool ok = rep.pd_verdict == PdVerdict::InfinitePeriodic;
      row["status"] = tally.record(ok);
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
    section.push_back(std::move(row));
  }
  return section;
}

json run_annihilator_section(const std::vector<CorpusInstance>& sampleable,
                             const std::vector<CorpusInstance>& enumerable,
                             const SuiteOptions& opt, Tally& tally) {
  json section = json::array();
  for (const CorpusInstance& inst : sampleable) {
    json row;
    row["id"] = inst.entry.id;
    row["mode"] = "sampled";
    if (opt.samples == 0) {
      row["status"] = "skip";
      row["note"] = "sampled checks disabled";
      tally.skip();
      section.push_back(std::move(row));
      continue;
    }
    try {
      const Value& a = inst.ideal.generators().at(0);
      Value c = inst.dup->make(a, inst.ring->neg(a));  // external (a, 0)
      SeededRng rng = seeded_stream(opt.seed, "annihilator:" + inst.entry.id);
      std::uint64_t samples = std::max<std::uint64_t>(opt.samples / 2, 1);
      AnnihilatorCertificate cert = annihilator_dup_sampled(inst.dup, c, rng, samples);
      row["characterization"] = cert.characterization;
      row["samples_checked"] = cert.samples_checked;
      row["sample_disagreements"] = cert.sample_disagreements;
      row["sweep_checked"] = cert.sweep_checked;
      row["sweep_disagreements"] = cert.sweep_disagreements;
      row["status"] = tally.record(cert.agreed());
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
    section.push_back(std::move(row));
  }

  for (const CorpusInstance& inst : enumerable) {
    json row;
    row["id"] = inst.entry.id;
    row["mode"] = "exhaustive";
    try {
      // the identity needs a regular m in I; proper ideals of finite rings
      // have none, so these rows are expected to skip
      std::optional<Value> regular;
      for (const Value& m : inst.ideal.elements()) {
        if (inst.ring->is_zero(m)) continue;
        bool reg = true;
        for (std::uint64_t k = 0; k < inst.ring->cardinality(); ++k) {
          Value y = inst.ring->element_at(k);
          if (!inst.ring->is_zero(y) && inst.ring->is_zero(inst.ring->mul(m, y))) {
            reg = false;
            break;
          }
        }
        if (reg) {
          regular = m;
          break;
        }
      }
      if (!regular) {
        row["status"] = "skip";
        row["note"] = "no regular element in I";
        tally.skip();
      } else {
        Value c = inst.dup->make(*regular, inst.ring->neg(*regular));
        Ideal ann = annihilator_dup(inst.dup, c);
        bool ok = ann.elements() == o1(inst.dup).elements();
        row["m"] = inst.ring->format(*regular);
        row["equals_o1"] = ok;
        row["status"] = tally.record(ok);
      }
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
    section.push_back(std::move(row));
  }
  return section;
}

json run_idealization_section(const std::vector<CorpusInstance>& pairs, Tally& tally) {
  json section = json::array();
  for (const CorpusInstance& inst : pairs) {
    bool square_zero = true;
    for (const Value& i : inst.ideal.elements()) {
      for (const Value& j : inst.ideal.elements())
        if (!inst.ring->is_zero(inst.ring->mul(i, j))) {
          square_zero = false;
          break;
        }
      if (!square_zero) break;
    }
    if (!square_zero) continue;  // the coincidence theorem does not apply
    json row;
    row["id"] = inst.entry.id;
    try {
      IsoVerdict verdict = iso_dup_idealization(inst.ring, inst.ideal);
      row["isomorphic"] = verdict.isomorphic;
      row["pairs_checked"] = verdict.pairs_checked;
      if (!verdict.isomorphic) row["counterexample"] = verdict.counterexample;
      row["status"] = tally.record(verdict.isomorphic);
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
    section.push_back(std::move(row));
  }
  return section;
}

json run_quotient_section(const std::vector<CorpusInstance>& pairs, Tally& tally) {
  json section = json::array();
  for (const CorpusInstance& inst : pairs) {
    json row;
    row["id"] = inst.entry.id;
    try {
      QuotientIso q1 = quotient_by_oi(inst.dup, 1);
      QuotientIso q2 = quotient_by_oi(inst.dup, 2);
      Ideal meet = ideal_intersection(o1(inst.dup), o2(inst.dup));
      bool zero_meet = meet.is_zero();
      row["o1_iso"] = q1.isomorphic;
      row["o2_iso"] = q2.isomorphic;
      row["o1_cap_o2_zero"] = zero_meet;
      row["status"] = tally.record(q1.isomorphic && q2.isomorphic && zero_meet);
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
    section.push_back(std::move(row));
  }
  return section;
}

json run_steinitz_example(const std::vector<CorpusInstance>& pairs, const SuiteOptions& opt,
                          Tally& tally) {
  json row;
  for (const CorpusInstance& inst : pairs) {
    if (inst.entry.id != "gf2x-x2") continue;
    row["id"] = inst.entry.id;
    try {
      PropertyReport local = is_local(inst.dup, opt.cap);
      PropertyReport perfect = is_perfect(inst.dup);
      PropertyReport steinitz = is_steinitz(inst.dup, opt.cap);
      TransferRecord transfer = verify_transfer("steinitz", inst.ring, inst.ideal, opt.cap);
      row["cardinality"] = inst.dup->cardinality();
      row["local"] = local.verdict;
      row["perfect"] = perfect.verdict;
      row["steinitz"] = steinitz.verdict;
      row["transfer_agree"] = transfer.agreement;
      bool ok = inst.dup->cardinality() == 8 && local.verdict && perfect.verdict &&
                steinitz.verdict && transfer.agreement;
      row["status"] = tally.record(ok);
    } catch (const cap_exceeded& e) {
      row["status"] = "skip";
      row["note"] = e.what();
      tally.skip();
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
  }
  return row;
}

json run_presentation_section(Tally& tally) {
  struct Instance {
    const char* id;
    const char* gens;
  };
  const Instance instances[] = {{"z8-2", "2"}, {"z6-2", "3"}, {"z12-2", "2,3"}};
  json section = json::array();
  for (const Instance& spec : instances) {
    json row;
    row["id"] = spec.id;
    row["gens"] = spec.gens;
    try {
      const CorpusEntry* entry = nullptr;
      for (const CorpusEntry& e : builtin_corpus())
        if (e.id == spec.id) entry = &e;
      CorpusInstance inst = instantiate(*entry);
      std::vector<Value> gens = parse_ideal_gens(inst.ring, spec.gens);
      PresentationCheck check = presentation_kernel_check(inst.dup, gens);
      row["holds"] = check.holds;
      row["kernel_size"] = check.kernel_size;
      row["characterization_size"] = check.characterization_size;
      row["tuples_scanned"] = check.tuples_scanned;
      row["status"] = tally.record(check.holds);
    } catch (const error& e) {
      row["status"] = "error";
      row["note"] = e.what();
      tally.fail();
    }
    section.push_back(std::move(row));
  }
  return section;
}

json run_oracle_section(const std::vector<CorpusInstance>& pairs, const SuiteOptions& opt,
                        Tally& tally) {
  json section;
  json crosschecks = json::array();
  std::set<std::string> seen;
  for (const CorpusInstance& inst : pairs) {
    for (const RingPtr& r : {inst.ring, RingPtr(inst.dup)}) {
      if (!seen.insert(r->descriptor()).second) continue;
      json row;
      row["ring"] = r->descriptor();
      try {
        bool ok = vnr_characterization_crosscheck(r, opt.cap);
        row["status"] = tally.record(ok);
      } catch (const cap_exceeded& e) {
        row["status"] = "skip";
        row["note"] = e.what();
        tally.skip();
      } catch (const error& e) {
        row["status"] = "error";
        row["note"] = e.what();
        tally.fail();
      }
      crosschecks.push_back(std::move(row));
    }
  }
  section["vnr_crosscheck"] = std::move(crosschecks);

  json squarefree = json::array();
  bool all_agree = true;
  for (std::uint64_t n = 2; n <= 30; ++n) {
    bool vnr = is_vnr(make_modular(n)).verdict;
    bool sf = is_squarefree_u64(n);
    if (vnr != sf) all_agree = false;
    json row;
    row["n"] = n;
    row["vnr"] = vnr;
    row["squarefree"] = sf;
    squarefree.push_back(std::move(row));
  }
  section["squarefree_agrees"] = all_agree;
  all_agree ? tally.pass() : tally.fail();
  section["squarefree"] = std::move(squarefree);
  return section;
}

json run_axiom_section(const std::vector<CorpusInstance>& enumerable,
                       const std::vector<CorpusInstance>& sampleable, const SuiteOptions& opt,
                       Tally& tally) {
  json section = json::array();
  std::set<std::string> seen;
  auto visit = [&](const RingPtr& r) {
    if (!seen.insert(r->descriptor()).second) return;
    section.push_back(check_axioms(r, opt.seed, tally));
  };
  for (const CorpusInstance& inst : enumerable) {
    visit(inst.ring);
    visit(inst.dup);
  }
  for (const CorpusInstance& inst : sampleable) {
    visit(inst.ring);
    visit(inst.dup);
  }
  return section;
}

}  // namespace

SuiteReport run_paper_suite(const SuiteOptions& opt) {
  SuiteReport report;
  Tally tally{&report};

  report.doc["tool"] = kToolName;
  report.doc["version"] = kToolVersion;
  report.doc["schema_version"] = kSchemaVersion;
  report.doc["suite"] = "paper";
  report.doc["seed"] = opt.seed;
  report.doc["samples"] = opt.samples;
  report.doc["cap"] = opt.cap;

  std::vector<CorpusInstance> enumerable = enumerable_instances();
  std::vector<CorpusInstance> sampleable = sampleable_instances();

  auto timed = [&](const char* name, auto&& fn) {
    auto start = clock_type::now();
    report.doc[name] = fn();
    auto stop = clock_type::now();
    report.elapsed_ms.emplace_back(
        name, std::chrono::duration<double, std::milli>(stop - start).count());
  };

  timed("transfer", [&] { return run_transfer_section(enumerable, opt, tally); });
  timed("spectrum", [&] { return run_spectrum_section(enumerable, opt, tally); });
  timed("resolutions", [&] { return run_resolution_section(sampleable, opt, tally); });
  timed("annihilators",
        [&] { return run_annihilator_section(sampleable, enumerable, opt, tally); });
  timed("idealization", [&] { return run_idealization_section(enumerable, tally); });
  timed("quotients", [&] { return run_quotient_section(enumerable, tally); });
  timed("steinitz_example", [&] { return run_steinitz_example(enumerable, opt, tally); });
  timed("presentation", [&] { return run_presentation_section(tally); });
  timed("oracles", [&] { return run_oracle_section(enumerable, opt, tally); });
  timed("axioms", [&] { return run_axiom_section(enumerable, sampleable, opt, tally); });

  report.doc["summary"] = {{"checks", report.checks},
                           {"failures", report.failures},
                           {"skipped", report.skipped}};
  return report;
}

std::string render_json(const SuiteReport& report) { return report.doc.dump(2) + "\n"; }

namespace {

void describe_rows(std::string& out, const json& rows) {
  for (const json& row : rows) {
    std::string line = "  ";
    if (row.contains("id")) line += row["id"].get<std::string>();
    else if (row.contains("ring")) line += row["ring"].get<std::string>();
    else if (row.contains("theorem")) line += row["theorem"].get<std::string>();
    line.resize(std::max<std::size_t>(line.size(), 14), ' ');
    if (row.contains("status")) line += "  " + row["status"].get<std::string>();
    if (row.contains("note")) line += "  (" + row["note"].get<std::string>() + ")";
    out += line + "\n";
  }
}

}  // namespace

std::string render_table(const SuiteReport& report) {
  std::string out;
  out += std::string(kToolName) + " " + kToolVersion + "  suite=paper seed=" +
         report.doc["seed"].dump() + " samples=" + report.doc["samples"].dump() +
         " cap=" + report.doc["cap"].dump() + "\n";
  for (const auto& [section, elapsed] : report.elapsed_ms) {
    out += "\n[" + section + "]  (" + std::to_string(elapsed) + " ms)\n";
    const json& body = report.doc[section];
    if (section == "transfer") {
      for (const json& block : body) {
        out += "  theorem " + block["theorem"].get<std::string>() +
               (block["all_agree"].get<bool>() ? ": all pairs agree" : ": DISAGREEMENT") + "\n";
        for (const json& row : block["pairs"]) {
          std::string line = "    " + row["id"].get<std::string>();
          line.resize(std::max<std::size_t>(line.size(), 14), ' ');
          line += "  " + row["status"].get<std::string>();
          if (row.contains("base"))
            line += std::string("  base=") + (row["base"].get<bool>() ? "true" : "false") +
                    " dup=" + (row["dup"].get<bool>() ? "true" : "false");
          out += line + "\n";
        }
      }
    } else if (body.is_array()) {
      describe_rows(out, body);
    } else if (body.is_object() && body.contains("vnr_crosscheck")) {
      describe_rows(out, body["vnr_crosscheck"]);
      out += std::string("  squarefree oracle n<=30: ") +
             (body["squarefree_agrees"].get<bool>() ? "agrees" : "DISAGREES") + "\n";
    } else if (body.is_object() && body.contains("status")) {
      out += "  " + body["id"].get<std::string>() + "  " + body["status"].get<std::string>() + "\n";
    }
  }
  out += "\nchecks=" + std::to_string(report.checks) + " failures=" +
         std::to_string(report.failures) + " skipped=" + std::to_string(report.skipped) + "\n";
  return out;
}

}  // namespace bowtie
