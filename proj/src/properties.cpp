#include "bowtie/properties.hpp"

#include <algorithm>

#include "bowtie/duplication.hpp"
#include "bowtie/homology.hpp"

namespace bowtie {

const char* method_name(Method m) {
  switch (m) {
    case Method::Exhaustive: return "exhaustive";
    case Method::Sampled: return "sampled";
    default: return "theorem-backed";
  }
}

PropertyReport is_reduced(const RingPtr& r) {
  PropertyReport out{r->descriptor(), "reduced", true, std::nullopt, Method::Exhaustive, ""};
  if (!r->enumerable()) {
    out.method = Method::TheoremBacked;
    out.note = r->domain_handle() ? "integral domain" : "componentwise reduced";
    return out;
  }
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    Value a = r->element_at(i);
    if (r->is_zero(a)) continue;
    Value p = a;
    for (std::uint64_t k = 1; k <= r->cardinality(); ++k) {
      if (r->is_zero(p)) {
        out.verdict = false;
        out.witness = r->format(a);
        return out;
      }
      p = r->mul(p, a);
    }
  }
  return out;
}

PropertyReport is_vnr(const RingPtr& r) {
  if (!r->enumerable()) throw not_enumerable("vnr needs an enumerable ring");
  PropertyReport out{r->descriptor(), "vnr", true, std::nullopt, Method::Exhaustive, ""};
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    Value a = r->element_at(i);
    Value a2 = r->mul(a, a);
    bool found = false;
    for (std::uint64_t j = 0; j < r->cardinality(); ++j) {
      if (r->mul(a2, r->element_at(j)) == a) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.verdict = false;
      out.witness = r->format(a);
      return out;
    }
  }
  return out;
}

PropertyReport is_local(const RingPtr& r, std::uint64_t cap) {
  if (!r->enumerable()) throw not_enumerable("local needs an enumerable ring");
  PropertyReport out{r->descriptor(), "local", false, std::nullopt, Method::Exhaustive, ""};
  std::vector<std::string> maximal;
  for (const Ideal& i : all_ideals(r, cap))
    if (i.is_proper() && is_maximal(i, cap)) maximal.push_back("(" + i.format_generators() + ")");
  out.verdict = maximal.size() == 1;
  out.note = std::to_string(maximal.size()) + " maximal ideal(s)";
  if (!out.verdict && !maximal.empty()) {
    std::string w;
    for (const std::string& m : maximal) w += (w.empty() ? "" : " ") + m;
    out.witness = w;
  }
  return out;
}

PropertyReport is_semisimple(const RingPtr& r) {
  PropertyReport out = is_vnr(r);
  out.property = "semisimple";
  out.method = Method::TheoremBacked;
  out.note = "finite, hence noetherian; semisimple = noetherian + vnr";
  return out;
}

PropertyReport is_perfect(const RingPtr& r) {
  if (!r->enumerable()) throw not_enumerable("perfect needs an enumerable ring");
  PerfectProbe probe = perfect_probe(r);
  PropertyReport out{r->descriptor(), "perfect", probe.stabilizes, std::nullopt,
                     Method::TheoremBacked, ""};
  out.note = "finite rings are perfect; principal power chains stabilize at depth " +
             std::to_string(probe.max_depth);
  return out;
}

PropertyReport is_steinitz(const RingPtr& r, std::uint64_t cap) {
  PropertyReport perfect = is_perfect(r);
  PropertyReport local = is_local(r, cap);
  PropertyReport out{r->descriptor(), "steinitz", perfect.verdict && local.verdict, std::nullopt,
                     Method::TheoremBacked, "steinitz = perfect + local; " + local.note};
  if (!out.verdict) out.witness = local.verdict ? "not perfect" : "not local";
  return out;
}

namespace {

// kernel evidence for up to three generator lists over an enumerable ring
std::string presentation_evidence(const RingPtr& r) {
  std::vector<std::vector<Value>> gen_lists;
  std::vector<Value> nonzero;
  for (std::uint64_t i = 1; i < r->cardinality() && nonzero.size() < 2; ++i)
    nonzero.push_back(r->element_at(i));
  gen_lists.push_back({r->zero()});
  if (!nonzero.empty()) gen_lists.push_back({nonzero[0]});
  if (nonzero.size() > 1) gen_lists.push_back({nonzero[0], nonzero[1]});

  std::string evidence;
  for (const auto& gens : gen_lists) {
    ModuleMap v{r, gens.size(), gens};
    std::vector<Tuple> kgens = kernel_generators(v);
    std::string item = "ker(";
    for (std::size_t k = 0; k < gens.size(); ++k)
      item += (k ? "," : "") + r->format(gens[k]);
    item += ") by " + std::to_string(kgens.size()) + " generator(s)";
    if (!evidence.empty()) evidence += "; ";
    evidence += item;
  }
  return evidence;
}

}  // namespace

PropertyReport is_coherent(const RingPtr& r) {
  PropertyReport out{r->descriptor(), "coherent", true, std::nullopt, Method::TheoremBacked, ""};
  if (!r->enumerable()) {
    out.note = r->domain_handle() ? "principal ideal domain" : "noetherian by construction";
    return out;
  }
  out.note = "finite, hence noetherian, hence coherent; " + presentation_evidence(r);
  return out;
}

PropertyReport is_noetherian(const RingPtr& r) {
  PropertyReport out{r->descriptor(), "noetherian", true, std::nullopt, Method::TheoremBacked, ""};
  out.note = r->enumerable() ? "finite" : "principal ideal domain or finite product";
  return out;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"reduced", "vnr",    "local",    "semisimple",
                                              "perfect", "steinitz", "coherent", "noetherian"};
  return names;
}

PropertyReport property_report(const RingPtr& r, std::string_view name, std::uint64_t cap) {
  if (name == "reduced") return is_reduced(r);
  if (name == "vnr") return is_vnr(r);
  if (name == "local") return is_local(r, cap);
  if (name == "semisimple") return is_semisimple(r);
  if (name == "perfect") return is_perfect(r);
  if (name == "steinitz") return is_steinitz(r, cap);
  if (name == "coherent") return is_coherent(r);
  if (name == "noetherian") return is_noetherian(r);
  throw parse_error("unknown property '" + std::string(name) + "'");
}

bool vnr_characterization_crosscheck(const RingPtr& r, std::uint64_t cap) {
  bool direct = is_vnr(r).verdict;
  bool reduced = is_reduced(r).verdict;
  bool zero_dim = true;
  for (const Ideal& p : spectrum(r, cap))
    if (!is_maximal(p, cap)) zero_dim = false;
  return direct == (reduced && zero_dim);
}

const std::vector<std::string>& transfer_theorems() {
  static const std::vector<std::string> names{"vnr", "semisimple", "perfect", "steinitz", "local"};
  return names;
}

TransferRecord verify_transfer(std::string_view theorem, const RingPtr& base, const Ideal& ideal,
                               std::uint64_t cap) {
  if (std::find(transfer_theorems().begin(), transfer_theorems().end(), theorem) ==
      transfer_theorems().end())
    throw parse_error("unknown transfer theorem '" + std::string(theorem) + "'");
  DupPtr d = duplicate(base, ideal);
  TransferRecord out;
  out.theorem = theorem;
  out.base = property_report(base, theorem, cap);
  out.dup = property_report(d, theorem, cap);
  out.agreement = out.base.verdict == out.dup.verdict;
  return out;
}

}  // namespace bowtie
