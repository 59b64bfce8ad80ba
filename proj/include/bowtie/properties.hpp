#pragma once

#include <optional>

#include "bowtie/ideal.hpp"

namespace bowtie {

enum class Method { Exhaustive, Sampled, TheoremBacked };

const char* method_name(Method m);

struct PropertyReport {
  std::string ring;       // descriptor
  std::string property;   // one of property_names()
  bool verdict = false;
  std::optional<std::string> witness;  // first counterexample in enumeration order
  Method method = Method::Exhaustive;
  std::string note;       // theorem justification, probe depth, kernel evidence
};

PropertyReport is_reduced(const RingPtr& r);
PropertyReport is_vnr(const RingPtr& r);
PropertyReport is_local(const RingPtr& r, std::uint64_t cap = kDefaultLatticeCap);
PropertyReport is_semisimple(const RingPtr& r);
PropertyReport is_perfect(const RingPtr& r);
PropertyReport is_steinitz(const RingPtr& r, std::uint64_t cap = kDefaultLatticeCap);
PropertyReport is_coherent(const RingPtr& r);
PropertyReport is_noetherian(const RingPtr& r);

// dispatch by property name (exact CLI strings)
PropertyReport property_report(const RingPtr& r, std::string_view name,
                               std::uint64_t cap = kDefaultLatticeCap);
const std::vector<std::string>& property_names();

// vnr  <=>  reduced and every prime maximal
bool vnr_characterization_crosscheck(const RingPtr& r, std::uint64_t cap = kDefaultLatticeCap);

struct TransferRecord {
  std::string theorem;  // vnr | semisimple | perfect | steinitz | local
  PropertyReport base;
  PropertyReport dup;
  bool agreement = false;
};

// runs the property on R and on R ⋈ I and records biconditional agreement
TransferRecord verify_transfer(std::string_view theorem, const RingPtr& base, const Ideal& ideal,
                               std::uint64_t cap = kDefaultLatticeCap);
const std::vector<std::string>& transfer_theorems();

}  // namespace bowtie
