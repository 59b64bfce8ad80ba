#pragma once

#include "bowtie/duplication.hpp"

namespace bowtie {

struct CorpusEntry {
  std::string id;
  std::string ring_spec;
  std::string ideal_gens;  // comma-separated element literals, "" = zero ideal
  std::vector<std::string> tags;
  bool has_tag(std::string_view t) const;
};

// the built-in verification corpus: (ring, ideal) pairs the suite runs over
const std::vector<CorpusEntry>& builtin_corpus();

struct CorpusInstance {
  CorpusEntry entry;
  RingPtr ring;
  Ideal ideal;
  DupPtr dup;
};

CorpusInstance instantiate(const CorpusEntry& entry);

}  // namespace bowtie
