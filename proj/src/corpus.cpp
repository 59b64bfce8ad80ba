#include "bowtie/corpus.hpp"

#include <algorithm>

#include "bowtie/specparse.hpp"

namespace bowtie {

bool CorpusEntry::has_tag(std::string_view t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

// Every enumerable duplication here stays within 128 elements so the full
// lattice and spectrum machinery applies. Z/30 therefore ships only the
// divisors whose ideal is small enough.
const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus{
      {"z4-2", "Z/4", "2", {"local", "square-zero"}},
      {"z6-2", "Z/6", "2", {"squarefree"}},
      {"z6-3", "Z/6", "3", {"squarefree"}},
      {"z6-0", "Z/6", "", {"zero-ideal", "diagonal-smoke"}},
      {"z8-2", "Z/8", "2", {"local"}},
      {"z8-4", "Z/8", "4", {"local", "square-zero"}},
      {"z9-3", "Z/9", "3", {"local", "square-zero"}},
      {"z12-2", "Z/12", "2", {}},
      {"z12-3", "Z/12", "3", {}},
      {"z12-4", "Z/12", "4", {}},
      {"z12-6", "Z/12", "6", {"square-zero"}},
      {"z30-10", "Z/30", "10", {"squarefree"}},
      {"z30-15", "Z/30", "15", {"squarefree"}},
      {"gf2", "GF(2)", "", {"field", "zero-ideal"}},
      {"gf5", "GF(5)", "", {"field", "zero-ideal"}},
      {"gf4", "GF(2)[x]/(x^2+x+1)", "", {"field", "zero-ideal"}},
      {"gf2x-x2", "GF(2)[x]/(x^2)", "x", {"paper-example", "local", "square-zero"}},
      {"gf3x-x2", "GF(3)[x]/(x^2)", "x", {"local", "square-zero"}},
      {"z2xz2", "Z/2 x Z/2", "(1,0)", {"product", "squarefree"}},
      {"zz-2", "Z", "2", {"sampleable"}},
      {"zz-3", "Z", "3", {"sampleable"}},
      {"gf2x", "GF(2)[x]", "x", {"sampleable"}},
      {"gf3x", "GF(3)[x]", "x", {"sampleable"}},
  };
  return corpus;
}

CorpusInstance instantiate(const CorpusEntry& entry) {
  RingPtr ring = parse_ring_spec(entry.ring_spec);
  Ideal ideal = parse_ideal(ring, entry.ideal_gens);
  DupPtr dup = duplicate(ring, ideal);
  return CorpusInstance{entry, std::move(ring), std::move(ideal), std::move(dup)};
}

}  // namespace bowtie
