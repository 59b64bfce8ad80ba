#include "bowtie/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "bowtie/polyops.hpp"

namespace bowtie {

namespace {

bool has_value(const std::vector<Value>& sorted, const Value& v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Z and GF(p)[x] ideals collapse to a single canonical generator.
std::optional<Value> principal_gcd(const RingPtr& owner, const std::vector<Value>& gens) {
  if (owner->kind() == Ring::Kind::Integers) {
    Int g = 0;
    for (const Value& v : gens) g = gcd_i64(g, v.as_int());
    return Value(g);
  }
  if (owner->kind() == Ring::Kind::PolyOverGF) {
    Poly g;
    for (const Value& v : gens) g = polyops::gcd(g, v.as_poly(), owner->characteristic());
    return Value(g);
  }
  return std::nullopt;
}

}  // namespace

std::vector<Value> ideal_closure(const RingPtr& r, const std::vector<Value>& gens) {
  // all ring multiples of the generators, then the additive subgroup they span
  std::set<Value> multiples;
  std::uint64_t n = r->cardinality();
  for (const Value& g : gens)
    for (std::uint64_t i = 0; i < n; ++i) multiples.insert(r->mul(r->element_at(i), g));
  multiples.erase(r->zero());

  std::set<Value> closure{r->zero()};
  std::vector<Value> frontier{r->zero()};
  while (!frontier.empty()) {
    Value v = std::move(frontier.back());
    frontier.pop_back();
    for (const Value& m : multiples) {
      Value next = r->add(v, m);
      if (closure.insert(next).second) frontier.push_back(next);
    }
  }
  return {closure.begin(), closure.end()};
}

Ideal Ideal::from_generators(RingPtr owner, std::vector<Value> gens) {
  for (const Value& g : gens)
    if (!owner->contains(g))
      throw owner_mismatch("generator " + owner->format(g) + " is not an element of " + owner->descriptor());
  Ideal out;
  out.owner_ = owner;
  out.generators_ = std::move(gens);
  if (owner->enumerable()) {
    out.elements_ = ideal_closure(owner, out.generators_);
  } else {
    out.principal_gcd_ = principal_gcd(owner, out.generators_);
  }
  return out;
}

Ideal Ideal::from_generators(RingPtr owner, const std::vector<Element>& gens) {
  std::vector<Value> vals;
  vals.reserve(gens.size());
  for (const Element& g : gens) {
    if (!g.ring()->same_as(*owner)) throw owner_mismatch("generator owned by " + g.ring()->descriptor());
    vals.push_back(g.value());
  }
  return from_generators(std::move(owner), std::move(vals));
}

Ideal Ideal::from_elements(RingPtr owner, std::vector<Value> elems) {
  if (!owner->enumerable()) throw not_enumerable("from_elements needs an enumerable owner");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());

  // greedy generating subset: keep an element only if the others so far
  // do not already generate it
  std::vector<Value> gens;
  std::vector<Value> span{owner->zero()};
  for (const Value& v : elems) {
    if (has_value(span, v)) continue;
    gens.push_back(v);
    span = ideal_closure(owner, gens);
  }

  Ideal out;
  out.owner_ = std::move(owner);
  out.generators_ = std::move(gens);
  out.elements_ = std::move(span);
  if (out.elements_->size() != elems.size() || !std::equal(elems.begin(), elems.end(), out.elements_->begin()))
    throw error("element set is not an ideal of " + out.owner_->descriptor());
  return out;
}

Ideal Ideal::zero_ideal(RingPtr owner) { return from_generators(std::move(owner), std::vector<Value>{}); }

Ideal Ideal::whole_ring(RingPtr owner) {
  Value one = owner->one();
  return from_generators(std::move(owner), std::vector<Value>{one});
}

const std::vector<Value>& Ideal::elements() const {
  if (!elements_) throw not_enumerable("ideal over " + owner_->descriptor() + " is not materialized");
  return *elements_;
}

bool Ideal::contains(const Value& v) const {
  if (elements_) return has_value(*elements_, v);
  if (!principal_gcd_)
    throw undecidable_membership("membership is undecidable over " + owner_->descriptor());
  if (owner_->kind() == Ring::Kind::Integers) {
    Int g = principal_gcd_->as_int();
    if (g == 0) return v.as_int() == 0;
    return v.as_int() % g == 0;
  }
  return polyops::divides(principal_gcd_->as_poly(), v.as_poly(), owner_->characteristic());
}

bool Ideal::contains(const Element& e) const {
  if (!e.ring() || !e.ring()->same_as(*owner_))
    throw owner_mismatch("membership query with an element of " +
                         (e.ring() ? e.ring()->descriptor() : std::string("<none>")));
  return contains(e.value());
}

bool Ideal::is_proper() const { return !contains(owner_->one()); }

bool Ideal::is_zero() const {
  if (elements_) return elements_->size() == 1;
  if (principal_gcd_) return owner_->is_zero(*principal_gcd_);
  for (const Value& g : generators_)
    if (!owner_->is_zero(g)) return false;
  return true;
}

std::string Ideal::format_generators() const {
  if (generators_.empty()) return "0";
  std::string out;
  for (const Value& g : generators_) {
    if (!out.empty()) out += ",";
    out += owner_->format(g);
  }
  return out;
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (!a.owner_->same_as(*b.owner_)) return false;
  if (a.elements_ && b.elements_) return *a.elements_ == *b.elements_;
  if (a.principal_gcd_ && b.principal_gcd_) return *a.principal_gcd_ == *b.principal_gcd_;
  throw undecidable_membership("cannot compare ideals over " + a.owner_->descriptor());
}

// --- lattice operations -------------------------------------------------------

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!a.owner()->same_as(*b.owner())) throw owner_mismatch("ideal_sum: different owners");
  std::vector<Value> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal::from_generators(a.owner(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!a.owner()->same_as(*b.owner())) throw owner_mismatch("ideal_product: different owners");
  if (!a.owner()->enumerable()) throw not_enumerable("ideal_product needs an enumerable owner");
  std::vector<Value> gens;
  for (const Value& x : a.generators())
    for (const Value& y : b.generators()) gens.push_back(a.owner()->mul(x, y));
  return Ideal::from_generators(a.owner(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  if (!a.owner()->same_as(*b.owner())) throw owner_mismatch("ideal_intersection: different owners");
  if (!a.owner()->enumerable()) throw not_enumerable("ideal_intersection needs an enumerable owner");
  std::vector<Value> common;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(common));
  return Ideal::from_elements(a.owner(), std::move(common));
}

Ideal colon_annihilator(const RingPtr& r, const Value& a) {
  if (!r->enumerable()) throw not_enumerable("colon_annihilator needs an enumerable ring");
  std::vector<Value> ann;
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    Value x = r->element_at(i);
    if (r->is_zero(r->mul(x, a))) ann.push_back(x);
  }
  return Ideal::from_elements(r, std::move(ann));
}

bool is_prime(const Ideal& p) {
  const RingPtr& r = p.owner();
  if (!r->enumerable()) throw not_enumerable("is_prime needs an enumerable owner");
  if (!p.is_proper()) throw improper_ideal("is_prime: ideal is not proper");
  std::vector<Value> outside;
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    Value v = r->element_at(i);
    if (!p.contains(v)) outside.push_back(v);
  }
  for (const Value& a : outside)
    for (const Value& b : outside)
      if (p.contains(r->mul(a, b))) return false;
  return true;
}

// --- lattice enumeration --------------------------------------------------------

namespace {

// all_ideals is hit repeatedly by the property checkers; memoize per ring
struct LatticeCache {
  std::mutex mu;
  std::map<std::string, std::vector<Ideal>> entries;
};

LatticeCache& lattice_cache() {
  static LatticeCache cache;
  return cache;
}

}  // namespace

std::vector<Ideal> all_ideals(const RingPtr& r, std::uint64_t cap) {
  if (!r->enumerable()) throw not_enumerable("all_ideals needs an enumerable ring");
  if (r->cardinality() > cap)
    throw cap_exceeded("|" + r->descriptor() + "| = " + std::to_string(r->cardinality()) +
                       " exceeds the lattice cap " + std::to_string(cap));
  {
    std::lock_guard<std::mutex> lock(lattice_cache().mu);
    auto it = lattice_cache().entries.find(r->descriptor());
    if (it != lattice_cache().entries.end()) return it->second;
  }

  // principal ideals, then close under pairwise sums to a fixpoint
  std::set<std::vector<Value>> seen;
  std::vector<std::vector<Value>> sets;
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    auto closure = ideal_closure(r, {r->element_at(i)});
    if (seen.insert(closure).second) sets.push_back(closure);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = sets.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<Value> unioned;
        std::set_union(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                       std::back_inserter(unioned));
        auto closure = ideal_closure(r, unioned);
        if (seen.insert(closure).second) {
          sets.push_back(closure);
          grew = true;
        }
      }
    }
  }

  std::sort(sets.begin(), sets.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  std::vector<Ideal> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Ideal::from_elements(r, std::move(s)));

  std::lock_guard<std::mutex> lock(lattice_cache().mu);
  lattice_cache().entries.emplace(r->descriptor(), out);
  return out;
}

bool is_maximal(const Ideal& p, std::uint64_t cap) {
  if (!p.is_proper()) throw improper_ideal("is_maximal: ideal is not proper");
  for (const Ideal& j : all_ideals(p.owner(), cap)) {
    if (!j.is_proper() || j.size() <= p.size()) continue;
    if (std::includes(j.elements().begin(), j.elements().end(), p.elements().begin(),
                      p.elements().end()) &&
        j.size() > p.size())
      return false;
  }
  return true;
}

std::vector<Ideal> spectrum(const RingPtr& r, std::uint64_t cap) {
  std::vector<Ideal> primes;
  for (const Ideal& i : all_ideals(r, cap))
    if (i.is_proper() && is_prime(i)) primes.push_back(i);
  return primes;
}

bool contains_regular_element(const Ideal& i) {
  const RingPtr& r = i.owner();
  if (r->enumerable()) {
    for (const Value& x : i.elements()) {
      bool regular = true;
      for (std::uint64_t k = 0; k < r->cardinality(); ++k) {
        Value y = r->element_at(k);
        if (!r->is_zero(y) && r->is_zero(r->mul(x, y))) {
          regular = false;
          break;
        }
      }
      if (regular && !r->is_zero(x)) return true;
    }
    return false;
  }
  if (r->domain_handle()) return !i.is_zero();  // nonzero elements of a domain are regular
  throw undecidable_membership("regularity is undecidable over " + r->descriptor());
}

// --- quotient rings ----------------------------------------------------------------

namespace {

class QuotientRing final : public Ring {
 public:
  QuotientRing(RingPtr base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {
    // representative = least element of each coset in base enumeration order
    std::map<Value, Value> rep_of;
    for (std::uint64_t i = 0; i < base_->cardinality(); ++i) {
      Value v = base_->element_at(i);
      if (rep_of.count(v)) continue;
      reps_.push_back(v);
      for (const Value& j : ideal_.elements()) rep_of.emplace(base_->add(v, j), v);
    }
    rep_of_ = std::move(rep_of);
  }

  Kind kind() const override { return Kind::Quotient; }
  std::string descriptor() const override {
    return "quot(" + base_->descriptor() + "; " + ideal_.format_generators() + ")";
  }
  bool enumerable() const override { return true; }
  std::uint64_t cardinality() const override { return reps_.size(); }
  Value element_at(std::uint64_t index) const override { return reps_.at(index); }
  std::uint64_t index_of(const Value& v) const override {
    for (std::uint64_t i = 0; i < reps_.size(); ++i)
      if (reps_[i] == v) return i;
    throw error("not a coset representative");
  }
  Value zero() const override { return reduce(base_->zero()); }
  Value one() const override { return reduce(base_->one()); }
  Value add(const Value& a, const Value& b) const override { return reduce(base_->add(a, b)); }
  Value neg(const Value& a) const override { return reduce(base_->neg(a)); }
  Value mul(const Value& a, const Value& b) const override { return reduce(base_->mul(a, b)); }
  bool contains(const Value& v) const override {
    auto it = rep_of_.find(v);
    return it != rep_of_.end() && it->second == v;
  }
  std::string format(const Value& v) const override { return base_->format(v); }
  Value parse_element(std::string_view text) const override {
    return reduce(base_->parse_element(text));
  }
  Value reduce(const Value& v) const { return rep_of_.at(v); }

 private:
  RingPtr base_;
  Ideal ideal_;
  std::vector<Value> reps_;
  std::map<Value, Value> rep_of_;
};

}  // namespace

RingPtr quotient_ring(const RingPtr& base, const Ideal& i) {
  if (!base->enumerable()) throw not_enumerable("quotient_ring needs an enumerable base");
  if (!i.owner()->same_as(*base)) throw owner_mismatch("quotient_ring: ideal of a different ring");
  return std::make_shared<QuotientRing>(base, i);
}

}  // namespace bowtie
