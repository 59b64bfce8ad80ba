#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bowtie/ring.hpp"

namespace bowtie {

inline constexpr std::uint64_t kDefaultLatticeCap = 128;

// Finitely generated ideal. Enumerable owners materialize the full element
// set as the closure of the generators; over Z and GF(p)[x] membership is
// gcd divisibility; other sampleable owners reject membership queries.
class Ideal {
 public:
  static Ideal from_generators(RingPtr owner, std::vector<Value> gens);
  static Ideal from_generators(RingPtr owner, const std::vector<Element>& gens);
  static Ideal from_elements(RingPtr owner, std::vector<Value> elems);
  static Ideal zero_ideal(RingPtr owner);
  static Ideal whole_ring(RingPtr owner);

  const RingPtr& owner() const { return owner_; }
  const std::vector<Value>& generators() const { return generators_; }
  bool materialized() const { return elements_.has_value(); }
  // sorted element set; enumerable owners only
  const std::vector<Value>& elements() const;
  std::uint64_t size() const { return elements().size(); }

  bool contains(const Value& v) const;
  bool contains(const Element& e) const;  // checks the owner first
  bool is_proper() const;
  bool is_zero() const;
  std::string format_generators() const;

  // element-set equality for materialized ideals, canonical-generator
  // equality for the principal gcd cases
  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

  Ideal() = default;  // empty shell; every factory above yields a valid ideal

 private:
  RingPtr owner_;
  std::vector<Value> generators_;
  std::optional<std::vector<Value>> elements_;
  std::optional<Value> principal_gcd_;  // Z / GF(p)[x] owners
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

// (0 : a) = { r : r*a = 0 }, materialized; enumerable owners only
Ideal colon_annihilator(const RingPtr& r, const Value& a);

bool is_prime(const Ideal& p);
bool is_maximal(const Ideal& p, std::uint64_t cap = kDefaultLatticeCap);

// complete ideal lattice / its prime part, in a deterministic order
std::vector<Ideal> all_ideals(const RingPtr& r, std::uint64_t cap = kDefaultLatticeCap);
std::vector<Ideal> spectrum(const RingPtr& r, std::uint64_t cap = kDefaultLatticeCap);

bool contains_regular_element(const Ideal& i);

// R/I over coset representatives (least element of each coset in the base
// enumeration order)
RingPtr quotient_ring(const RingPtr& base, const Ideal& i);

// closure of a generator list inside the owner: smallest subset containing
// the generators that is an additive subgroup closed under ring scaling
std::vector<Value> ideal_closure(const RingPtr& r, const std::vector<Value>& gens);

}  // namespace bowtie
