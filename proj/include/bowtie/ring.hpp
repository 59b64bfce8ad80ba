#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bowtie/errors.hpp"
#include "bowtie/rng.hpp"
#include "bowtie/value.hpp"

namespace bowtie {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A computable commutative ring with unit. Enumerable rings expose a stable
// element order through element_at; sampleable rings draw bounded random
// elements instead. Handles are immutable and operations are pure, so rings
// and elements can be shared freely across threads.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind {
    Integers,      // Z
    Modular,       // Z/n and GF(p)
    PolyOverGF,    // GF(p)[x]
    QuotPoly,      // GF(p)[x]/(f)
    Product,
    Dup,
    Idealization,
    Quotient,
  };

  virtual ~Ring() = default;

  virtual Kind kind() const = 0;
  virtual std::string descriptor() const = 0;
  virtual bool enumerable() const = 0;
  virtual std::uint64_t cardinality() const;
  virtual Value element_at(std::uint64_t index) const;
  virtual std::uint64_t index_of(const Value& v) const;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  Value sub(const Value& a, const Value& b) const { return add(a, neg(b)); }
  Value pow(Value a, std::uint64_t k) const;

  // canonical-form validity of a payload for this ring
  virtual bool contains(const Value& v) const = 0;
  virtual std::string format(const Value& v) const = 0;
  virtual Value parse_element(std::string_view text) const = 0;

  // Enumerable rings sample uniformly over their elements (bound ignored);
  // sampleable rings draw |value| <= bound resp. degree <= bound.
  Value sample(SeededRng& rng, int bound) const;

  bool is_zero(const Value& v) const { return v == zero(); }
  bool is_one(const Value& v) const { return v == one(); }
  bool same_as(const Ring& other) const;

  // integral-domain handles: Z, GF(p)[x], GF(p)
  virtual bool domain_handle() const { return false; }

  // coefficient characteristic for the GF(p) based rings, 0 elsewhere
  virtual Int characteristic() const { return 0; }

 protected:
  virtual Value sample_impl(SeededRng& rng, int bound) const;
};

// A value tagged with its owning ring. Arithmetic checks that both operands
// belong to the same ring and throws owner_mismatch otherwise.
class Element {
 public:
  Element() = default;
  Element(RingPtr ring, Value v);

  const RingPtr& ring() const { return ring_; }
  const Value& value() const { return value_; }
  std::string str() const { return ring_->format(value_); }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element operator-() const { return Element(ring_, ring_->neg(value_)); }
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  RingPtr ring_;
  Value value_;
};

// ring-spec DSL, base grammar:
//   ring := "Z" | "Z/" nat | "GF(" p ")" | "GF(" p ")[x]"
//         | "GF(" p ")[x]/(" poly ")" | ring " x " ring
RingPtr make_ring(std::string_view spec);

RingPtr make_integers();
RingPtr make_modular(std::uint64_t n);                   // Z/n, n >= 2
RingPtr make_prime_field(std::uint64_t p);               // GF(p)
RingPtr make_poly_over_gf(std::uint64_t p);              // GF(p)[x]
RingPtr make_quot_poly(std::uint64_t p, Poly modulus);   // GF(p)[x]/(f), f monic
RingPtr product_ring(const RingPtr& a, const RingPtr& b);

std::vector<Element> enumerate(const RingPtr& r);
Element sample_element(const RingPtr& r, SeededRng& rng, int bound);

struct SpecialElements {
  std::vector<Value> units;
  std::vector<Value> idempotents;
  std::vector<Value> nilpotents;
};
SpecialElements special_elements(const RingPtr& r);

bool is_prime_u64(std::uint64_t n);
bool is_squarefree_u64(std::uint64_t n);
std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

// splits "(a,b)" at its top-level comma; used by every pair-shaped ring
std::pair<std::string, std::string> split_pair_literal(std::string_view text);

}  // namespace bowtie
