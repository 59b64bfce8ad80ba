#pragma once

#include <optional>

#include "bowtie/ideal.hpp"

namespace bowtie {

// The ring R ⋈ I: pairs (r, s) of base elements with s - r in I. Stored
// internally as (r, i) with i = s - r, so the membership constraint holds by
// construction; the (r, s) view is a formatting concern.
class DupRing final : public Ring {
 public:
  DupRing(RingPtr base, Ideal ideal);

  const RingPtr& base() const { return base_; }
  const Ideal& ideal() const { return ideal_; }

  Value make(Value r, Value i) const;               // internal form (r, i)
  Value from_pair(const Value& r, const Value& s) const;  // validates s - r in I
  const Value& delta(const Value& e) const { return e.as_tuple()[1]; }       // i
  const Value& first(const Value& e) const { return e.as_tuple()[0]; }       // r
  Value second(const Value& e) const;                                        // r + i

  bool in_o1(const Value& e) const { return base_->is_zero(first(e)); }
  bool in_o2(const Value& e) const { return base_->is_zero(second(e)); }

  Kind kind() const override { return Kind::Dup; }
  std::string descriptor() const override;
  bool enumerable() const override { return base_->enumerable(); }
  std::uint64_t cardinality() const override;
  Value element_at(std::uint64_t index) const override;
  std::uint64_t index_of(const Value& v) const override;
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  bool contains(const Value& v) const override;
  std::string format(const Value& v) const override;
  Value parse_element(std::string_view text) const override;

 protected:
  Value sample_impl(SeededRng& rng, int bound) const override;

 private:
  RingPtr base_;
  Ideal ideal_;
};

using DupPtr = std::shared_ptr<const DupRing>;

DupPtr duplicate(const RingPtr& base, const Ideal& ideal);

// O1 = {(0, i)} and O2 = {(i, 0)}; for principal I = (a) the generators are
// (0, a) and (a, 0)
Ideal o1(const DupPtr& d);
Ideal o2(const DupPtr& d);

// the module retraction (r, r+i) -> r
Element retraction(const DupPtr& d, const Value& e);

struct QuotientIso {
  RingPtr quotient;
  bool isomorphic;
  std::string detail;  // failure site, empty on success
};
// builds D/O_i and checks that the surviving projection is a ring
// isomorphism onto the base
QuotientIso quotient_by_oi(const DupPtr& d, int which);

enum class LiftCase { ContainsI, NotContainsI };

struct PrimeLift {
  Ideal base_prime;
  LiftCase kind;
  std::vector<Ideal> lifts;   // [P1] when I ⊆ P, else [P1, P2]
  std::optional<Ideal> p0;    // intersection of the lifts (enumerable only)
};

PrimeLift lift_prime(const DupPtr& d, const Ideal& p);

enum class DescendCase { OmitsO1, ContainsO1 };  // Q ⊉ O1 -> Q = P2; Q ⊇ O1 -> Q = P1

struct Descent {
  Ideal base_prime;
  DescendCase kind;
};

Descent descend_prime(const DupPtr& d, const Ideal& q);

// the idealization R ∝ I on pairs (r, m) with (r,m)(s,n) = (rs, rn + sm)
RingPtr idealization(const RingPtr& base, const Ideal& ideal);

struct IsoVerdict {
  bool isomorphic;
  std::uint64_t pairs_checked;
  std::string counterexample;  // empty when isomorphic
};

// when I^2 = 0, (r, r+i) -> (r, i) is a ring isomorphism R ⋈ I -> R ∝ I;
// throws square_not_zero when the hypothesis fails
IsoVerdict iso_dup_idealization(const RingPtr& base, const Ideal& ideal);

}  // namespace bowtie
