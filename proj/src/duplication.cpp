#include "bowtie/duplication.hpp"

#include <algorithm>
#include <set>

#include "bowtie/polyops.hpp"

namespace bowtie {

// --- DupRing -----------------------------------------------------------------

DupRing::DupRing(RingPtr base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {}

Value DupRing::make(Value r, Value i) const { return Value(Tuple{std::move(r), std::move(i)}); }

Value DupRing::from_pair(const Value& r, const Value& s) const {
  Value i = base_->sub(s, r);
  if (!ideal_.contains(i))
    throw invalid_element("(" + base_->format(r) + "," + base_->format(s) + ") is not an element of " +
                          descriptor() + ": difference lies outside the ideal");
  return make(r, std::move(i));
}

Value DupRing::second(const Value& e) const { return base_->add(first(e), delta(e)); }

std::string DupRing::descriptor() const {
  return "dup(" + base_->descriptor() + "; " + ideal_.format_generators() + ")";
}

std::uint64_t DupRing::cardinality() const { return base_->cardinality() * ideal_.size(); }

Value DupRing::element_at(std::uint64_t index) const {
  std::uint64_t m = ideal_.size();
  return make(base_->element_at(index / m), ideal_.elements()[index % m]);
}

std::uint64_t DupRing::index_of(const Value& v) const {
  const auto& elems = ideal_.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), delta(v));
  return base_->index_of(first(v)) * elems.size() +
         static_cast<std::uint64_t>(it - elems.begin());
}

Value DupRing::zero() const { return make(base_->zero(), base_->zero()); }
Value DupRing::one() const { return make(base_->one(), base_->zero()); }

Value DupRing::add(const Value& a, const Value& b) const {
  return make(base_->add(first(a), first(b)), base_->add(delta(a), delta(b)));
}

Value DupRing::neg(const Value& a) const {
  return make(base_->neg(first(a)), base_->neg(delta(a)));
}

Value DupRing::mul(const Value& a, const Value& b) const {
  // componentwise on the (r, r+i) view, restated on the internal form
  Value r = base_->mul(first(a), first(b));
  Value s = base_->mul(second(a), second(b));
  return make(r, base_->sub(s, r));
}

bool DupRing::contains(const Value& v) const {
  if (!v.is_tuple() || v.as_tuple().size() != 2) return false;
  return base_->contains(first(v)) && ideal_.contains(delta(v));
}

std::string DupRing::format(const Value& v) const {
  return "(" + base_->format(first(v)) + "," + base_->format(second(v)) + ")";
}

Value DupRing::parse_element(std::string_view text) const {
  auto [lhs, rhs] = split_pair_literal(text);
  return from_pair(base_->parse_element(lhs), base_->parse_element(rhs));
}

Value DupRing::sample_impl(SeededRng& rng, int bound) const {
  Value r = base_->sample(rng, bound);
  Value i = base_->zero();
  if (!ideal_.generators().empty())
    i = base_->mul(ideal_.generators()[0], base_->sample(rng, bound));
  return make(std::move(r), std::move(i));
}

DupPtr duplicate(const RingPtr& base, const Ideal& ideal) {
  if (!ideal.owner()->same_as(*base)) throw owner_mismatch("duplicate: ideal of a different ring");
  if (!ideal.is_proper()) throw improper_ideal("duplicate: the ideal must be proper");
  if (!base->enumerable() && ideal.generators().size() > 1)
    throw undecidable_membership("sampleable bases support principal ideals only");
  return std::make_shared<DupRing>(base, ideal);
}

// --- O1 / O2 -----------------------------------------------------------------

Ideal o1(const DupPtr& d) {
  std::vector<Value> gens;
  for (const Value& g : d->ideal().generators()) gens.push_back(d->make(d->base()->zero(), g));
  return Ideal::from_generators(d, std::move(gens));
}

Ideal o2(const DupPtr& d) {
  std::vector<Value> gens;
  for (const Value& g : d->ideal().generators())
    gens.push_back(d->make(g, d->base()->neg(g)));  // external (g, 0)
  return Ideal::from_generators(d, std::move(gens));
}

Element retraction(const DupPtr& d, const Value& e) {
  if (!d->contains(e)) throw invalid_element("retraction: not an element of " + d->descriptor());
  return Element(d->base(), d->first(e));
}

// --- D/O_i ≅ R ----------------------------------------------------------------

QuotientIso quotient_by_oi(const DupPtr& d, int which) {
  if (!d->enumerable()) throw not_enumerable("quotient_by_oi needs an enumerable duplication");
  if (which != 1 && which != 2) throw error("quotient_by_oi: which must be 1 or 2");
  Ideal oi = which == 1 ? o1(d) : o2(d);
  RingPtr q = quotient_ring(d, oi);
  const RingPtr& r = d->base();

  auto project = [&](const Value& e) { return which == 1 ? d->first(e) : d->second(e); };

  QuotientIso out{q, true, ""};
  auto fail = [&](std::string why) {
    out.isomorphic = false;
    if (out.detail.empty()) out.detail = std::move(why);
  };

  if (q->cardinality() != r->cardinality()) fail("coset count differs from |R|");

  std::set<Value> image;
  for (std::uint64_t i = 0; i < q->cardinality(); ++i) image.insert(project(q->element_at(i)));
  if (image.size() != r->cardinality()) fail("projection is not injective on cosets");

  if (!(project(q->one()) == r->one())) fail("unit is not preserved");
  for (std::uint64_t i = 0; i < q->cardinality() && out.isomorphic; ++i) {
    Value x = q->element_at(i);
    for (std::uint64_t j = 0; j < q->cardinality(); ++j) {
      Value y = q->element_at(j);
      if (!(project(q->add(x, y)) == r->add(project(x), project(y)))) {
        fail("addition not preserved at " + q->format(x) + ", " + q->format(y));
        break;
      }
      if (!(project(q->mul(x, y)) == r->mul(project(x), project(y)))) {
        fail("multiplication not preserved at " + q->format(x) + ", " + q->format(y));
        break;
      }
    }
  }
  return out;
}

// --- prime lifting -------------------------------------------------------------

namespace {

bool ideal_inside_prime(const Ideal& i, const Ideal& p) {
  for (const Value& g : i.generators())
    if (!p.contains(g)) return false;
  return true;
}

bool poly_irreducible(const Poly& f, Int p) {
  int d = polyops::deg(f);
  if (d < 1) return false;
  // trial division by monic polynomials of degree <= d/2
  for (int k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(k + 1, 0);
      std::uint64_t rest = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<Int>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      g[k] = 1;
      if (polyops::divides(g, f, p)) return false;
    }
  }
  return true;
}

// primality for the sampleable PID handles
bool sampleable_prime(const Ideal& p) {
  const RingPtr& r = p.owner();
  if (!p.is_proper()) throw improper_ideal("lift_prime: ideal is not proper");
  if (r->kind() == Ring::Kind::Integers) {
    Int g = 0;
    for (const Value& v : p.generators()) g = gcd_i64(g, v.as_int());
    return g == 0 || is_prime_u64(static_cast<std::uint64_t>(g < 0 ? -g : g));
  }
  if (r->kind() == Ring::Kind::PolyOverGF) {
    Poly g;
    for (const Value& v : p.generators()) g = polyops::gcd(g, v.as_poly(), r->characteristic());
    return g.empty() || poly_irreducible(g, r->characteristic());
  }
  throw undecidable_membership("primality is undecidable over " + r->descriptor());
}

}  // namespace

PrimeLift lift_prime(const DupPtr& d, const Ideal& p) {
  const RingPtr& r = d->base();
  if (!p.owner()->same_as(*r)) throw owner_mismatch("lift_prime: prime of a different ring");
  if (r->enumerable()) {
    if (!p.is_proper() || !is_prime(p)) throw not_prime("lift_prime: ideal is not prime");
  } else if (!sampleable_prime(p)) {
    throw not_prime("lift_prime: ideal is not prime");
  }

  const Ideal& ideal = d->ideal();
  bool contains_i = ideal_inside_prime(ideal, p);

  PrimeLift out;
  out.base_prime = p;
  out.kind = contains_i ? LiftCase::ContainsI : LiftCase::NotContainsI;

  if (r->enumerable()) {
    // materialize the three comprehensions directly
    std::set<Value> p1_set, p2_set, p0_set;
    for (const Value& pe : p.elements()) {
      for (const Value& i : ideal.elements()) {
        p1_set.insert(d->make(pe, i));
        p2_set.insert(d->make(r->add(pe, i), r->neg(i)));  // external (p+i, p)
        if (p.contains(i)) p0_set.insert(d->make(pe, i));
      }
    }
    Ideal p1 = Ideal::from_elements(d, {p1_set.begin(), p1_set.end()});
    Ideal p2 = Ideal::from_elements(d, {p2_set.begin(), p2_set.end()});
    out.p0 = Ideal::from_elements(d, {p0_set.begin(), p0_set.end()});
    if (contains_i) {
      if (!(p1 == p2) || !(p1 == *out.p0))
        throw error("lift_prime: P0, P1, P2 must coincide when I lies inside P");
      out.lifts.push_back(std::move(p1));
    } else {
      if (p1 == p2) throw error("lift_prime: P1 and P2 must differ when I escapes P");
      if (!(ideal_intersection(p1, p2) == *out.p0))
        throw error("lift_prime: P0 must be the intersection of P1 and P2");
      out.lifts.push_back(std::move(p1));
      out.lifts.push_back(std::move(p2));
    }
    return out;
  }

  // sampleable: record generator presentations only
  std::vector<Value> p1_gens, p2_gens;
  for (const Value& g : p.generators()) {
    p1_gens.push_back(d->make(g, r->zero()));
    p2_gens.push_back(d->make(g, r->zero()));
  }
  if (!ideal.generators().empty()) {
    const Value& a = ideal.generators()[0];
    p1_gens.push_back(d->make(r->zero(), a));
    p2_gens.push_back(d->make(a, r->neg(a)));
  }
  out.lifts.push_back(Ideal::from_generators(d, std::move(p1_gens)));
  if (!contains_i) out.lifts.push_back(Ideal::from_generators(d, std::move(p2_gens)));
  return out;
}

Descent descend_prime(const DupPtr& d, const Ideal& q) {
  if (!d->enumerable()) throw not_enumerable("descend_prime needs an enumerable duplication");
  if (!q.owner()->same_as(*d)) throw owner_mismatch("descend_prime: ideal of a different ring");
  if (!q.is_proper() || !is_prime(q)) throw not_prime("descend_prime: ideal is not prime");

  const RingPtr& r = d->base();
  std::vector<Value> p_set;
  for (std::uint64_t i = 0; i < r->cardinality(); ++i) {
    Value v = r->element_at(i);
    if (q.contains(d->make(v, r->zero()))) p_set.push_back(v);
  }
  Ideal p = Ideal::from_elements(r, std::move(p_set));

  Ideal o1_ideal = o1(d);
  bool over_o1 = true;
  for (const Value& e : o1_ideal.elements())
    if (!q.contains(e)) {
      over_o1 = false;
      break;
    }

  PrimeLift lift = lift_prime(d, p);
  if (!over_o1 && lift.kind != LiftCase::NotContainsI)
    throw error("descend_prime: case split violated");
  const Ideal& expected = over_o1 ? lift.lifts[0] : lift.lifts.back();
  if (!(q == expected))
    throw error("descend_prime: lifted prime does not reproduce the input");
  return Descent{std::move(p), over_o1 ? DescendCase::ContainsO1 : DescendCase::OmitsO1};
}

// --- idealization ------------------------------------------------------------------

namespace {

class IdealizationRing final : public Ring {
 public:
  IdealizationRing(RingPtr base, Ideal ideal) : base_(std::move(base)), ideal_(std::move(ideal)) {}

  Kind kind() const override { return Kind::Idealization; }
  std::string descriptor() const override {
    return "idealization(" + base_->descriptor() + "; " + ideal_.format_generators() + ")";
  }
  bool enumerable() const override { return base_->enumerable(); }
  std::uint64_t cardinality() const override { return base_->cardinality() * ideal_.size(); }
  Value element_at(std::uint64_t index) const override {
    std::uint64_t m = ideal_.size();
    return Value(Tuple{base_->element_at(index / m), ideal_.elements()[index % m]});
  }
  std::uint64_t index_of(const Value& v) const override {
    const auto& elems = ideal_.elements();
    auto it = std::lower_bound(elems.begin(), elems.end(), v.as_tuple()[1]);
    return base_->index_of(v.as_tuple()[0]) * elems.size() +
           static_cast<std::uint64_t>(it - elems.begin());
  }
  Value zero() const override { return Value(Tuple{base_->zero(), base_->zero()}); }
  Value one() const override { return Value(Tuple{base_->one(), base_->zero()}); }
  Value add(const Value& a, const Value& b) const override {
    const Tuple& s = a.as_tuple();
    const Tuple& t = b.as_tuple();
    return Value(Tuple{base_->add(s[0], t[0]), base_->add(s[1], t[1])});
  }
  Value neg(const Value& a) const override {
    const Tuple& s = a.as_tuple();
    return Value(Tuple{base_->neg(s[0]), base_->neg(s[1])});
  }
  Value mul(const Value& a, const Value& b) const override {
    const Tuple& s = a.as_tuple();
    const Tuple& t = b.as_tuple();
    // (r,m)(s,n) = (rs, rn + sm)
    return Value(Tuple{base_->mul(s[0], t[0]),
                       base_->add(base_->mul(s[0], t[1]), base_->mul(t[0], s[1]))});
  }
  bool contains(const Value& v) const override {
    if (!v.is_tuple() || v.as_tuple().size() != 2) return false;
    return base_->contains(v.as_tuple()[0]) && ideal_.contains(v.as_tuple()[1]);
  }
  std::string format(const Value& v) const override {
    const Tuple& t = v.as_tuple();
    return "(" + base_->format(t[0]) + "," + base_->format(t[1]) + ")";
  }
  Value parse_element(std::string_view text) const override {
    auto [lhs, rhs] = split_pair_literal(text);
    Value m = base_->parse_element(rhs);
    if (!ideal_.contains(m))
      throw invalid_element("second component must lie in the ideal");
    return Value(Tuple{base_->parse_element(lhs), std::move(m)});
  }

 protected:
  Value sample_impl(SeededRng& rng, int bound) const override {
    Value m = base_->zero();
    if (!ideal_.generators().empty())
      m = base_->mul(ideal_.generators()[0], base_->sample(rng, bound));
    return Value(Tuple{base_->sample(rng, bound), std::move(m)});
  }

 private:
  RingPtr base_;
  Ideal ideal_;
};

}  // namespace

RingPtr idealization(const RingPtr& base, const Ideal& ideal) {
  if (!ideal.owner()->same_as(*base)) throw owner_mismatch("idealization: ideal of a different ring");
  return std::make_shared<IdealizationRing>(base, ideal);
}

IsoVerdict iso_dup_idealization(const RingPtr& base, const Ideal& ideal) {
  if (!base->enumerable()) throw not_enumerable("iso_dup_idealization needs an enumerable base");
  for (const Value& i : ideal.elements())
    for (const Value& j : ideal.elements())
      if (!base->is_zero(base->mul(i, j)))
        throw square_not_zero("I^2 != 0: " + base->format(i) + " * " + base->format(j) + " = " +
                              base->format(base->mul(i, j)));

  DupPtr d = duplicate(base, ideal);
  RingPtr t = idealization(base, ideal);

  IsoVerdict out{true, 0, ""};
  auto fail = [&](const Value& e, const Value& f, const char* what) {
    if (out.isomorphic) {
      out.isomorphic = false;
      out.counterexample = std::string(what) + " at " + d->format(e) + ", " + d->format(f);
    }
  };

  // the payload map (r, i) -> (r, i) is a bijection by construction; the
  // content is compatibility of the two multiplications
  if (!(d->one() == t->one())) {
    out.isomorphic = false;
    out.counterexample = "units differ";
  }
  std::uint64_t n = d->cardinality();
  for (std::uint64_t a = 0; a < n; ++a) {
    Value e = d->element_at(a);
    if (!t->contains(e)) fail(e, e, "payload not shared");
    for (std::uint64_t b = 0; b < n; ++b) {
      Value f = d->element_at(b);
      ++out.pairs_checked;
      if (!(d->add(e, f) == t->add(e, f))) fail(e, f, "addition differs");
      if (!(d->mul(e, f) == t->mul(e, f))) fail(e, f, "multiplication differs");
    }
  }
  return out;
}

}  // namespace bowtie
