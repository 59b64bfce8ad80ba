#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bowtie/duplication.hpp"

using namespace bowtie;

namespace {

Ideal princ(const RingPtr& r, const char* g) {
  return Ideal::from_generators(r, std::vector<Value>{r->parse_element(g)});
}

std::set<std::string> formatted(const DupPtr& d, const Ideal& i) {
  std::set<std::string> out;
  for (const Value& v : i.elements()) out.insert(d->format(v));
  return out;
}

}  // namespace

TEST_CASE("duplication cardinality") {
  RingPtr z6 = make_ring("Z/6");
  DupPtr d = duplicate(z6, princ(z6, "2"));
  CHECK(d->cardinality() == 18);  // 6 * 3
  CHECK(d->descriptor() == "dup(Z/6; 2)");

  RingPtr z4 = make_ring("Z/4");
  CHECK(duplicate(z4, princ(z4, "2"))->cardinality() == 8);

  // zero ideal duplicates onto the diagonal
  DupPtr diag = duplicate(z6, Ideal::zero_ideal(z6));
  CHECK(diag->cardinality() == 6);
  for (const Element& e : enumerate(RingPtr(diag)))
    CHECK(diag->first(e.value()) == diag->second(e.value()));

  CHECK_THROWS_AS(duplicate(z6, Ideal::whole_ring(z6)), improper_ideal);
}

TEST_CASE("pair validity is enforced") {
  RingPtr z6 = make_ring("Z/6");
  DupPtr d = duplicate(z6, princ(z6, "2"));
  Value ok = d->from_pair(Value{3}, Value{5});  // 5 - 3 = 2 in (2)
  CHECK(d->format(ok) == "(3,5)");
  CHECK_THROWS_AS(d->from_pair(Value{3}, Value{4}), invalid_element);
  CHECK(d->parse_element("(3,5)") == ok);
  CHECK_THROWS_AS(d->parse_element("(0,1)"), invalid_element);

  CHECK(d->one() == d->parse_element("(1,1)"));
  CHECK(d->zero() == d->parse_element("(0,0)"));
}

TEST_CASE("dup arithmetic is componentwise on the pair view") {
  RingPtr z6 = make_ring("Z/6");
  DupPtr d = duplicate(z6, princ(z6, "2"));
  Value a = d->parse_element("(1,3)");
  Value b = d->parse_element("(2,4)");
  CHECK(d->format(d->add(a, b)) == "(3,1)");
  CHECK(d->format(d->mul(a, b)) == "(2,0)");

  // closure: every product and sum satisfies the membership predicate
  for (const Element& e : enumerate(RingPtr(d)))
    for (const Element& f : enumerate(RingPtr(d))) {
      CHECK(d->contains(d->add(e.value(), f.value())));
      CHECK(d->contains(d->mul(e.value(), f.value())));
    }
}

TEST_CASE("closure holds on sampled elements over a sampleable base") {
  RingPtr z = make_ring("Z");
  DupPtr d = duplicate(z, princ(z, "2"));
  SeededRng rng(11);
  for (int t = 0; t < 1000; ++t) {
    Value e = d->sample(rng, 40);
    Value f = d->sample(rng, 40);
    CHECK(d->contains(d->add(e, f)));
    CHECK(d->contains(d->mul(e, f)));
  }
  // nilpotency search over the duplication of a domain comes up empty
  SeededRng rng2(12);
  for (int t = 0; t < 1000; ++t) {
    Value e = d->sample(rng2, 40);
    if (d->is_zero(e)) continue;
    Value p = e;
    for (int k = 0; k < 4; ++k) {
      p = d->mul(p, e);
      CHECK_FALSE(d->is_zero(p));
    }
  }
}

TEST_CASE("O1 and O2") {
  RingPtr z6 = make_ring("Z/6");
  DupPtr d = duplicate(z6, princ(z6, "2"));
  Ideal i1 = o1(d);
  Ideal i2 = o2(d);
  CHECK(formatted(d, i1) == std::set<std::string>{"(0,0)", "(0,2)", "(0,4)"});
  CHECK(formatted(d, i2) == std::set<std::string>{"(0,0)", "(2,0)", "(4,0)"});
  CHECK(ideal_intersection(i1, i2).is_zero());

  // generators follow the principal-generator pattern (0,a) / (a,0)
  REQUIRE(i1.generators().size() == 1);
  CHECK(d->format(i1.generators()[0]) == "(0,2)");
  REQUIRE(i2.generators().size() == 1);
  CHECK(d->format(i2.generators()[0]) == "(2,0)");

  // structural membership predicates agree with the materialized sets
  for (const Element& e : enumerate(RingPtr(d))) {
    CHECK(d->in_o1(e.value()) == i1.contains(e.value()));
    CHECK(d->in_o2(e.value()) == i2.contains(e.value()));
  }

  // over a sampleable base the generators are recorded symbolically
  RingPtr z = make_ring("Z");
  DupPtr dz = duplicate(z, princ(z, "2"));
  Ideal i1z = o1(dz);
  REQUIRE(i1z.generators().size() == 1);
  CHECK(dz->format(i1z.generators()[0]) == "(0,2)");
}

TEST_CASE("retraction is the identity on the diagonal and R-linear") {
  RingPtr z6 = make_ring("Z/6");
  DupPtr d = duplicate(z6, princ(z6, "2"));
  CHECK(retraction(d, d->parse_element("(3,5)")).value() == Value{3});
  CHECK(retraction(d, d->one()).value() == Value{1});
  for (const Element& r : enumerate(z6))
    CHECK(retraction(d, d->from_pair(r.value(), r.value())).value() == r.value());

  for (const Element& e : enumerate(RingPtr(d)))
    for (const Element& f : enumerate(RingPtr(d))) {
      // additive
      CHECK(retraction(d, d->add(e.value(), f.value())).value() ==
            z6->add(retraction(d, e.value()).value(), retraction(d, f.value()).value()));
    }
  for (const Element& r : enumerate(z6))
    for (const Element& e : enumerate(RingPtr(d))) {
      Value diag = d->from_pair(r.value(), r.value());
      CHECK(retraction(d, d->mul(diag, e.value())).value() ==
            z6->mul(r.value(), retraction(d, e.value()).value()));
    }
}

TEST_CASE("retraction linearity on sampled elements") {
  RingPtr z = make_ring("Z");
  DupPtr d = duplicate(z, princ(z, "3"));
  SeededRng rng(31);
  for (int t = 0; t < 1000; ++t) {
    Value e = d->sample(rng, 50);
    Value f = d->sample(rng, 50);
    Value r = z->sample(rng, 50);
    CHECK(retraction(d, d->add(e, f)).value() ==
          z->add(retraction(d, e).value(), retraction(d, f).value()));
    Value diag = d->from_pair(r, r);
    CHECK(retraction(d, d->mul(diag, e)).value() == z->mul(r, retraction(d, e).value()));
  }
}

TEST_CASE("quotients by O1 and O2 recover the base ring") {
  for (const char* base_spec : {"Z/6", "Z/4"}) {
    RingPtr r = make_ring(base_spec);
    DupPtr d = duplicate(r, princ(r, "2"));
    for (int which : {1, 2}) {
      QuotientIso iso = quotient_by_oi(d, which);
      CHECK(iso.isomorphic);
      CHECK(iso.quotient->cardinality() == r->cardinality());
    }
  }
  // the zero-ideal case is the diagonal, trivially isomorphic
  RingPtr z6 = make_ring("Z/6");
  DupPtr diag = duplicate(z6, Ideal::zero_ideal(z6));
  CHECK(quotient_by_oi(diag, 1).isomorphic);
}

TEST_CASE("prime lifting, enumerable") {
  RingPtr z6 = make_ring("Z/6");
  DupPtr d = duplicate(z6, princ(z6, "2"));

  PrimeLift contains = lift_prime(d, princ(z6, "2"));
  CHECK(contains.kind == LiftCase::ContainsI);
  REQUIRE(contains.lifts.size() == 1);
  CHECK(contains.lifts[0].size() == 9);  // 3 * 3

  PrimeLift splits = lift_prime(d, princ(z6, "3"));
  CHECK(splits.kind == LiftCase::NotContainsI);
  REQUIRE(splits.lifts.size() == 2);
  CHECK(splits.lifts[0] != splits.lifts[1]);
  REQUIRE(splits.p0.has_value());
  CHECK(ideal_intersection(splits.lifts[0], splits.lifts[1]) == *splits.p0);

  // lifted sets are prime ideals of the duplication
  for (const Ideal& q : splits.lifts) CHECK(is_prime(q));
  CHECK(is_prime(contains.lifts[0]));

  RingPtr z4 = make_ring("Z/4");
  DupPtr d4 = duplicate(z4, princ(z4, "2"));
  PrimeLift single = lift_prime(d4, princ(z4, "2"));
  CHECK(single.kind == LiftCase::ContainsI);
  CHECK(single.lifts.size() == 1);
  CHECK(spectrum(RingPtr(d4)).size() == 1);

  CHECK_THROWS_AS(lift_prime(d, Ideal::zero_ideal(z6)), not_prime);
}

TEST_CASE("spectrum correspondence on a few pairs") {
  struct Pair {
    const char* ring;
    const char* gen;
  };
  for (const Pair& p : {Pair{"Z/6", "2"}, Pair{"Z/4", "2"}, Pair{"Z/9", "3"}, Pair{"Z/12", "4"}}) {
    RingPtr r = make_ring(p.ring);
    DupPtr d = duplicate(r, princ(r, p.gen));
    std::set<std::vector<Value>> lifted;
    std::uint64_t contains_count = 0, split_count = 0;
    for (const Ideal& prime : spectrum(r)) {
      PrimeLift lift = lift_prime(d, prime);
      (lift.kind == LiftCase::ContainsI ? contains_count : split_count) += 1;
      for (const Ideal& q : lift.lifts) lifted.insert(q.elements());
    }
    std::set<std::vector<Value>> actual;
    for (const Ideal& q : spectrum(RingPtr(d))) actual.insert(q.elements());
    CHECK(lifted == actual);
    CHECK(actual.size() == contains_count + 2 * split_count);
  }
}

TEST_CASE("descend then lift round-trips") {
  RingPtr z6 = make_ring("Z/6");
  DupPtr d = duplicate(z6, princ(z6, "2"));
  std::size_t over_o1 = 0;
  for (const Ideal& q : spectrum(RingPtr(d))) {
    Descent desc = descend_prime(d, q);
    CHECK(is_prime(desc.base_prime));
    PrimeLift lift = lift_prime(d, desc.base_prime);
    bool found = false;
    for (const Ideal& cand : lift.lifts) found = found || cand == q;
    CHECK(found);
    if (desc.kind == DescendCase::ContainsO1) ++over_o1;
  }
  // the lift of (2) contains O1; of the two lifts of (3), exactly one does
  CHECK(over_o1 == 2);
  CHECK_THROWS_AS(descend_prime(d, Ideal::zero_ideal(d)), not_prime);
}

TEST_CASE("prime lifting over a sampleable base") {
  RingPtr z = make_ring("Z");
  DupPtr d = duplicate(z, princ(z, "2"));

  PrimeLift contains = lift_prime(d, princ(z, "2"));
  CHECK(contains.kind == LiftCase::ContainsI);
  CHECK(contains.lifts.size() == 1);

  PrimeLift splits = lift_prime(d, princ(z, "3"));
  CHECK(splits.kind == LiftCase::NotContainsI);
  REQUIRE(splits.lifts.size() == 2);
  CHECK(splits.lifts[0].generators().size() == 2);

  CHECK_THROWS_AS(lift_prime(d, princ(z, "4")), not_prime);

  RingPtr gf2x = make_ring("GF(2)[x]");
  DupPtr dx = duplicate(gf2x, princ(gf2x, "x"));
  CHECK(lift_prime(dx, princ(gf2x, "x")).kind == LiftCase::ContainsI);
  CHECK(lift_prime(dx, princ(gf2x, "x+1")).kind == LiftCase::NotContainsI);
  CHECK_THROWS_AS(lift_prime(dx, princ(gf2x, "x^2")), not_prime);  // x^2 reducible
}

TEST_CASE("idealization ring") {
  RingPtr z4 = make_ring("Z/4");
  Ideal i = princ(z4, "2");
  RingPtr t = idealization(z4, i);
  CHECK(t->cardinality() == 8);
  CHECK(t->format(t->one()) == "(1,0)");
  // (0,m)(0,n) = (0,0)
  Value m = t->parse_element("(0,2)");
  CHECK(t->is_zero(t->mul(m, m)));
}

TEST_CASE("idealization coincidence when I^2 = 0") {
  RingPtr z4 = make_ring("Z/4");
  IsoVerdict v = iso_dup_idealization(z4, princ(z4, "2"));
  CHECK(v.isomorphic);
  CHECK(v.pairs_checked == 64);

  RingPtr q = make_ring("GF(2)[x]/(x^2)");
  IsoVerdict vq = iso_dup_idealization(q, princ(q, "x"));
  CHECK(vq.isomorphic);
  CHECK(vq.pairs_checked == 64);

  RingPtr z6 = make_ring("Z/6");
  CHECK_THROWS_AS(iso_dup_idealization(z6, princ(z6, "2")), square_not_zero);
}
