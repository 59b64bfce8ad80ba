#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bowtie/properties.hpp"

#include "bowtie/specparse.hpp"

using namespace bowtie;

TEST_CASE("reduced") {
  CHECK(is_reduced(make_ring("Z/6")).verdict);
  PropertyReport z4 = is_reduced(make_ring("Z/4"));
  CHECK_FALSE(z4.verdict);
  CHECK(z4.witness == "2");
  PropertyReport z = is_reduced(make_ring("Z"));
  CHECK(z.verdict);
  CHECK(z.method == Method::TheoremBacked);
}

TEST_CASE("von Neumann regularity") {
  CHECK(is_vnr(make_ring("Z/6")).verdict);
  PropertyReport z4 = is_vnr(make_ring("Z/4"));
  CHECK_FALSE(z4.verdict);
  CHECK(z4.witness == "2");
  PropertyReport q = is_vnr(make_ring("GF(2)[x]/(x^2)"));
  CHECK_FALSE(q.verdict);
  CHECK(q.witness == "x");
  CHECK_THROWS_AS(is_vnr(make_ring("Z")), not_enumerable);
}

TEST_CASE("vnr characterization crosscheck") {
  for (const char* spec : {"Z/4", "Z/6", "Z/8", "Z/9", "Z/12", "Z/30", "GF(3)",
                           "GF(2)[x]/(x^2)", "GF(2)[x]/(x^2+x+1)", "Z/2 x Z/2"})
    CHECK(vnr_characterization_crosscheck(make_ring(spec)));
}

TEST_CASE("locality") {
  CHECK(is_local(make_ring("Z/4")).verdict);
  CHECK_FALSE(is_local(make_ring("Z/6")).verdict);
  CHECK(is_local(make_ring("GF(2)[x]/(x^2)")).verdict);
  CHECK(is_local(make_ring("GF(7)")).verdict);
  CHECK_FALSE(is_local(make_ring("Z/2 x Z/2")).verdict);
}

TEST_CASE("semisimplicity tracks vnr on finite rings") {
  CHECK(is_semisimple(make_ring("Z/6")).verdict);
  CHECK_FALSE(is_semisimple(make_ring("Z/4")).verdict);
  CHECK(is_semisimple(make_ring("GF(5)")).verdict);
}

TEST_CASE("perfect and steinitz") {
  PropertyReport z4 = is_perfect(make_ring("Z/4"));
  CHECK(z4.verdict);
  CHECK(z4.note.find("depth 2") != std::string::npos);
  CHECK(is_perfect(make_ring("Z/6")).verdict);
  CHECK(is_perfect(make_ring("GF(2)[x]/(x^3)")).verdict);

  CHECK(is_steinitz(make_ring("GF(2)[x]/(x^2)")).verdict);
  CHECK_FALSE(is_steinitz(make_ring("Z/6")).verdict);  // not local
  CHECK(is_steinitz(parse_ring_spec("dup(GF(2)[x]/(x^2); x)")).verdict);
}

TEST_CASE("coherence and noetherianity") {
  PropertyReport z8 = is_coherent(make_ring("Z/8"));
  CHECK(z8.verdict);
  CHECK(z8.note.find("ker(") != std::string::npos);  // kernel evidence attached
  PropertyReport z = is_coherent(make_ring("Z"));
  CHECK(z.verdict);
  CHECK(z.note == "principal ideal domain");
  CHECK(is_noetherian(make_ring("Z/12")).verdict);
  CHECK(is_noetherian(make_ring("Z")).verdict);
}

TEST_CASE("fields are vnr, local, semisimple, steinitz") {
  for (const char* spec : {"GF(2)", "GF(3)", "GF(5)", "GF(2)[x]/(x^2+x+1)"}) {
    RingPtr f = make_ring(spec);
    CHECK(is_vnr(f).verdict);
    CHECK(is_local(f).verdict);
    CHECK(is_semisimple(f).verdict);
    CHECK(is_steinitz(f).verdict);
  }
}

TEST_CASE("squarefree oracle for Z/n") {
  for (std::uint64_t n = 2; n <= 30; ++n)
    CHECK(is_vnr(make_modular(n)).verdict == is_squarefree_u64(n));
}

TEST_CASE("transfer records") {
  RingPtr z6 = make_ring("Z/6");
  Ideal two6 = parse_ideal(z6, "2");
  TransferRecord vnr6 = verify_transfer("vnr", z6, two6);
  CHECK(vnr6.agreement);
  CHECK(vnr6.base.verdict);
  CHECK(vnr6.dup.verdict);

  RingPtr z4 = make_ring("Z/4");
  TransferRecord vnr4 = verify_transfer("vnr", z4, parse_ideal(z4, "2"));
  CHECK(vnr4.agreement);
  CHECK_FALSE(vnr4.base.verdict);
  CHECK_FALSE(vnr4.dup.verdict);

  RingPtr q = make_ring("GF(2)[x]/(x^2)");
  TransferRecord st = verify_transfer("steinitz", q, parse_ideal(q, "x"));
  CHECK(st.agreement);
  CHECK(st.base.verdict);
  CHECK(st.dup.verdict);

  CHECK_THROWS_AS(verify_transfer("bogus", z6, two6), parse_error);
}

TEST_CASE("property dispatch uses the exact CLI names") {
  RingPtr z6 = make_ring("Z/6");
  for (const std::string& name : property_names()) CHECK(property_report(z6, name).property == name);
  CHECK(property_names().size() == 8);
  CHECK_THROWS_AS(property_report(z6, "unit-regular"), parse_error);
}
