// Python bindings for the core operations: ring construction, ideals,
// duplications, prime lifting, the property checkers and the verification
// suite. Ring handles are immutable shared pointers; PyRing wraps them for
// the pybind11 holder machinery.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bowtie/homology.hpp"
#include "bowtie/properties.hpp"
#include "bowtie/specparse.hpp"
#include "bowtie/suite.hpp"
#include "bowtie/version.hpp"

namespace py = pybind11;

using namespace bowtie;

namespace {

struct PyRing {
  RingPtr p;
};

DupPtr as_dup(const PyRing& r) {
  auto d = std::dynamic_pointer_cast<const DupRing>(r.p);
  if (!d) throw invalid_element(r.p->descriptor() + " is not a duplication ring");
  return d;
}

py::dict report_dict(const PropertyReport& rep) {
  py::dict out;
  out["ring"] = rep.ring;
  out["property"] = rep.property;
  out["verdict"] = rep.verdict;
  out["method"] = method_name(rep.method);
  if (rep.witness) out["witness"] = *rep.witness;
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

py::dict ideal_dict(const Ideal& ideal) {
  py::dict out;
  out["owner"] = ideal.owner()->descriptor();
  out["generators"] = ideal.format_generators();
  if (ideal.owner()->enumerable()) {
    py::list elems;
    for (const Value& v : ideal.elements()) elems.append(ideal.owner()->format(v));
    out["elements"] = elems;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(bowtie, m) {
  m.doc() = "amalgamated duplications R |><| I of computable commutative rings";
  m.attr("__version__") = kToolVersion;

  // translators run newest-first, so the base class goes in first
  py::register_exception<error>(m, "BowtieError", PyExc_RuntimeError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  py::class_<Element>(m, "Element")
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__repr__", [](const Element& e) { return e.str(); })
      .def("__str__", &Element::str)
      .def_property_readonly("ring", [](const Element& e) { return PyRing{e.ring()}; });

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("generators", &Ideal::format_generators)
      .def_property_readonly("proper", &Ideal::is_proper)
      .def("elements",
           [](const Ideal& i) {
             py::list out;
             for (const Value& v : i.elements()) out.append(Element(i.owner(), v));
             return out;
           })
      .def("contains", [](const Ideal& i, const Element& e) { return i.contains(e); })
      .def("is_prime", [](const Ideal& i) { return is_prime(i); })
      .def("is_maximal", [](const Ideal& i) { return is_maximal(i); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__repr__", [](const Ideal& i) {
        return "(" + i.format_generators() + ") over " + i.owner()->descriptor();
      });

  py::class_<PyRing>(m, "Ring")
      .def_property_readonly("descriptor", [](const PyRing& r) { return r.p->descriptor(); })
      .def_property_readonly("enumerable", [](const PyRing& r) { return r.p->enumerable(); })
      .def_property_readonly("cardinality", [](const PyRing& r) { return r.p->cardinality(); })
      .def("zero", [](const PyRing& r) { return Element(r.p, r.p->zero()); })
      .def("one", [](const PyRing& r) { return Element(r.p, r.p->one()); })
      .def("element",
           [](const PyRing& r, const std::string& text) {
             return Element(r.p, r.p->parse_element(text));
           })
      .def("elements",
           [](const PyRing& r) {
             py::list out;
             for (const Element& e : enumerate(r.p)) out.append(e);
             return out;
           })
      .def(
          "sample",
          [](const PyRing& r, std::uint64_t seed, int bound) {
            SeededRng rng(seed);
            return Element(r.p, r.p->sample(rng, bound));
          },
          py::arg("seed"), py::arg("bound") = 100)
      .def("retraction",
           [](const PyRing& r, const Element& e) { return retraction(as_dup(r), e.value()); })
      .def("pair",
           [](const PyRing& r, const Element& a, const Element& b) {
             DupPtr d = as_dup(r);
             return Element(d, d->from_pair(a.value(), b.value()));
           })
      .def("__repr__", [](const PyRing& r) { return r.p->descriptor(); })
      .def("__eq__", [](const PyRing& a, const PyRing& b) { return a.p->same_as(*b.p); });

  m.def(
      "make_ring", [](const std::string& spec) { return PyRing{parse_ring_spec(spec)}; },
      py::arg("spec"),
      "parse a ring spec, e.g. 'Z/6', 'GF(2)[x]/(x^2)', 'Z/2 x Z/2' or 'dup(Z/6; 2)'");
  m.def(
      "ideal",
      [](const PyRing& r, const std::string& gens) { return parse_ideal(r.p, gens); },
      py::arg("ring"), py::arg("generators"),
      "ideal from comma-separated element literals; '' is the zero ideal");
  m.def(
      "duplicate",
      [](const PyRing& r, const Ideal& i) { return PyRing{duplicate(r.p, i)}; },
      py::arg("ring"), py::arg("ideal"));
  m.def("o1", [](const PyRing& r) { return o1(as_dup(r)); });
  m.def("o2", [](const PyRing& r) { return o2(as_dup(r)); });
  m.def(
      "idealization",
      [](const PyRing& r, const Ideal& i) { return PyRing{idealization(r.p, i)}; },
      py::arg("ring"), py::arg("ideal"));

  m.def("spectrum", [](const PyRing& r) { return spectrum(r.p); });
  m.def("all_ideals", [](const PyRing& r) { return all_ideals(r.p); });
  m.def("special_elements", [](const PyRing& r) {
    SpecialElements s = special_elements(r.p);
    auto fmt = [&](const std::vector<Value>& vs) {
      py::list out;
      for (const Value& v : vs) out.append(r.p->format(v));
      return out;
    };
    py::dict out;
    out["units"] = fmt(s.units);
    out["idempotents"] = fmt(s.idempotents);
    out["nilpotents"] = fmt(s.nilpotents);
    return out;
  });

  m.def("lift_prime", [](const PyRing& r, const Ideal& p) {
    PrimeLift lift = lift_prime(as_dup(r), p);
    py::dict out;
    out["case"] = lift.kind == LiftCase::ContainsI ? "contains-I" : "splits";
    py::list lifts;
    for (const Ideal& q : lift.lifts) lifts.append(ideal_dict(q));
    out["lifts"] = lifts;
    return out;
  });
  m.def("descend_prime", [](const PyRing& r, const Ideal& q) {
    Descent desc = descend_prime(as_dup(r), q);
    py::dict out;
    out["prime"] = ideal_dict(desc.base_prime);
    out["case"] = desc.kind == DescendCase::ContainsO1 ? "contains-O1" : "omits-O1";
    return out;
  });
  m.def("colon_annihilator", [](const PyRing& r, const Element& a) {
    return colon_annihilator(r.p, a.value());
  });
  m.def("annihilator_dup", [](const PyRing& r, const Element& c) {
    return annihilator_dup(as_dup(r), c.value());
  });
  m.def(
      "annihilator_dup_sampled",
      [](const PyRing& r, const Element& c, std::uint64_t seed, std::uint64_t samples) {
        SeededRng rng(seed);
        AnnihilatorCertificate cert = annihilator_dup_sampled(as_dup(r), c.value(), rng, samples);
        py::dict out;
        out["characterization"] = cert.characterization;
        out["samples_checked"] = cert.samples_checked;
        out["sample_disagreements"] = cert.sample_disagreements;
        out["sweep_checked"] = cert.sweep_checked;
        out["sweep_disagreements"] = cert.sweep_disagreements;
        out["agreed"] = cert.agreed();
        return out;
      },
      py::arg("ring"), py::arg("c"), py::arg("seed") = 42, py::arg("samples") = 500);
  m.def("presentation_kernel_check", [](const PyRing& r, const std::vector<std::string>& gens) {
    DupPtr d = as_dup(r);
    std::vector<Value> parsed;
    for (const std::string& g : gens) parsed.push_back(d->base()->parse_element(g));
    PresentationCheck check = presentation_kernel_check(d, parsed);
    py::dict out;
    out["holds"] = check.holds;
    out["kernel_size"] = check.kernel_size;
    out["characterization_size"] = check.characterization_size;
    out["tuples_scanned"] = check.tuples_scanned;
    return out;
  });
  m.def("perfect_probe", [](const PyRing& r) {
    PerfectProbe probe = perfect_probe(r.p);
    py::dict out;
    out["stabilizes"] = probe.stabilizes;
    out["max_depth"] = probe.max_depth;
    return out;
  });
  m.def("quotient_by_oi", [](const PyRing& r, int which) {
    QuotientIso iso = quotient_by_oi(as_dup(r), which);
    py::dict out;
    out["isomorphic"] = iso.isomorphic;
    out["detail"] = iso.detail;
    return out;
  });
  m.def("iso_dup_idealization", [](const PyRing& r, const Ideal& i) {
    IsoVerdict v = iso_dup_idealization(r.p, i);
    py::dict out;
    out["isomorphic"] = v.isomorphic;
    out["pairs_checked"] = v.pairs_checked;
    if (!v.isomorphic) out["counterexample"] = v.counterexample;
    return out;
  });

  m.def(
      "property_report",
      [](const PyRing& r, const std::string& name) {
        return report_dict(property_report(r.p, name));
      },
      py::arg("ring"), py::arg("property"));
  m.def("property_names", [] { return property_names(); });
  m.def(
      "verify_transfer",
      [](const std::string& theorem, const PyRing& r, const Ideal& i) {
        TransferRecord rec = verify_transfer(theorem, r.p, i);
        py::dict out;
        out["theorem"] = rec.theorem;
        out["base"] = report_dict(rec.base);
        out["dup"] = report_dict(rec.dup);
        out["agreement"] = rec.agreement;
        return out;
      },
      py::arg("theorem"), py::arg("ring"), py::arg("ideal"));

  m.def(
      "verify_periodic_resolution",
      [](const PyRing& r, const std::string& gen, std::uint64_t seed, std::uint64_t samples) {
        SeededRng rng(seed);
        ResolutionReport rep =
            verify_periodic_resolution(r.p, r.p->parse_element(gen), rng, samples);
        py::dict out;
        out["dup"] = rep.dup_descriptor;
        out["generator"] = rep.generator;
        out["ker_u_equals_o2"] = rep.ker_u_equals_o2;
        out["ker_v_equals_o1"] = rep.ker_v_equals_o1;
        out["o1_idempotent_generated"] = rep.o1_idempotent_generated;
        out["o2_idempotent_generated"] = rep.o2_idempotent_generated;
        out["pd_verdict"] =
            rep.pd_verdict == PdVerdict::InfinitePeriodic ? "infinite-periodic" : "inconclusive";
        out["samples_checked"] = rep.samples_checked;
        out["sweep_checked"] = rep.sweep_checked;
        return out;
      },
      py::arg("ring"), py::arg("generator"), py::arg("seed") = 42, py::arg("samples") = 1000);

  m.def("builtin_corpus", [] {
    py::list out;
    for (const CorpusEntry& e : builtin_corpus()) {
      py::dict row;
      row["id"] = e.id;
      row["ring"] = e.ring_spec;
      row["ideal"] = e.ideal_gens;
      row["tags"] = e.tags;
      out.append(row);
    }
    return out;
  });

  m.def(
      "run_paper_suite",
      [](std::uint64_t seed, std::uint64_t samples, std::uint64_t cap) {
        SuiteOptions opt;
        opt.seed = seed;
        opt.samples = samples;
        opt.cap = cap;
        SuiteReport rep = run_paper_suite(opt);
        py::dict out;
        out["checks"] = rep.checks;
        out["failures"] = rep.failures;
        out["skipped"] = rep.skipped;
        out["json"] = render_json(rep);
        return out;
      },
      py::arg("seed") = 42, py::arg("samples") = 1000, py::arg("cap") = kDefaultLatticeCap);
}
