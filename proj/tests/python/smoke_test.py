"""Smoke tests for the python extension module.

Run directly (``python smoke_test.py <dir-with-extension>``) or through
pytest with the built module on sys.path.
"""

import json
import sys

if len(sys.argv) > 1:
    sys.path.insert(0, sys.argv[1])

import bowtie


def test_ring_construction():
    z6 = bowtie.make_ring("Z/6")
    assert z6.cardinality == 6
    assert z6.descriptor == "Z/6"
    assert z6.enumerable

    z = bowtie.make_ring("Z")
    assert not z.enumerable

    gf4 = bowtie.make_ring("GF(2)[x]/(x^2+x+1)")
    assert gf4.cardinality == 4


def test_parse_errors_are_value_errors():
    try:
        bowtie.make_ring("GF(not-a-ring")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_element_arithmetic():
    z6 = bowtie.make_ring("Z/6")
    four, five = z6.element("4"), z6.element("5")
    assert str(four + five) == "3"
    assert str(four * five) == "2"
    assert str(-z6.element("2")) == "4"
    assert z6.element("10") == four


def test_ideals_and_spectrum():
    z6 = bowtie.make_ring("Z/6")
    two = bowtie.ideal(z6, "2")
    assert two.proper
    assert two.is_prime()
    assert len(two.elements()) == 3
    assert len(bowtie.spectrum(z6)) == 2
    assert len(bowtie.all_ideals(z6)) == 4

    se = bowtie.special_elements(z6)
    assert sorted(se["idempotents"]) == ["0", "1", "3", "4"]


def test_duplication_and_lifting():
    z6 = bowtie.make_ring("Z/6")
    d = bowtie.duplicate(z6, bowtie.ideal(z6, "2"))
    assert d.cardinality == 18
    assert d.descriptor == "dup(Z/6; 2)"

    e = d.element("(3,5)")
    assert str(d.retraction(e)) == "3"

    lift = bowtie.lift_prime(d, bowtie.ideal(z6, "2"))
    assert lift["case"] == "contains-I"
    assert len(lift["lifts"]) == 1
    split = bowtie.lift_prime(d, bowtie.ideal(z6, "3"))
    assert split["case"] == "splits"
    assert len(split["lifts"]) == 2

    assert bowtie.quotient_by_oi(d, 1)["isomorphic"]
    assert bowtie.quotient_by_oi(d, 2)["isomorphic"]


def test_dup_spec_parses_directly():
    d = bowtie.make_ring("dup(GF(2)[x]/(x^2); x)")
    assert d.cardinality == 8
    rep = bowtie.property_report(d, "steinitz")
    assert rep["verdict"]


def test_transfer_and_resolution():
    z4 = bowtie.make_ring("Z/4")
    rec = bowtie.verify_transfer("vnr", z4, bowtie.ideal(z4, "2"))
    assert rec["agreement"]
    assert not rec["base"]["verdict"]

    rep = bowtie.verify_periodic_resolution(bowtie.make_ring("Z"), "2", seed=42, samples=200)
    assert rep["pd_verdict"] == "infinite-periodic"
    assert rep["ker_u_equals_o2"] and rep["ker_v_equals_o1"]


def test_homology_surface():
    z8 = bowtie.make_ring("Z/8")
    d = bowtie.duplicate(z8, bowtie.ideal(z8, "2"))
    check = bowtie.presentation_kernel_check(d, ["2"])
    assert check["holds"]

    probe = bowtie.perfect_probe(bowtie.make_ring("Z/4"))
    assert probe["stabilizes"] and probe["max_depth"] == 2

    ann = bowtie.colon_annihilator(z8, z8.element("4"))
    assert len(ann.elements()) == 4

    dz = bowtie.duplicate(bowtie.make_ring("Z"), bowtie.ideal(bowtie.make_ring("Z"), "2"))
    cert = bowtie.annihilator_dup_sampled(dz, dz.element("(2,0)"), seed=42, samples=100)
    assert cert["agreed"] and cert["characterization"] == "O1"


def test_descend_prime():
    z6 = bowtie.make_ring("Z/6")
    d = bowtie.duplicate(z6, bowtie.ideal(z6, "2"))
    for q in bowtie.spectrum(d):
        desc = bowtie.descend_prime(d, q)
        assert desc["case"] in ("contains-O1", "omits-O1")


def test_idealization_coincidence():
    z4 = bowtie.make_ring("Z/4")
    verdict = bowtie.iso_dup_idealization(z4, bowtie.ideal(z4, "2"))
    assert verdict["isomorphic"]
    assert verdict["pairs_checked"] == 64


def test_corpus_and_suite():
    corpus = bowtie.builtin_corpus()
    assert len(corpus) >= 20
    assert any(e["id"] == "gf2x-x2" for e in corpus)

    first = bowtie.run_paper_suite(seed=42, samples=40)
    second = bowtie.run_paper_suite(seed=42, samples=40)
    assert first["failures"] == 0
    assert first["json"] == second["json"]
    doc = json.loads(first["json"])
    assert doc["summary"]["failures"] == 0


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
