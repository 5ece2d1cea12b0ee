import json
import os

import pytest

import rackmod

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_flip_rack():
    flip = rackmod.named_rack("flip")
    assert flip.size == 2
    assert not flip.is_quandle()
    assert rackmod.abelianization(flip) == (1, [])
    assert rackmod.word_equality(flip, [1], [2]) == "equal"
    assert rackmod.betti_numbers(flip, 3)[1] == 1


def test_validate_rack():
    assert rackmod.validate_rack([[1, 1], [0, 0]])["valid"]
    report = rackmod.validate_rack([[0, 2, 1], [2, 1, 0], [1, 1, 2]])
    assert not report["valid"]
    rule, witness = report["violations"][0]
    assert len(witness) == 3
    with pytest.raises(rackmod.ValidationError):
        rackmod.Rack([[1, 1], [1, 0]])


def test_enumerate_small_orders():
    # Known counts of racks up to isomorphism for n = 1, 2, 3.
    assert [len(rackmod.enumerate_racks(n)) for n in (1, 2, 3)] == [1, 2, 6]
    assert len(rackmod.enumerate_racks(3, "quandles")) == 3


def test_trefoil_colorings():
    d3 = rackmod.named_rack("dihedral:3")
    assert rackmod.count_colorings("trefoil", d3) == 9
    assert rackmod.count_colorings("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]", d3) == 9
    with pytest.raises(rackmod.MalformedInput):
        rackmod.count_colorings("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,7]]", d3)


def test_json_round_trip():
    s3 = rackmod.conj_rack("S3")
    assert rackmod.rack_from_json(s3.to_json()) == s3


def test_cli_entry_point():
    code, out, _ = rackmod.run_cli(["check", "rack", "--input", os.path.join(DATA, "flip.json")])
    assert code == 0
    assert json.loads(out)["status"] == "ok"
    code, out, _ = rackmod.run_cli(["construct", "nerve", "--input", os.path.join(DATA, "flip.json"), "--dim", "5"])
    assert code == 2
