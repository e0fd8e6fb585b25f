import pytest

from ramseylb import certify, graph, patterns
from ramseylb.certify import (
    Certificate,
    CertificateError,
    K3_KN_LOWER,
    K4ME_KN_LOWER,
    W5W6_KN_TABLE,
    W7_KN_TABLE,
    derived_w5w6_row,
    derived_w7_row,
    reproduce_tables,
    verify,
    verify_ramsey_witness,
)
from ramseylb.coloring import TwoColoring, coloring_sha
from ramseylb.constructions import fan_construction
from ramseylb.oracle import oracle_contains
from ramseylb.patterns import parse_pattern


def test_verified_certificate():
    c = fan_construction(4, 4)
    cert = certify.verify_construction(c)
    assert cert.verified and cert.result == "verified"
    assert cert.counterexample is None
    assert cert.order == 17
    assert cert.coloring_sha == coloring_sha(c.coloring)
    assert cert.construction["family"] == "fan"
    assert "/" in cert.detector_version


def test_refuted_certificate_counterexample_validates():
    # all-red K9 certainly contains a red fan:2
    coloring = TwoColoring(graph.complete(9))
    cert = verify(coloring, parse_pattern("fan:2"), parse_pattern("fan:2"))
    assert not cert.verified and cert.result == "refuted"
    ce = cert.counterexample
    assert ce["color"] == "red"
    assert patterns.check_embedding(
        coloring.red, parse_pattern("fan:2"), ce["vertices"]
    )
    # independent re-validation by the brute-force oracle
    sub = graph.induced(coloring.red, ce["vertices"])
    assert oracle_contains(sub, parse_pattern("fan:2"))


def test_blue_counterexample():
    coloring = TwoColoring(graph.empty(5))
    cert = verify(coloring, parse_pattern("clique:3"), parse_pattern("clique:3"))
    assert cert.counterexample["color"] == "blue"


def test_swap_consistency():
    coloring = TwoColoring(graph.cycle(5))
    a = verify(coloring, parse_pattern("clique:3"), parse_pattern("clique:3"))
    b = verify(coloring.swapped(), parse_pattern("clique:3"), parse_pattern("clique:3"))
    assert a.verified == b.verified


def test_json_round_trip():
    cert = verify(
        TwoColoring(graph.cycle(5)),
        parse_pattern("clique:3"),
        parse_pattern("clique:3"),
    )
    back = Certificate.from_json(cert.to_json())
    assert back.result == cert.result
    assert back.order == cert.order
    assert back.red_target == cert.red_target
    assert back.blue_target == cert.blue_target
    assert back.coloring_sha == cert.coloring_sha
    assert back.counterexample == cert.counterexample


def test_verify_ramsey_witness():
    cert = verify_ramsey_witness(
        graph.circulant(13, {1, 5}),
        parse_pattern("clique:3"),
        parse_pattern("clique:5"),
    )
    assert cert.verified


def test_tables_reproduce():
    rows = reproduce_tables()
    assert rows["w5w6"] == W5W6_KN_TABLE
    assert rows["w7"] == W7_KN_TABLE
    assert len(rows["w5w6"]) + len(rows["w7"]) == 17


def test_derived_rows_formula():
    assert derived_w5w6_row()[5] == 2 * K3_KN_LOWER[5] - 1 == 27
    assert derived_w7_row()[10] == 2 * K4ME_KN_LOWER[10] - 1 == 97


def test_table_mismatch_detected(monkeypatch):
    monkeypatch.setitem(certify.K3_KN_LOWER, 5, 13)
    with pytest.raises(CertificateError):
        reproduce_tables()
