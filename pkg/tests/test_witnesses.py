import pytest

from ramseylb import graph, patterns, witnesses
from ramseylb.witnesses import (
    SEARCH_ORDER_CAP,
    WitnessError,
    WitnessNotFoundError,
    bundled_witness,
    parse_witness_key,
    tabu_search_witness,
    verify_record,
    witness_from_file,
)


def test_parse_witness_key():
    assert parse_witness_key("k3k5") == ("k3", 5)
    assert parse_witness_key("k4mek4") == ("k4me", 4)
    assert parse_witness_key("k3k12") == ("k3", 12)
    for bad in ["k3", "k5k3x", "clique3k5", "k3kx"]:
        with pytest.raises(WitnessNotFoundError):
            parse_witness_key(bad)


def test_builtin_circulant_witness():
    rec = bundled_witness("k3", 5)
    assert rec.graph == graph.circulant(13, {1, 5})
    assert not rec.verified
    rec = verify_record(rec)
    assert rec.verified


@pytest.mark.parametrize(
    "pair,n,order",
    [("k3", 6, 17), ("k3", 7, 22), ("k4me", 4, 10), ("k4me", 5, 15)],
)
def test_bundled_file_witnesses(pair, n, order):
    rec = verify_record(bundled_witness(pair, n))
    assert rec.graph.n == order
    assert rec.verified


def test_missing_witness():
    with pytest.raises(WitnessNotFoundError):
        bundled_witness("k3", 50)
    with pytest.raises(WitnessNotFoundError):
        bundled_witness("k5", 5)


def test_verify_record_rejects_bad_witness():
    rec = witnesses.WitnessRecord(
        id="bogus",
        graph=graph.complete(5),
        avoid_red=patterns.clique(3),
        avoid_blue_in_complement=patterns.clique(3),
        provenance="test",
    )
    with pytest.raises(WitnessError):
        verify_record(rec)


def test_witness_from_file(tmp_path):
    from ramseylb.graph6 import to_graph6

    path = tmp_path / "w.g6"
    path.write_text(to_graph6(graph.circulant(13, {1, 5})) + "\n")
    rec = witness_from_file(str(path), patterns.clique(3), patterns.clique(5))
    rec = verify_record(rec)
    assert rec.graph.n == 13 and rec.provenance == "file"


def test_tabu_search_deterministic():
    a = tabu_search_witness(8, patterns.clique(3), patterns.clique(4),
                            budget=3000, seed=42)
    b = tabu_search_witness(8, patterns.clique(3), patterns.clique(4),
                            budget=3000, seed=42)
    assert a is not None and a == b


def test_tabu_search_result_verifies():
    g = tabu_search_witness(10, patterns.k4me(), patterns.clique(4),
                            budget=100000, seed=1)
    assert g is not None
    assert not patterns.contains_pattern(g, patterns.k4me())
    assert not patterns.contains_pattern(graph.complement(g), patterns.clique(4))


def test_tabu_search_impossible_target():
    # R(K3, K5) = 14: no witness on 14 vertices exists
    g = tabu_search_witness(14, patterns.clique(3), patterns.clique(5),
                            budget=1500, seed=0)
    assert g is None


def test_search_guards():
    with pytest.raises(WitnessError):
        tabu_search_witness(SEARCH_ORDER_CAP + 1, patterns.clique(3),
                            patterns.clique(3), budget=10, seed=0)
    with pytest.raises(WitnessError):
        tabu_search_witness(8, patterns.fan(2), patterns.clique(3),
                            budget=10, seed=0)
