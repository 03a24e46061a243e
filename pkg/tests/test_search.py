import json

import pytest

from faberkrahn import canonical_form, enumerate_unicyclic, find_extremal, load_fixture
from faberkrahn.search import (
    CapExceeded,
    VerificationError,
    explore_degree_two_cases,
    unicyclic_sequences,
    verify_extremal_uniqueness,
)

import oracles

PI_1 = (2, 2, 2, 3, 3, 4, 5) + (1,) * 7


def test_unique_class_for_smallest_sequence():
    assert len(list(enumerate_unicyclic((3, 3, 3, 1, 1, 1)))) == 1


def test_frozen_class_count():
    # fixed by the brute-force oracle
    assert len(list(enumerate_unicyclic((2, 2, 3, 3, 1, 1)))) == 4


@pytest.mark.parametrize("n", range(4, 8))
def test_matches_naive_oracle(n):
    for pi in unicyclic_sequences(n, n_min=n):
        graphs = list(enumerate_unicyclic(pi))
        assert len(graphs) == len(oracles.unicyclic_classes(pi.degrees)), pi
        assert all(g.degree_sequence() == pi for g in graphs)
        assert len({canonical_form(g) for g in graphs}) == len(graphs)


def test_enumeration_is_deterministic():
    pi = (2, 3, 3, 3, 4) + (1,) * 5
    first = [g.sorted_edges() for g in enumerate_unicyclic(pi)]
    assert first == [g.sorted_edges() for g in enumerate_unicyclic(pi)]


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("FK_CACHE_DIR", str(tmp_path))
    pi = (2, 2, 3, 3, 1, 1)
    fresh = [g.sorted_edges() for g in enumerate_unicyclic(pi)]
    files = list(tmp_path.iterdir())
    assert len(files) == 1 and len(json.loads(files[0].read_text())) == 4
    assert [g.sorted_edges() for g in enumerate_unicyclic(pi)] == fresh


def test_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_unicyclic(PI_1))
    with pytest.raises(CapExceeded):
        verify_extremal_uniqueness(14)


def test_smallest_extremal_report():
    rep = find_extremal((3, 3, 3, 1, 1, 1))
    assert rep.best_lambda == pytest.approx(1.0)
    assert rep.matches_construction and rep.count_isoclasses == 1 and rep.unique


def test_path_sequence_contains_both_reference_graphs():
    codes = {canonical_form(g) for g in enumerate_unicyclic(PI_1, cap=14)}
    assert canonical_form(load_fixture("triangle_path_14")) in codes
    assert canonical_form(load_fixture("square_14")) in codes


def test_path_sequence_minimum():
    rep = find_extremal(PI_1, cap=14)
    assert rep.best_lambda <= 0.1017 + 5e-5
    assert rep.construction == "u1" and rep.matches_construction


def test_verification_up_to_eight():
    rows = verify_extremal_uniqueness(8)
    assert rows and all(r["ok"] for r in rows)
    assert [r["pi"] for r in rows] == [list(p.degrees) for p in unicyclic_sequences(8, min_interior=3)]
    assert verify_extremal_uniqueness(6)[0]["pi"] == [3, 3, 3, 1, 1, 1]


def _strip(rows):
    return [{k: v for k, v in r.items() if k != "elapsed"} for r in rows]


def test_worker_count_does_not_change_results():
    assert _strip(verify_extremal_uniqueness(8, workers=1)) == _strip(verify_extremal_uniqueness(8, workers=3))


def test_verification_error_carries_row(monkeypatch):
    import faberkrahn.search as search

    monkeypatch.setattr(search, "extremal_properties", lambda g: {"forced": False})
    with pytest.raises(VerificationError) as info:
        search.verify_extremal_uniqueness(6)
    assert info.value.counterexample["pi"] == [3, 3, 3, 1, 1, 1]
    rows = search.verify_extremal_uniqueness(6, raise_on_failure=False)
    assert not rows[0]["ok"]


def test_degree_two_exploration_rows():
    rows = explore_degree_two_cases(7)
    assert rows and all(2 in r["pi"] for r in rows)
    assert {r["case"] for r in rows} <= {1, 2, 3}
    assert any(r["case"] == 1 and r["pi"][0] == 2 for r in rows)
    for r in rows:
        assert r["construction"] == {1: "ustar", 2: "u1", 3: "u2"}[r["case"]]
