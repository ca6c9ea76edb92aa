import json
import os

import pytest

from bsp.canon import canonical_key
from bsp.enumeration import (
    Catalog,
    brute_force,
    enumerate_catalog,
    figure1_reference,
    stats,
    verify_against_reference,
)
from bsp.errors import CheckpointCorruptError
from bsp.family import (
    closure,
    is_closed_pair,
    pair_from_product_matrix,
    product_matrix,
    verify_binary_products,
)

D4_MAXIMAL = {(5, 16), (6, 12), (7, 10), (8, 9), (9, 8), (10, 7), (12, 6), (16, 5)}


def test_enumerate_d1():
    cat = enumerate_catalog(1)
    assert len(cat) == 1
    assert cat.classes[0].size_a * cat.classes[0].size_b == 4


def test_enumerate_d2():
    cat = enumerate_catalog(2)
    assert len(cat) == 1
    st = stats(cat)
    assert st.max_product == 12
    assert {(3, 4), (4, 3)} <= st.achievable


def test_oracle_equivalence_d123():
    for d in (1, 2, 3):
        assert enumerate_catalog(d).key_set() == brute_force(d).key_set()


def test_enumerate_d4_maximal_pairs():
    cat = enumerate_catalog(4)
    st = stats(cat)
    assert set(st.maximal_pairs) == D4_MAXIMAL
    assert st.max_product == 80  # (d+1) 2^d


def test_catalog_entries_are_closed_spanning_pairs():
    for d in (2, 3):
        cat = enumerate_catalog(d)
        for cls in cat.classes:
            assert cls.matrix.rank_d == d
            pair = pair_from_product_matrix(cls.matrix, d)
            assert verify_binary_products(pair.family_a, pair.family_b) is None
            assert is_closed_pair(pair)
            # representative re-canonicalizes to its key
            assert canonical_key(cls.matrix, include_transpose=True) == cls.key


def test_examples_appear_in_catalogs_after_closure():
    from bsp.constructions import construct_example
    from bsp.family import a_max, b_max

    for d in (2, 3, 4):
        keys = enumerate_catalog(d).key_set()
        kinds = [("cube-pair", None), ("example3", None), ("example4", None)] + [
            ("example5", k) for k in range(d + 1)
        ]
        for kind, k in kinds:
            pair = construct_example(kind, d, k=k)
            a = a_max(pair.family_b)
            closed = type(pair)(d, a, b_max(a))
            key = canonical_key(product_matrix(closed), include_transpose=True)
            assert key in keys, (kind, k, d)


def test_jsonl_roundtrip(tmp_path):
    cat = enumerate_catalog(3)
    path = tmp_path / "cat3.jsonl"
    cat.save(str(path))
    again = Catalog.load(str(path))
    assert again == cat
    # artifact is deterministic
    cat.save(str(tmp_path / "cat3b.jsonl"))
    assert (tmp_path / "cat3.jsonl").read_bytes() == (tmp_path / "cat3b.jsonl").read_bytes()


def test_worker_count_does_not_change_output():
    c1 = enumerate_catalog(3, workers=1)
    c2 = enumerate_catalog(3, workers=3)
    assert c1.to_jsonl() == c2.to_jsonl()


def test_env_override_workers(monkeypatch):
    from bsp.enumeration import resolve_workers

    monkeypatch.setenv("BSP_WORKERS", "5")
    assert resolve_workers(1) == 5
    monkeypatch.delenv("BSP_WORKERS")
    assert resolve_workers(None) == 1


def test_checkpoint_resume(tmp_path):
    ck = str(tmp_path / "ck.json")
    full = enumerate_catalog(4)
    # simulate a partial run: do a few branches by hand, write checkpoint
    from bsp.enumeration import _checkpoint_write, branch_split
    from bsp.kernel import enum_branch

    top = branch_split(4)
    partial = {}
    done = set()
    for p in range(3):
        _, _, items = enum_branch(4, top, p)
        for hb, mask in items:
            prev = partial.get(hb)
            if prev is None or mask < prev:
                partial[hb] = mask
        done.add(p)
    _checkpoint_write(ck, 4, top, done, partial)
    resumed = enumerate_catalog(4, checkpoint_path=ck)
    assert resumed.to_jsonl() == full.to_jsonl()
    assert not os.path.exists(ck)  # consumed on completion


def test_checkpoint_corrupt(tmp_path):
    ck = tmp_path / "ck.json"
    ck.write_text("{not json", encoding="ascii")
    with pytest.raises(CheckpointCorruptError):
        enumerate_catalog(3, checkpoint_path=str(ck))
    ck.write_text(json.dumps({"d": 2, "top_count": 0, "done_branches": [],
                              "partial_keys": []}), encoding="ascii")
    with pytest.raises(CheckpointCorruptError):
        enumerate_catalog(3, checkpoint_path=str(ck))


def test_stats_achievable_and_figure_points():
    cat = enumerate_catalog(3)
    st = stats(cat)
    # d=3 classes: the cube pair (4,8) and two (5,6) classes; achievable
    # sizes are the symmetrized downward closure with minimum size d
    want = set()
    for m, n in ((4, 8), (5, 6)):
        for a in range(3, m + 1):
            for b in range(3, n + 1):
                want.add((a, b))
                want.add((b, a))
    assert st.achievable == want
    assert (5, 7) not in st.achievable
    assert set(st.maximal_pairs) == {(4, 8), (5, 6), (6, 5), (8, 4)}
    assert st.max_product == 32
    pts = st.fig_min_product_points()
    assert (3, 9) in pts and (4, 32) in pts


def test_verify_against_reference_roundtrip():
    cat = enumerate_catalog(3)
    st = stats(cat)
    ref = st.fig_size_points()
    assert verify_against_reference(st, ref).equal
    diff = verify_against_reference(st, ref[:-1] + [(99, 99)])
    assert diff.missing == ((99, 99),)
    assert diff.extra == (ref[-1],)


def test_figure1_reference_shipped_data():
    ref = figure1_reference()
    assert len(ref) == 212
    assert (6, 32) in ref and (32, 6) in ref and (10, 17) in ref
    # symmetric
    s = set(ref)
    assert all((b, a) in s for a, b in s)


@pytest.mark.slow
def test_enumerate_d5_reproduces_figure1():
    cat = enumerate_catalog(5, workers=os.cpu_count())
    st = stats(cat)
    assert verify_against_reference(st, figure1_reference()).equal
    assert st.max_product == 192
    assert {(6, 32), (32, 6)} == {
        (m, n) for (m, n) in st.achievable if m * n == 192
    }
    big = {(m, n) for (m, n) in st.achievable if m >= 7 and n >= 7}
    assert max(m * n for m, n in big) == 170
    assert {(m, n) for (m, n) in big if m * n == 170} == {(10, 17), (17, 10)}
