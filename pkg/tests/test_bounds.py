"""Component census, criticality, the lower bound, and case labels."""

from __future__ import annotations

import random

import pytest

from bipartite_biconnect import (
    build_graph,
    census,
    classify_m,
    classify_s,
    criticality,
    decompose,
    eta,
    pendant_records,
    theorem_target,
)
from bipartite_biconnect.blocks import BlockTree
from bipartite_biconnect.bounds import eta_extended
from bipartite_biconnect.errors import NoBiconnector
from bipartite_biconnect.matching import counts_of, profile
from bipartite_biconnect.verify import brute_force_optimal

from .helpers import all_graphs, random_graph


def test_census_counts_each_class():
    g = build_graph(
        ["a1", "a2", "a3", "a4", "a5"],
        ["b1", "b2", "b3"],
        [
            ("a1", "b1"),
            ("a2", "b1"),
            ("a2", "b2"),  # path component, needs work
            ("a3", "b3"),  # lone edge component
            ("a4", "b2"),  # extends the path component
        ],
    )
    cen = census(decompose(g))
    assert (cen.c1, cen.c2, cen.c3, cen.c_iso) == (1, 1, 0, 1)
    assert cen.c_total == 2


def test_census_on_path_plus_cycle():
    g = build_graph(
        ["a1", "a2", "a3", "a4"],
        ["b1", "b2", "b3", "b4"],
        [
            ("a1", "b1"),
            ("a2", "b1"),
            ("a2", "b2"),  # path a1-b1-a2-b2
            ("a3", "b3"),
            ("a3", "b4"),
            ("a4", "b3"),
            ("a4", "b4"),  # four cycle
        ],
    )
    cen = census(decompose(g))
    assert (cen.c1, cen.c2, cen.c3, cen.c_iso) == (1, 0, 1, 0)
    assert cen.c_total == 1


def test_census_isolated_vertices_are_inert():
    g = build_graph(["a1", "a2"], ["b1"], [])
    cen = census(decompose(g))
    assert cen.c_iso == 3
    assert cen.c_total == 0


def test_criticality_on_two_hub_broom(broom2):
    dec = decompose(broom2)
    recs = pendant_records(broom2, dec)
    rep = criticality(broom2, dec, recs, 0)
    crit_labels = sorted(broom2.labels[v] for v in rep.critical)
    assert crit_labels == ["a0", "b0"]
    assert rep.massive == []
    assert rep.m == 2 and rep.r == 0
    assert rep.d_max == 3


def test_criticality_flags_massive_hub(spider4):
    dec = decompose(spider4)
    recs = pendant_records(spider4, dec)
    rep = criticality(spider4, dec, recs, 0)
    assert [spider4.labels[v] for v in rep.massive] == ["x"]
    assert rep.critical == []
    assert rep.d_max == 4


def test_eta_fixture_values(p4, c4, path5, spider4, broom2):
    assert eta(p4) == 1
    assert eta(c4) == 0
    assert eta(path5) == 2
    assert eta(spider4) == 3
    assert eta(broom2) == 2


def test_eta_rejects_disconnected():
    g = build_graph(["a1", "a2"], ["b1", "b2"], [("a1", "b1"), ("a2", "b2")])
    with pytest.raises(ValueError):
        eta(g)


def test_eta_equals_exhaustive_minimum_when_connected():
    seen = 0
    for na, nb in [(2, 2), (2, 3), (3, 3)]:
        for g in all_graphs(na, nb):
            dec = decompose(g)
            if len(dec.comps) != 1:
                continue
            seen += 1
            assert eta(g) == brute_force_optimal(g)[0], g.edges
    assert seen > 100


def test_criticality_invariants_hold_on_randoms():
    rng = random.Random(13)
    for _ in range(400):
        g = random_graph(rng, rng.randint(2, 5), rng.randint(2, 5), 0.3)
        dec = decompose(g)
        recs = pendant_records(g, dec)
        for cid, comp in enumerate(dec.comps):
            if len(comp) < 3:
                continue
            rep = criticality(g, dec, recs, cid)
            pend_here = [p for p in recs if p.comp == cid]
            assert len(rep.massive) <= 1
            if len(pend_here) > 3:
                assert len(rep.critical) <= 2
            if len(rep.critical) == 2:
                assert rep.r == 0
            if rep.massive:
                assert not rep.critical


# ----------------------------------------------------------------------
# case labels


def test_classify_m_table():
    def label(g):
        dec = decompose(g)
        recs = pendant_records(g, dec)
        m = profile(*counts_of([p.ptype for p in recs])).m
        return classify_m(census(dec), m).m_case

    assert label(build_graph([], [], [])) == "M6"
    assert label(build_graph(["a1"], ["b1"], [])) == "M6"
    assert label(build_graph(["a1", "a2"], ["b1", "b2"], [("a1", "b1")])) == "M4"
    assert (
        label(
            build_graph(
                ["a1", "a2", "a3"],
                ["b1", "b2", "b3"],
                [
                    ("a1", "b1"),
                    ("a2", "b2"),
                    ("a2", "b3"),
                    ("a3", "b2"),
                    ("a3", "b3"),
                ],
            )
        )
        == "M5"
    )
    p4 = build_graph(
        ["a1", "a2"], ["b1", "b2"], [("a1", "b1"), ("a2", "b1"), ("a2", "b2")]
    )
    assert label(p4) == "M1"
    two_stars = build_graph(
        ["a1", "a2", "a3", "a4"],
        ["b1", "b2"],
        [("a1", "b1"), ("a2", "b1"), ("a3", "b2"), ("a4", "b2")],
    )
    assert label(two_stars) == "M2"
    two_paths = build_graph(
        ["a1", "a2", "a3", "a4"],
        ["b1", "b2", "b3", "b4"],
        [
            ("a1", "b1"),
            ("a2", "b1"),
            ("a2", "b2"),
            ("a3", "b3"),
            ("a4", "b3"),
            ("a4", "b4"),
        ],
    )
    assert label(two_paths) == "M3"


def test_classify_s_table(p4, path5, spider4, broom2):
    def label(g):
        dec = decompose(g)
        recs = pendant_records(g, dec)
        tree = BlockTree.build(g, dec, dec.comps[0])
        prof = profile(*counts_of([p.ptype for p in recs]))
        rep = criticality(g, dec, recs, 0)
        return classify_s(tree, prof, rep).s_case

    assert label(p4) == "S1"
    assert label(path5) == "S1"
    assert label(spider4) == "S5"
    assert label(broom2) == "S3"
    # four leaves on one side of a spine: no pairs at all
    comb = build_graph(
        ["a1", "a2", "a3", "a4", "a5", "a6", "a7"],
        ["b1", "b2", "b3", "b4"],
        [
            ("a5", "b1"),
            ("a5", "b2"),
            ("a6", "b2"),
            ("a6", "b3"),
            ("a7", "b3"),
            ("a7", "b4"),
            ("a1", "b1"),
            ("a2", "b2"),
            ("a3", "b3"),
            ("a4", "b4"),
        ],
    )
    assert label(comb) == "S2"


def test_theorem_target_fixture_values(
    lone_edge_plus_isolated, lone_edge_plus_block, p4
):
    def target(g):
        dec = decompose(g)
        return theorem_target(g, dec, pendant_records(g, dec))

    assert target(lone_edge_plus_isolated) == 3
    assert target(lone_edge_plus_block) == 2
    assert target(build_graph(["a1"], ["b1"], [])) == 0
    assert target(p4) == 1


def test_eta_extended_matches_eta_on_connected(p4, spider4):
    for g in (p4, spider4):
        dec = decompose(g)
        recs = pendant_records(g, dec)
        assert eta_extended(g, dec, recs) == eta(g)
