"""Shared fixture graphs.

Small shapes with hand-checkable structure, reused across the suite.
"""

from __future__ import annotations

import pytest

from bipartite_biconnect import build_graph


@pytest.fixture
def p4():
    """Path a1 - b1 - a2 - b2: two pendants, one edge fixes it."""
    return build_graph(
        ["a1", "a2"],
        ["b1", "b2"],
        [("a1", "b1"), ("a2", "b1"), ("a2", "b2")],
    )


@pytest.fixture
def c4():
    """Four cycle: already biconnected."""
    return build_graph(
        ["a1", "a2"],
        ["b1", "b2"],
        [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")],
    )


@pytest.fixture
def path5():
    """Path a1 - b1 - a2 - b2 - a3: pendants on one side only."""
    return build_graph(
        ["a1", "a2", "a3"],
        ["b1", "b2"],
        [("a1", "b1"), ("a2", "b1"), ("a2", "b2"), ("a3", "b2")],
    )


@pytest.fixture
def spider4():
    """Hub x with four legs of lengths 1, 1, 2, 2: the hub splits the
    component harder than the pendants can pay for."""
    return build_graph(
        ["x", "a3", "a4"],
        ["b1", "b2", "b3", "b4"],
        [
            ("x", "b1"),
            ("x", "b2"),
            ("x", "b3"),
            ("x", "b4"),
            ("a3", "b3"),
            ("a4", "b4"),
        ],
    )


@pytest.fixture
def broom2():
    """Two hubs joined by an edge, two leaves each: both hubs critical."""
    return build_graph(
        ["a0", "a1", "a2"],
        ["b0", "b1", "b2"],
        [
            ("a0", "b0"),
            ("a0", "b1"),
            ("a0", "b2"),
            ("a1", "b0"),
            ("a2", "b0"),
        ],
    )


@pytest.fixture
def lone_edge_plus_isolated():
    """One edge and one spare vertex per side: needs a full four cycle."""
    return build_graph(["a1", "a2"], ["b1", "b2"], [("a1", "b1")])


@pytest.fixture
def lone_edge_plus_block():
    """One edge next to a finished four cycle: two edges splice them."""
    return build_graph(
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
