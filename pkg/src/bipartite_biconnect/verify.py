"""Deletion based checker and exhaustive reference solver.

Everything here is plain reachability over bit masks, kept deliberately
independent of the block decomposition so it can referee the solver.
A component passes when it is a single vertex, or has at least three
vertices and survives every single vertex deletion and every single
edge deletion connected.  Two vertex components always fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import CapExceeded, NoBiconnector
from .graph import BipartiteGraph, components


def _reach(masks: Sequence[int], alive: int, start_bit: int) -> int:
    """Vertices reachable from start_bit inside the alive set, as a mask."""
    reach = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= alive & ~reach
        reach |= nxt
        frontier = nxt
    return reach


def _connected(masks: Sequence[int], alive: int) -> bool:
    if alive == 0:
        return True
    return _reach(masks, alive, alive & -alive) == alive


def _adjacency_masks(g: BipartiteGraph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _component_witness(
    masks: list[int], comp_mask: int, size: int, labels: Sequence[str]
) -> Optional[str]:
    """None when the component is biconnected, else what breaks it."""
    if size == 1:
        return None
    if size == 2:
        return "a two vertex component is never biconnected"
    c = comp_mask
    while c:
        low = c & -c
        c ^= low
        if not _connected(masks, comp_mask ^ low):
            return f"deleting vertex {labels[low.bit_length() - 1]} disconnects it"
    c = comp_mask
    while c:
        low = c & -c
        c ^= low
        u = low.bit_length() - 1
        nb = masks[u] & comp_mask & ~(low | (low - 1))
        while nb:
            vb = nb & -nb
            nb ^= vb
            v = vb.bit_length() - 1
            masks[u] ^= vb
            masks[v] ^= low
            ok = _connected(masks, comp_mask)
            masks[u] ^= vb
            masks[v] ^= low
            if not ok:
                return f"deleting edge {labels[u]} {labels[v]} disconnects it"
    return None


@dataclass
class VerifyReport:
    componentwise_biconnected: bool
    witness: Optional[tuple[int, str]]  # (component index, what fails)
    oracle_size: Optional[int] = None
    agreement: bool = True
    edge_errors: list[str] = field(default_factory=list)
    components_checked: int = 0

    @property
    def passed(self) -> bool:
        return (
            self.componentwise_biconnected
            and self.agreement
            and not self.edge_errors
        )

    def lines(self) -> list[str]:
        out = []
        for err in self.edge_errors:
            out.append(f"BAD EDGE {err}")
        if self.witness is not None:
            cid, why = self.witness
            out.append(f"BAD COMPONENT {cid}: {why}")
        if self.oracle_size is not None and not self.agreement:
            out.append(f"SIZE MISMATCH oracle wants {self.oracle_size}")
        if not out:
            out.append(f"OK ({self.components_checked} components checked)")
        return out


def check_componentwise_biconnected(g: BipartiteGraph) -> VerifyReport:
    """Is every component an isolated vertex or a biconnected set?"""
    masks = _adjacency_masks(g)
    comps = components(g)
    for cid, comp in enumerate(comps):
        comp_mask = 0
        for v in comp:
            comp_mask |= 1 << v
        why = _component_witness(masks, comp_mask, len(comp), g.labels)
        if why is not None:
            return VerifyReport(
                componentwise_biconnected=False,
                witness=(cid, why),
                components_checked=len(comps),
            )
    return VerifyReport(
        componentwise_biconnected=True,
        witness=None,
        components_checked=len(comps),
    )


def is_componentwise_biconnected(g: BipartiteGraph) -> bool:
    return check_componentwise_biconnected(g).componentwise_biconnected


def verify_result(
    g: BipartiteGraph,
    result,
    use_oracle: bool = False,
    cap: int = 8,
) -> VerifyReport:
    """Check a proposed augmentation against the original graph.

    `result` is an AugmentationResult or any iterable of label pairs.
    Pair level failures (unknown vertex, same side, duplicate) and
    structural failures end up in the report, never as exceptions.
    With use_oracle, additionally confirm the size is minimum whenever
    the instance fits the exhaustive search guards.
    """
    pairs = (
        list(result.added_edges)
        if hasattr(result, "added_edges")
        else [tuple(p) for p in result]
    )
    edge_errors: list[str] = []
    idx_pairs: list[tuple[int, int]] = []
    seen = set(g.edge_set)
    for x, y in pairs:
        if x not in g.label_index or y not in g.label_index:
            missing = x if x not in g.label_index else y
            edge_errors.append(f"{x} {y}: unknown vertex {missing}")
            continue
        u, v = g.label_index[x], g.label_index[y]
        if g.sides[u] == g.sides[v]:
            edge_errors.append(f"{x} {y}: same side")
            continue
        if g.sides[u] == 1:
            u, v = v, u
        if (u, v) in seen:
            edge_errors.append(f"{x} {y}: duplicate edge")
            continue
        seen.add((u, v))
        idx_pairs.append((u, v))
    if edge_errors:
        return VerifyReport(
            componentwise_biconnected=False,
            witness=None,
            agreement=False,
            edge_errors=edge_errors,
        )
    rep = check_componentwise_biconnected(g.with_added_edges(idx_pairs))
    if use_oracle:
        try:
            oracle_size, _ = brute_force_optimal(g, cap)
            rep.oracle_size = oracle_size
            rep.agreement = rep.componentwise_biconnected and len(pairs) == oracle_size
        except NoBiconnector:
            rep.agreement = False
        except (CapExceeded, ValueError):
            pass  # outside the guards; size stays unconfirmed
    return rep


def legal_nonedges(g: BipartiteGraph) -> list[tuple[int, int]]:
    """All missing A to B index pairs, ascending."""
    out = []
    for u in g.a_vertices():
        for v in g.b_vertices():
            if (u, v) not in g.edge_set:
                out.append((u, v))
    return out


def _masks_componentwise_ok(masks: list[int], n: int, labels: Sequence[str]) -> bool:
    seen = 0
    for s in range(n):
        sb = 1 << s
        if seen & sb:
            continue
        comp_mask = _reach(masks, (1 << n) - 1, sb)
        seen |= comp_mask
        size = bin(comp_mask).count("1")
        if _component_witness(masks, comp_mask, size, labels) is not None:
            return False
    return True


def brute_force_optimal(
    g: BipartiteGraph, cap: int = 8
) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Smallest augmentation by exhaustive subset search.

    Tries every candidate subset in increasing size then lexicographic
    order, so the answer is deterministic.  Returns (size, index pairs).
    Raises NoBiconnector when the full candidate set is exhausted
    without success, CapExceeded when only subsets up to cap were ruled
    out, and ValueError when the instance is too big to search at all.
    """
    legal = legal_nonedges(g)
    if len(legal) > 30:
        raise ValueError("too many candidate pairs for exhaustive search")
    if cap > 8:
        raise ValueError("cap above 8 is not supported")
    base = _adjacency_masks(g)
    limit = min(cap, len(legal))
    for k in range(limit + 1):
        for subset in combinations(legal, k):
            masks = list(base)
            for u, v in subset:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            if _masks_componentwise_ok(masks, g.n, g.labels):
                return k, subset
    if limit == len(legal):
        raise NoBiconnector("exhaustive search proves no augmentation exists")
    raise CapExceeded(f"no augmentation of size <= {cap} found")
