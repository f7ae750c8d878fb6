"""Component census, criticality, and the augmentation target size."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .blocks import BlockTree, Decomposition, PendantRec, decompose, pendant_records
from .graph import BipartiteGraph
from .matching import MatchingProfile, counts_of, profile

ISOLATED = "isolated"
EDGE = "edge"
BLOCK = "block"
NEEDY = "needy"


@dataclass
class ComponentCensus:
    c1: int  # components needing work that are not lone edges
    c2: int  # lone edge components
    c3: int  # components that already are nonsingular blocks
    c_iso: int  # lone vertices, already finished
    comp_classes: list[str]

    @property
    def c_total(self) -> int:
        return self.c1 + self.c2


def census(dec: Decomposition) -> ComponentCensus:
    classes = []
    c1 = c2 = c3 = c_iso = 0
    for comp in dec.comps:
        if len(comp) == 1:
            classes.append(ISOLATED)
            c_iso += 1
        elif len(comp) == 2:
            classes.append(EDGE)
            c2 += 1
        elif not any(dec.is_cut[v] for v in comp):
            classes.append(BLOCK)
            c3 += 1
        else:
            classes.append(NEEDY)
            c1 += 1
    return ComponentCensus(c1, c2, c3, c_iso, classes)


@dataclass
class CriticalityReport:
    comp: int
    d_max: int
    c_star: Optional[int]  # lowest cut vertex of maximum split count
    massive: list[int]
    critical: list[int]
    m: int
    r: int


def criticality(
    g: BipartiteGraph,
    dec: Decomposition,
    recs: list[PendantRec],
    cid: int,
) -> CriticalityReport:
    comp = dec.comps[cid]
    counts = counts_of([p.ptype for p in recs if p.comp == cid])
    prof = profile(*counts)
    cuts = [v for v in comp if dec.is_cut[v]]
    d_max = max((dec.branch_count(v) for v in comp), default=0)
    c_star = None
    for v in cuts:
        if dec.branch_count(v) == d_max:
            c_star = v
            break
    massive = [v for v in cuts if dec.branch_count(v) - 1 > prof.m + prof.r]
    critical = [v for v in cuts if dec.branch_count(v) - 1 == prof.m + prof.r]
    return CriticalityReport(cid, d_max, c_star, massive, critical, prof.m, prof.r)


def _eta_formula(max_d: int, c_non_block: int, m: int, r: int) -> int:
    return max(max_d + c_non_block - 2, m + r, 0)


def eta(g: BipartiteGraph) -> int:
    """Lower bound on the number of edges any augmentation needs.

    Defined for connected graphs; the empty graph counts as zero.
    """
    if g.n == 0:
        return 0
    dec = decompose(g)
    if len(dec.comps) != 1:
        raise ValueError("eta is defined on connected graphs")
    return eta_extended(g, dec, pendant_records(g, dec))


def eta_extended(
    g: BipartiteGraph, dec: Decomposition, recs: list[PendantRec]
) -> int:
    """The same bound evaluated on an arbitrary graph."""
    cen = census(dec)
    max_d = max((dec.branch_count(v) for v in range(g.n)), default=0)
    prof = profile(*counts_of([p.ptype for p in recs]))
    return _eta_formula(max_d, cen.c_total, prof.m, prof.r)


@dataclass(frozen=True)
class CaseLabel:
    m_case: Optional[str] = None  # M1..M6
    s_case: Optional[str] = None  # S1, S2, S3, S4_1, S4_2, S5


def classify_m(cen: ComponentCensus, m: int) -> CaseLabel:
    """Top level case label for the whole graph."""
    if cen.c_total == 0:
        label = "M6"
    elif cen.c1 == 0 and cen.c2 == 1:
        label = "M5" if cen.c3 > 0 else "M4"
    elif cen.c_total == 1:
        label = "M1"
    else:
        label = "M2" if m == 0 else "M3"
    return CaseLabel(m_case=label)


def classify_s(
    tree: BlockTree, prof: MatchingProfile, report: CriticalityReport
) -> CaseLabel:
    """Case label for one connected component about to be solved."""
    lam = len(tree.leaves())
    if lam <= 3:
        s = "S1"
    elif prof.m == 0:
        s = "S2"
    elif report.massive:
        s = "S5"
    elif len(report.critical) == 2:
        s = "S3"
    else:
        branching = sum(1 for x in tree.live_nodes() if tree.degree(x) >= 3)
        s = "S4_1" if branching == 1 else "S4_2"
    return CaseLabel(s_case=s)


def theorem_target(
    g: BipartiteGraph, dec: Decomposition, recs: list[PendantRec]
) -> int:
    """Exact optimum size for the full graph."""
    cen = census(dec)
    prof = profile(*counts_of([p.ptype for p in recs]))
    label = classify_m(cen, prof.m).m_case
    if label == "M6":
        return 0
    if label == "M4":
        return 3
    if label == "M5":
        return 2
    if label == "M2":
        return prof.r  # m == 0, so this is the pendant count
    return eta_extended(g, dec, recs)
