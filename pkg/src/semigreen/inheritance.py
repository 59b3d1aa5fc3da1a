"""Green's relations of a subsemigroup U versus their restrictions from S.

Throughout, ``G'`` denotes a relation computed inside U and ``G|_U`` the
ambient relation restricted to U.  Pairs are reported as ambient indices
in lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from semigreen.core import (
    FiniteSemigroup,
    SubsemigroupEmbedding,
    closure_members,
    embedding,
    is_closed,
    regular_mask,
)
from semigreen.errors import InheritanceError
from semigreen.green import KINDS, GreenStructure, green_classes
from semigreen.stability import element_stability


@dataclass
class InheritanceReport:
    contains: dict[str, bool]
    equals: dict[str, bool]
    u_regular: bool
    reg_s_closed: bool
    counterexamples: dict[str, list[tuple[int, int]]] = field(default_factory=dict)


def _pairs(mask: np.ndarray, members) -> list[tuple[int, int]]:
    return [(members[i], members[j]) for i, j in np.argwhere(mask).tolist()]


def inheritance_report(S: FiniteSemigroup, U: SubsemigroupEmbedding,
                       G: GreenStructure | None = None,
                       GU: GreenStructure | None = None) -> InheritanceReport:
    """Compare G' with G|_U for all five relations.

    Raises InheritanceError if G' is not contained in G|_U or if U is
    regular and R, L or H is not inherited; both are theorems.
    """
    G = G if G is not None else green_classes(S)
    GU = GU if GU is not None else green_classes(U.local)
    idx = U.to_ambient
    members = U.members
    contains, equals, cex = {}, {}, {}
    for kind in KINDS:
        local = GU.relation(kind)
        amb = G.ids(kind)[idx]
        restricted = amb[:, None] == amb[None, :]
        contains[kind] = not (local & ~restricted).any()
        missing = restricted & ~local
        equals[kind] = not missing.any()
        if not equals[kind]:
            cex[kind] = _pairs(missing, members)
    u_regular = bool(regular_mask(U.local).all())
    reg_s = tuple(np.flatnonzero(regular_mask(S)).tolist())
    report = InheritanceReport(contains, equals, u_regular, members == reg_s, cex)
    for kind in KINDS:
        if not contains[kind]:
            raise InheritanceError(f"{kind}' not contained in {kind}|_U for {members}")
    if u_regular and not all(equals[k] for k in "RLH"):
        raise InheritanceError(f"regular U = {members} does not inherit R, L, H")
    return report


@dataclass
class LeqCheck:
    violations: list[tuple[str, int, int]]
    findings: list[tuple[str, int, int]]


def leqr_inheritance_check(S: FiniteSemigroup, U: SubsemigroupEmbedding,
                           G: GreenStructure | None = None,
                           GU: GreenStructure | None = None) -> LeqCheck:
    """For y regular in U: x <=R y in S implies x <=R' y in U, and dually.

    ``violations`` must be empty.  ``findings`` lists the near misses
    where x is regular in U, y is not, x <= y in S but x is not <= y in U.
    """
    G = G if G is not None else green_classes(S)
    GU = GU if GU is not None else green_classes(U.local)
    idx = U.to_ambient
    members = U.members
    reg = regular_mask(U.local)
    violations, findings = [], []
    for kind, amb, loc in (("R", G.leq_r, GU.leq_r), ("L", G.leq_l, GU.leq_l)):
        fails = amb[np.ix_(idx, idx)] & ~loc
        violations += [(kind, a, b) for a, b in _pairs(fails & reg[None, :], members)]
        near = fails & reg[:, None] & ~reg[None, :]
        findings += [(kind, a, b) for a, b in _pairs(near, members)]
    return LeqCheck(sorted(violations, key=lambda t: (t[1], t[2], t[0])),
                    sorted(findings, key=lambda t: (t[1], t[2], t[0])))


@dataclass
class RegClosedReport:
    closed: bool
    members: tuple[int, ...]
    violating_pair: tuple[int, int] | None = None
    d_equal: bool | None = None
    j_equal: bool | None = None
    d_equals_j_local: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.closed or bool(self.d_equal and self.j_equal
                                       and self.d_equals_j_local)


def reg_closed_check(S: FiniteSemigroup, G: GreenStructure | None = None) -> RegClosedReport:
    """If Reg(S) is a subsemigroup U, check D' = D|_U and D' = J' = J|_U."""
    G = G if G is not None else green_classes(S)
    members = tuple(np.flatnonzero(regular_mask(S)).tolist())
    if not members:
        return RegClosedReport(False, members)
    bad = is_closed(S, members)
    if bad is not None:
        return RegClosedReport(False, members, bad)
    U = embedding(S, members)
    GU = green_classes(U.local)
    report = inheritance_report(S, U, G, GU)
    return RegClosedReport(True, members, None, report.equals["D"], report.equals["J"],
                           bool((GU.relation("D") == GU.relation("J")).all()))


@dataclass
class ThmStableCheck:
    applicable: bool
    violations: list[tuple[int, int]] = field(default_factory=list)


def thm_stable_check(S: FiniteSemigroup, U: SubsemigroupEmbedding,
                     G: GreenStructure | None = None,
                     GU: GreenStructure | None = None) -> ThmStableCheck:
    """With R' = R|_U and L' = L|_U: x J y, x <=J' y and y stable give x D' y."""
    G = G if G is not None else green_classes(S)
    GU = GU if GU is not None else green_classes(U.local)
    idx = U.to_ambient
    for kind in "RL":
        amb = G.ids(kind)[idx]
        if not ((amb[:, None] == amb[None, :]) == GU.relation(kind)).all():
            return ThmStableCheck(False)
    stable = np.array([all(_stable(S, G, int(y))) for y in idx])
    j_amb = G.j_class[idx]
    hyp = (j_amb[:, None] == j_amb[None, :]) & GU.leq_j & stable[None, :]
    bad = hyp & ~GU.relation("D")
    return ThmStableCheck(True, _pairs(bad, U.members))


def _stable(S, G, y):
    es = element_stability(S, G, y)
    return es.right_stable, es.left_stable


def enumerate_subsemigroups(S: FiniteSemigroup, max_seed: int = 3,
                            cap: int = 5000) -> tuple[list[SubsemigroupEmbedding], bool]:
    """Closures of all nonempty subsets of size <= max_seed, deduplicated.

    Returns ``(embeddings, truncated)``; at most ``cap`` embeddings are kept.
    """
    if max_seed < 1:
        raise ValueError("max_seed must be at least 1")
    seen = {}
    for k in range(1, min(max_seed, S.n) + 1):
        for seeds in combinations(range(S.n), k):
            members = closure_members(S, seeds)
            if members in seen:
                continue
            if len(seen) >= cap:
                return list(seen.values()), True
            seen[members] = embedding(S, members, seeds=seeds)
    return list(seen.values()), False
