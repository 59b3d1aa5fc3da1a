"""Green's preorders, Green's classes and eggbox diagrams.

The preorders are computed as reachability in Cayley graphs: ``x <=R y``
iff x can be reached from y by right multiplications, which is the same
as ``x in yS^1``.  Reachability goes through the strongly connected
components of the graph (Tarjan), whose condensation is a DAG.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from semigreen.core import FiniteSemigroup, idempotents
from semigreen.errors import DJMismatchError, UnknownClassError

KINDS = ("R", "L", "H", "D", "J")


def strongly_connected_components(succ: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan.  Components come out in reverse topological order:
    every edge leaving a component points into one emitted earlier."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work[-1]
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            nbrs = succ[v]
            descended = False
            while pos < len(nbrs):
                w = nbrs[pos]
                pos += 1
                if index[w] == -1:
                    work[-1] = (v, pos)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if descended:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def reachability(succ: list[list[int]]) -> np.ndarray:
    """``reach[y, x]`` is True iff x is reachable from y (reflexively)."""
    n = len(succ)
    reach = np.zeros((n, n), dtype=bool)
    comp_of = [-1] * n
    for c, comp in enumerate(strongly_connected_components(succ)):
        for v in comp:
            comp_of[v] = c
        row = np.zeros(n, dtype=bool)
        row[comp] = True
        for v in comp:
            for w in succ[v]:
                if comp_of[w] != c:
                    row |= reach[w]
        reach[comp] = row
    return reach


def _succ(S: FiniteSemigroup, right: bool, left: bool) -> list[list[int]]:
    M = S.multipliers()
    parts = []
    if right:
        parts.append(S.table[:, M])
    if left:
        parts.append(S.table[M, :].T)
    return [sorted(set(r)) for r in np.hstack(parts).tolist()]


def compute_preorders(S: FiniteSemigroup) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(leq_r, leq_l, leq_j)`` with ``leq_r[x, y]`` iff x <=R y."""
    leq_r = reachability(_succ(S, True, False)).T
    leq_l = reachability(_succ(S, False, True)).T
    leq_j = reachability(_succ(S, True, True)).T
    return leq_r, leq_l, leq_j


def preorders_bruteforce(S: FiniteSemigroup) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Definitional preorders: x in {y} u yS, {y} u Sy, {y} u yS u Sy u SyS."""
    n = S.n
    T = S.table
    eye = np.eye(n, dtype=bool)
    leq_r = eye.copy()
    leq_l = eye.copy()
    leq_j = eye.copy()
    for y in range(n):
        leq_r[T[y, :], y] = True
        leq_l[T[:, y], y] = True
        leq_j[T[y, :], y] = True
        leq_j[T[:, y], y] = True
        leq_j[T[T[:, y]].ravel(), y] = True
    return leq_r, leq_l, leq_j


def _class_ids(rel: np.ndarray) -> np.ndarray:
    """Class ids of an equivalence, numbered in order of smallest member."""
    n = rel.shape[0]
    ids = np.full(n, -1, dtype=np.int64)
    nxt = 0
    for x in range(n):
        if ids[x] == -1:
            ids[rel[x]] = nxt
            nxt += 1
    return ids


def _same(ids: np.ndarray) -> np.ndarray:
    return ids[:, None] == ids[None, :]


@dataclass(frozen=True, eq=False)
class GreenStructure:
    leq_r: np.ndarray
    leq_l: np.ndarray
    leq_j: np.ndarray
    r_class: np.ndarray
    l_class: np.ndarray
    h_class: np.ndarray
    d_class: np.ndarray
    j_class: np.ndarray

    @property
    def n(self) -> int:
        return len(self.r_class)

    def ids(self, kind: str) -> np.ndarray:
        return {"R": self.r_class, "L": self.l_class, "H": self.h_class,
                "D": self.d_class, "J": self.j_class}[kind]

    def relation(self, kind: str) -> np.ndarray:
        return _same(self.ids(kind))

    def related(self, kind: str, x: int, y: int) -> bool:
        ids = self.ids(kind)
        return bool(ids[x] == ids[y])

    def classes(self, kind: str) -> list[list[int]]:
        ids = self.ids(kind)
        out = [[] for _ in range(int(ids.max()) + 1)]
        for x, c in enumerate(ids.tolist()):
            out[c].append(x)
        return out

    def count(self, kind: str) -> int:
        return int(self.ids(kind).max()) + 1


def green_classes(S: FiniteSemigroup, preorders=None) -> GreenStructure:
    """All five Green's relations of a finite semigroup.

    D is computed twice, as the composite R o L and as J; they must agree
    on a finite semigroup and DJMismatchError is raised if they do not.
    """
    leq_r, leq_l, leq_j = preorders if preorders is not None else compute_preorders(S)
    R = leq_r & leq_r.T
    L = leq_l & leq_l.T
    J = leq_j & leq_j.T
    r_ids = _class_ids(R)
    l_ids = _class_ids(L)
    j_ids = _class_ids(J)
    h_ids = _class_ids(R & L)
    D = (R.astype(np.int32) @ L.astype(np.int32)) > 0
    bad = np.argwhere(D != J)
    if len(bad):
        raise DJMismatchError(int(bad[0][0]), int(bad[0][1]))
    d_ids = _class_ids(D)
    return GreenStructure(leq_r, leq_l, leq_j, r_ids, l_ids, h_ids, d_ids, j_ids)


@dataclass(frozen=True)
class EggboxDiagram:
    """One D-class drawn as a grid: rows are R-classes, columns L-classes."""

    d_class: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    cells: tuple[tuple[tuple[int, ...], ...], ...]
    group: tuple[tuple[bool, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def elements(self) -> list[int]:
        return sorted(x for row in self.cells for cell in row for x in cell)


def eggbox(S: FiniteSemigroup, G: GreenStructure, d: int) -> EggboxDiagram:
    if not 0 <= d < G.count("D"):
        raise UnknownClassError(d)
    members = np.flatnonzero(G.d_class == d)
    rows = sorted(set(G.r_class[members].tolist()))
    cols = sorted(set(G.l_class[members].tolist()))
    idem = set(idempotents(S))
    cells = []
    group = []
    for r in rows:
        row_cells = []
        row_group = []
        for c in cols:
            cell = tuple(int(x) for x in members
                         if G.r_class[x] == r and G.l_class[x] == c)
            row_cells.append(cell)
            row_group.append(any(x in idem for x in cell))
        cells.append(tuple(row_cells))
        group.append(tuple(row_group))
    return EggboxDiagram(d, tuple(rows), tuple(cols), tuple(cells), tuple(group))


def eggboxes(S: FiniteSemigroup, G: GreenStructure) -> list[EggboxDiagram]:
    return [eggbox(S, G, d) for d in range(G.count("D"))]


def is_group_h_class(S: FiniteSemigroup, G: GreenStructure, h: int) -> bool:
    if not 0 <= h < G.count("H"):
        raise UnknownClassError(h)
    members = np.flatnonzero(G.h_class == h)
    return bool((S.table[members, members] == members).any())
