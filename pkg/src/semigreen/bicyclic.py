"""The bicyclic monoid <a, b | ab = 1> in normal form b^i a^j.

Exponents are Python ints, so there is no overflow.  Green's relations
have closed forms here; :func:`definitional_relations` recomputes them
from first principles on a bounded box of elements so the closed forms
can be checked.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

import numpy as np


@dataclass(frozen=True, order=True)
class BicyclicElement:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("exponents must be non-negative")

    def __mul__(self, other: BicyclicElement) -> BicyclicElement:
        return bmul(self, other)

    def __repr__(self) -> str:
        if self.i == self.j == 0:
            return "1"
        parts = []
        for sym, e in (("b", self.i), ("a", self.j)):
            if e == 1:
                parts.append(sym)
            elif e > 1:
                parts.append(f"{sym}^{e}")
        return "".join(parts)

    def inverse(self) -> BicyclicElement:
        return BicyclicElement(self.j, self.i)

    def is_idempotent(self) -> bool:
        return self.i == self.j


ONE = BicyclicElement(0, 0)
A = BicyclicElement(0, 1)
B = BicyclicElement(1, 0)


def bmul(x: BicyclicElement, y: BicyclicElement) -> BicyclicElement:
    # b^i a^j b^k a^l: cancel t = min(j, k) copies of ab
    t = min(x.j, y.i)
    return BicyclicElement(x.i + y.i - t, x.j + y.j - t)


@dataclass(frozen=True)
class BicyclicRelations:
    R: bool
    L: bool
    H: bool
    D: bool
    J: bool
    leq_r: bool
    leq_l: bool


def green_bicyclic(x: BicyclicElement, y: BicyclicElement) -> BicyclicRelations:
    R = x.i == y.i
    L = x.j == y.j
    return BicyclicRelations(R=R, L=L, H=R and L, D=True, J=True,
                             leq_r=x.i >= y.i, leq_l=x.j >= y.j)


def natural_leq(e: BicyclicElement, f: BicyclicElement) -> bool:
    """Natural partial order on idempotents: e <= f iff e = f e f."""
    return e == f * e * f


def idempotent_chain(n: int) -> list[BicyclicElement]:
    """The idempotents 1 > ba > b^2 a^2 > ... > b^n a^n, checked as it goes."""
    if n < 1:
        raise ValueError("n must be positive")
    chain = [BicyclicElement(k, k) for k in range(n + 1)]
    for k, e in enumerate(chain):
        if e * e != e:
            raise AssertionError(f"{e!r} is not idempotent")
        if k and not (natural_leq(e, chain[k - 1]) and e != chain[k - 1]):
            raise AssertionError(f"{e!r} is not strictly below {chain[k - 1]!r}")
    return chain


@dataclass(frozen=True)
class StabilityWitness:
    side: str
    x: BicyclicElement
    y: BicyclicElement
    product: BicyclicElement
    j_related: bool
    related: bool

    @property
    def verified(self) -> bool:
        return self.j_related and not self.related


def bicyclic_stability_witnesses() -> tuple[StabilityWitness, StabilityWitness]:
    """(1, 1 b) lies in J but not R, and (1, a 1) in J but not L."""
    rb = ONE * B
    rel = green_bicyclic(ONE, rb)
    right = StabilityWitness("right", ONE, B, rb, rel.J, rel.R)
    la = A * ONE
    rel = green_bicyclic(ONE, la)
    left = StabilityWitness("left", ONE, A, la, rel.J, rel.L)
    return right, left


def mrstar_failure_demo(n: int) -> list[BicyclicElement]:
    """R-class representatives b^k for k = 0..n, each strictly <R the last.

    There is only one J-class, so this strictly descending chain shows it
    has no <=R-minimal R-class, at least down to depth n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    chain = [BicyclicElement(k, 0) for k in range(n + 1)]
    for k in range(n):
        hi, lo = chain[k], chain[k + 1]
        if hi * B != lo:
            raise AssertionError(f"{lo!r} != {hi!r} b")
        down = green_bicyclic(lo, hi)
        up = green_bicyclic(hi, lo)
        if not (down.leq_r and not up.leq_r and down.J):
            raise AssertionError(f"{lo!r} <R {hi!r} is not strict")
        if lo * B == lo:
            raise AssertionError("chain stalls")
    return chain


def box(bound: int) -> list[BicyclicElement]:
    return [BicyclicElement(i, j) for i, j in cartesian(range(bound + 1), repeat=2)]


def _mul(x, y):
    t = min(x[1], y[0])
    return x[0] + y[0] - t, x[1] + y[1] - t


def right_multiple(y: BicyclicElement, x: BicyclicElement) -> BicyclicElement | None:
    """Some s with y s = x, searched exhaustively, else None.

    The search box is complete: y s = x forces s.i <= x.i + y.j and
    s.j <= x.j, since cancellation only removes y.j copies of ab.
    """
    yt, xt = (y.i, y.j), (x.i, x.j)
    for p in range(x.i + y.j + 1):
        for q in range(x.j + 1):
            if _mul(yt, (p, q)) == xt:
                return BicyclicElement(p, q)
    return None


def left_multiple(y: BicyclicElement, x: BicyclicElement) -> BicyclicElement | None:
    """Some s with s y = x; mirror image of :func:`right_multiple`."""
    yt, xt = (y.i, y.j), (x.i, x.j)
    for p in range(x.i + 1):
        for q in range(x.j + y.i + 1):
            if _mul((p, q), yt) == xt:
                return BicyclicElement(p, q)
    return None


def definitional_relations(bound: int):
    """Green's relations on the box {b^i a^j : i, j <= bound} from definitions.

    Returns ``(elements, rels)`` where ``rels`` maps a relation name to a
    boolean matrix indexed like ``elements``.  ``<=R`` and ``<=L`` come from
    exhaustive solution of ``y s = x`` and ``s y = x``.  ``x <=J y`` is
    decided as ``x <=R z <=L y`` for some z in the box: S^1 y S^1 is the
    union of the z S^1 over z in S^1 y, and z = b^i a^l stays in the box
    whenever x = b^i a^j and y = b^k a^l do.
    """
    elems = box(bound)
    m = len(elems)
    leq_r = np.zeros((m, m), dtype=bool)
    leq_l = np.zeros((m, m), dtype=bool)
    for b_, y in enumerate(elems):
        for a_, x in enumerate(elems):
            leq_r[a_, b_] = right_multiple(y, x) is not None
            leq_l[a_, b_] = left_multiple(y, x) is not None
    leq_j = (leq_r.astype(np.int32) @ leq_l.astype(np.int32)) > 0
    R = leq_r & leq_r.T
    L = leq_l & leq_l.T
    D = (R.astype(np.int32) @ L.astype(np.int32)) > 0
    rels = {"leq_r": leq_r, "leq_l": leq_l, "R": R, "L": L, "H": R & L,
            "D": D, "J": leq_j & leq_j.T}
    return elems, rels


def closed_form_relations(elems: list[BicyclicElement]) -> dict[str, np.ndarray]:
    fields = ("leq_r", "leq_l", "R", "L", "H", "D", "J")
    out = {f: np.zeros((len(elems), len(elems)), dtype=bool) for f in fields}
    for a_, x in enumerate(elems):
        for b_, y in enumerate(elems):
            rel = green_bicyclic(x, y)
            for f in fields:
                out[f][a_, b_] = getattr(rel, f)
    return out


def _box_arrays(bound: int):
    i, j = np.meshgrid(np.arange(bound + 1), np.arange(bound + 1), indexing="ij")
    return i.ravel(), j.ravel()


def _vmul(xi, xj, yi, yj):
    t = np.minimum(xj, yi)
    return xi + yi - t, xj + yj - t


def check_associativity(bound: int) -> bool:
    """(xy)z = x(yz) for every triple with all exponents <= bound."""
    i, j = _box_arrays(bound)
    xi, yi, zi = np.meshgrid(i, i, i, indexing="ij")
    xj, yj, zj = np.meshgrid(j, j, j, indexing="ij")
    left = _vmul(*_vmul(xi, xj, yi, yj), zi, zj)
    right = _vmul(xi, xj, *_vmul(yi, yj, zi, zj))
    return bool((left[0] == right[0]).all() and (left[1] == right[1]).all())


def check_regular(bound: int) -> bool:
    """x x' x = x with x' = b^j a^i the inverse of x = b^i a^j."""
    i, j = _box_arrays(bound)
    pi, pj = _vmul(*_vmul(i, j, j, i), i, j)
    return bool((pi == i).all() and (pj == j).all())
