"""Stability, KW-stability, periodicity and the minimality conditions.

Every flag in :class:`StabilityReport` is computed from its own
definition; none is inferred from another.  On a finite semigroup they
all come out true, which is what makes them useful as cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from semigreen.core import FiniteSemigroup, element_order_data, idempotents
from semigreen.errors import NotLeftCancellativeError, NotRightSimpleError
from semigreen.green import GreenStructure, green_classes


@dataclass(frozen=True)
class ElementStability:
    right_stable: bool
    left_stable: bool
    right_witness: int | None = None
    left_witness: int | None = None


def element_stability(S: FiniteSemigroup, G: GreenStructure, x: int) -> ElementStability:
    """x is right-stable iff x J xy implies x R xy for every y; dually left.

    Witnesses are the smallest violating y.
    """
    T = S.table
    xy = T[x, :]
    yx = T[:, x]
    bad_r = (G.j_class[xy] == G.j_class[x]) & (G.r_class[xy] != G.r_class[x])
    bad_l = (G.j_class[yx] == G.j_class[x]) & (G.l_class[yx] != G.l_class[x])
    rw = np.flatnonzero(bad_r)
    lw = np.flatnonzero(bad_l)
    return ElementStability(not len(rw), not len(lw),
                            int(rw[0]) if len(rw) else None,
                            int(lw[0]) if len(lw) else None)


def is_periodic(S: FiniteSemigroup) -> bool:
    """Every x has x^k = x^(2k) for some k >= 1."""
    n = S.n
    for x in range(S.n):
        powers = [x]
        for _ in range(2 * (n + 1)):
            powers.append(S.product(powers[-1], x))
        # powers[m - 1] = x^m
        if not any(powers[k - 1] == powers[2 * k - 1] for k in range(1, n + 2)):
            return False
    return True


def group_power(S: FiniteSemigroup, G: GreenStructure, x: int) -> int | None:
    """Smallest m such that x^m lies in a group H-class, or None."""
    k, p = element_order_data(S, x)
    group_h = set(G.h_class[idempotents(S)].tolist())
    y = x
    for m in range(1, k + p):
        if G.h_class[y] in group_h:
            return m
        y = S.product(y, x)
    return None


def is_group_bound(S: FiniteSemigroup, G: GreenStructure) -> bool:
    return all(group_power(S, G, x) is not None for x in range(S.n))


def _ideal_masks(S: FiniteSemigroup, with_one: bool):
    """left[x] is the set Sx (or S^1 x), right[x] is xS (or x S^1)."""
    n = S.n
    T = S.table
    left = np.zeros((n, n), dtype=bool)
    right = np.zeros((n, n), dtype=bool)
    ar = np.arange(n)
    left[ar[:, None], T.T] = True
    right[ar[:, None], T] = True
    if with_one:
        left[ar, ar] = True
        right[ar, ar] = True
    return left, right


def _kw_check(S: FiniteSemigroup, with_one: bool):
    """Sx <= Sxy => Sx = Sxy and xS <= yxS => xS = yxS, all x, y."""
    T = S.table
    left, right = _ideal_masks(S, with_one)
    size_l = left.sum(axis=1)
    size_r = right.sum(axis=1)
    witnesses = []
    kind = "kw1" if with_one else "kw"
    for x in range(S.n):
        a = left[x]
        b = left[T[x, :]]          # b[y] = S xy
        sub = ~(a[None, :] & ~b).any(axis=1)
        bad = np.flatnonzero(sub & (size_l[T[x, :]] != size_l[x]))
        if len(bad):
            witnesses.append((kind + "-left", x, int(bad[0])))
        a = right[x]
        b = right[T[:, x]]         # b[y] = yx S
        sub = ~(a[None, :] & ~b).any(axis=1)
        bad = np.flatnonzero(sub & (size_r[T[:, x]] != size_r[x]))
        if len(bad):
            witnesses.append((kind + "-right", x, int(bad[0])))
    return witnesses


def kw_stability(S: FiniteSemigroup) -> tuple[bool, bool, list]:
    """KW-stability (ideals Sx, xS) and KW^1-stability (ideals S^1 x, x S^1)."""
    kw = _kw_check(S, with_one=False)
    kw1 = _kw_check(S, with_one=True)
    return not kw, not kw1, kw + kw1


def minimality_conditions(S: FiniteSemigroup, G: GreenStructure) -> tuple[bool, bool]:
    """M_R*: in each J-class the R-classes have a <=R-minimal member; dually M_L*."""
    def check(ids, leq):
        for j in range(G.count("J")):
            reps = {}
            for x in np.flatnonzero(G.j_class == j).tolist():
                reps.setdefault(int(ids[x]), x)
            reps = list(reps.values())
            minimal = [r for r in reps
                       if not any(leq[s, r] and not leq[r, s] for s in reps)]
            if not minimal:
                return False
        return True
    return check(G.r_class, G.leq_r), check(G.l_class, G.leq_l)


@dataclass
class StabilityReport:
    right_stable: np.ndarray
    left_stable: np.ndarray
    stable: bool
    kw_stable: bool
    kw1_stable: bool
    periodic: bool
    group_bound: bool
    mr_star: bool
    ml_star: bool
    witnesses: list = field(default_factory=list)

    @property
    def right_stable_semigroup(self) -> bool:
        return bool(self.right_stable.all())

    @property
    def left_stable_semigroup(self) -> bool:
        return bool(self.left_stable.all())

    def flags(self) -> dict[str, bool]:
        return {"stable": self.stable, "kw_stable": self.kw_stable,
                "kw1_stable": self.kw1_stable, "periodic": self.periodic,
                "group_bound": self.group_bound, "mr_star": self.mr_star,
                "ml_star": self.ml_star}


def stability_report(S: FiniteSemigroup, G: GreenStructure | None = None) -> StabilityReport:
    if G is None:
        G = green_classes(S)
    rs = np.zeros(S.n, dtype=bool)
    ls = np.zeros(S.n, dtype=bool)
    witnesses = []
    for x in range(S.n):
        es = element_stability(S, G, x)
        rs[x] = es.right_stable
        ls[x] = es.left_stable
        if es.right_witness is not None:
            witnesses.append(("right", x, es.right_witness))
        if es.left_witness is not None:
            witnesses.append(("left", x, es.left_witness))
    kw, kw1, kw_witnesses = kw_stability(S)
    mr, ml = minimality_conditions(S, G)
    return StabilityReport(rs, ls, bool(rs.all() and ls.all()), kw, kw1,
                           is_periodic(S), is_group_bound(S, G), mr, ml,
                           witnesses + kw_witnesses)


@dataclass(frozen=True)
class SimpleClassification:
    simple: bool
    stable: bool | None = None
    completely_regular: bool | None = None
    completely_simple: bool | None = None
    r_xy_l: bool | None = None

    @property
    def equivalent(self) -> bool:
        """The four conditions agree (vacuous for non-simple S)."""
        if not self.simple:
            return True
        return len({self.stable, self.completely_regular,
                    self.completely_simple, self.r_xy_l}) == 1


def classify_simple(S: FiniteSemigroup, G: GreenStructure | None = None) -> SimpleClassification:
    """For a simple S evaluate: stable, completely regular, completely simple,
    and x R xy L y for all x, y.  These are equivalent for simple S."""
    if G is None:
        G = green_classes(S)
    simple = G.count("J") == 1
    if not simple:
        return SimpleClassification(False)
    stable = all(es.right_stable and es.left_stable
                 for es in (element_stability(S, G, x) for x in range(S.n)))
    group_h = set(G.h_class[idempotents(S)].tolist())
    completely_regular = len(group_h) == G.count("H")
    T = S.table
    ar = np.arange(S.n)
    r_xy = G.r_class[T] == G.r_class[ar][:, None]     # x R xy
    l_xy = G.l_class[T] == G.l_class[ar][None, :]     # xy L y
    return SimpleClassification(True, stable, completely_regular,
                                simple and completely_regular,
                                bool((r_xy & l_xy).all()))


def left_cancellative_witness(S: FiniteSemigroup) -> tuple[int, int, int] | None:
    """Smallest (a, b, c) with ab = ac and b != c."""
    for a in range(S.n):
        row = S.table[a]
        first = {}
        for b, ab in enumerate(row.tolist()):
            if ab in first:
                return a, first[ab], b
            first[ab] = b
    return None


@dataclass(frozen=True)
class RightGroupDecomposition:
    """S isomorphic to G x R with G a group and R a right-zero semigroup.

    ``coords[x] = (g, s)`` where g indexes ``group_members`` and s the
    L-classes of S.
    """

    group_order: int
    right_zero_order: int
    group_members: tuple[int, ...]
    coords: tuple[tuple[int, int], ...]
    left_stable: bool
    left_cancellative: bool

    @property
    def orders(self) -> tuple[int, int]:
        return self.group_order, self.right_zero_order


def right_group_decomposition(S: FiniteSemigroup,
                              G: GreenStructure | None = None) -> RightGroupDecomposition:
    """Decompose a right-simple semigroup as a right group.

    Raises NotRightSimpleError if S has more than one R-class and
    NotLeftCancellativeError if ab = ac for some b != c.
    """
    if G is None:
        G = green_classes(S)
    if G.count("R") != 1:
        raise NotRightSimpleError(f"{G.count('R')} R-classes")
    w = left_cancellative_witness(S)
    if w is not None:
        raise NotLeftCancellativeError(*w)
    e = idempotents(S)[0]
    group_members = tuple(np.flatnonzero(G.h_class == G.h_class[e]).tolist())
    gpos = {g: i for i, g in enumerate(group_members)}
    T = S.table
    # x -> (x e, L-class of x); in G x R with e = (1, r0) this is ((h, r0), t)
    coords = tuple((gpos[int(T[x, e])], int(G.l_class[x])) for x in range(S.n))
    if len(set(coords)) != S.n:
        raise AssertionError("coordinate map is not injective")
    n_l = G.count("L")
    if len(group_members) * n_l != S.n:
        raise AssertionError("|S| != |G| * |R|")
    for x in range(S.n):
        for y in range(S.n):
            gx, _ = coords[x]
            gy, t = coords[y]
            gxy = gpos[int(T[group_members[gx], group_members[gy]])]
            if coords[int(T[x, y])] != (gxy, t):
                raise AssertionError(f"product rule fails at ({x}, {y})")
    left_stable = all(element_stability(S, G, x).left_stable for x in range(S.n))
    return RightGroupDecomposition(len(group_members), n_l, group_members, coords,
                                   left_stable, True)
