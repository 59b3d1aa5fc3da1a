"""Small named semigroups used for testing theorems end to end."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable

from semigreen.core import FiniteSemigroup, closure, generate_from_maps, validate_table
from semigreen.elements import (
    PartialInjection,
    ReesMatrix,
    Transformation,
)

BRANDT_LABELS = ("0", "e", "f", "a", "b")


def brandt_b2() -> FiniteSemigroup:
    """B2 = {0, e=a11, f=a22, a=a12, b=a21} with a_ij a_jk = a_ik, else 0."""
    unit = {"e": (1, 1), "f": (2, 2), "a": (1, 2), "b": (2, 1)}
    by_pos = {v: k for k, v in unit.items()}
    table = []
    for x in BRANDT_LABELS:
        row = []
        for y in BRANDT_LABELS:
            if x == "0" or y == "0" or unit[x][1] != unit[y][0]:
                row.append(0)
            else:
                row.append(BRANDT_LABELS.index(by_pos[(unit[x][0], unit[y][1])]))
        table.append(row)
    return validate_table(table, labels=BRANDT_LABELS)


def brandt_sub(labels) -> FiniteSemigroup:
    S = brandt_b2()
    return closure(S, [S.index(x) for x in labels]).local


# generators of I_3 as written in the text: 1f = 2, 2f = 3, e = id on {1}
I3_F = PartialInjection((2, 3, None))
I3_E = PartialInjection((1, None, None))
# (1 2) with 3 undefined; f g = e
I3_G = PartialInjection((2, 1, None))


def i3_generators() -> list[PartialInjection]:
    return [PartialInjection((2, 1, 3)), PartialInjection((2, 3, 1)),
            PartialInjection((1, 2, None))]


def i3_full():
    """All 34 partial injections of {1, 2, 3}; returns ``(S, elements)``."""
    return generate_from_maps(i3_generators())


def i3_sub_fe():
    """U = <f, e> inside I_3 as an embedding, plus the ambient elements."""
    S, elems = i3_full()
    return closure(S, [elems.index(I3_F), elems.index(I3_E)]), elems


def transpositions(m: int) -> list[Transformation]:
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            img = list(range(1, m + 1))
            img[i], img[j] = img[j], img[i]
            out.append(Transformation(tuple(img)))
    return out


def full_transformation_monoid(m: int):
    """T_m from the transpositions, an m-cycle and one rank m-1 map."""
    if m == 1:
        return generate_from_maps([Transformation((1,))])
    cycle = Transformation(tuple(list(range(2, m + 1)) + [1]))
    collapse = Transformation((1, 1) + tuple(range(2, m)))
    return generate_from_maps(transpositions(m) + [cycle, collapse])


def cyclic_group(n: int) -> FiniteSemigroup:
    return validate_table([[(i + j) % n for j in range(n)] for i in range(n)],
                          labels=[f"g{i}" if i else "1" for i in range(n)])


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    pairs = list(cartesian(range(S.n), range(T.n)))
    pos = {p: k for k, p in enumerate(pairs)}
    table = [[pos[(S.product(a, c), T.product(b, d))] for (c, d) in pairs]
             for (a, b) in pairs]
    labels = [f"({S.label(a)},{T.label(b)})" for a, b in pairs]
    return validate_table(table, labels=labels)


def right_zero(n: int) -> FiniteSemigroup:
    return validate_table([list(range(n)) for _ in range(n)],
                          labels=[f"r{i}" for i in range(n)])


def left_zero(n: int) -> FiniteSemigroup:
    return validate_table([[i] * n for i in range(n)],
                          labels=[f"l{i}" for i in range(n)])


def null_semigroup(n: int) -> FiniteSemigroup:
    return validate_table([[0] * n for _ in range(n)],
                          labels=["0"] + [f"n{i}" for i in range(1, n)])


def semilattice2() -> FiniteSemigroup:
    return validate_table([[0, 0], [0, 1]], labels=["0", "e"])


def right_group() -> FiniteSemigroup:
    return direct_product(cyclic_group(2), right_zero(2))


def rees_z2() -> FiniteSemigroup:
    """M[Z2; 2, 2; P] with P = [[1, 1], [1, g]]: 8 elements."""
    ctx = ReesMatrix(cyclic_group(2), ((0, 0), (0, 1)))
    S, _ = generate_from_maps(ctx.elements())
    return S


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    builder: Callable[[], FiniteSemigroup]
    expected: dict = field(default_factory=dict)
    optional: bool = False

    def build(self) -> FiniteSemigroup:
        return self.builder()


def _first(f):
    return lambda: f()[0]


def corpus(include_optional: bool = False) -> list[CorpusEntry]:
    entries = [
        CorpusEntry("brandt_b2", brandt_b2, {"order": 5, "j_classes": 2, "regular": True}),
        CorpusEntry("brandt_sub_eff", lambda: brandt_sub("ef"),
                    {"order": 3, "j_classes": 3, "regular": True}),
        CorpusEntry("brandt_sub_ea", lambda: brandt_sub("ea"),
                    {"order": 3, "j_classes": 3, "regular": False}),
        CorpusEntry("i3_full", _first(i3_full), {"order": 34, "j_classes": 4, "regular": True}),
        # f^2 = e f^2 = {1 -> 3}, so <f, e> = {f, e, f^2, ef, 0}
        CorpusEntry("i3_sub_fe", lambda: i3_sub_fe()[0].local,
                    {"order": 5, "j_classes": 5, "regular": False}),
        CorpusEntry("t2", _first(lambda: full_transformation_monoid(2)),
                    {"order": 4, "j_classes": 2, "regular": True}),
        CorpusEntry("t3", _first(lambda: full_transformation_monoid(3)),
                    {"order": 27, "j_classes": 3, "regular": True}),
        CorpusEntry("trivial", lambda: validate_table([[0]]),
                    {"order": 1, "j_classes": 1, "regular": True}),
        CorpusEntry("z2", lambda: cyclic_group(2), {"order": 2, "j_classes": 1, "regular": True}),
        CorpusEntry("z3", lambda: cyclic_group(3), {"order": 3, "j_classes": 1, "regular": True}),
        CorpusEntry("z2xz2", lambda: direct_product(cyclic_group(2), cyclic_group(2)),
                    {"order": 4, "j_classes": 1, "regular": True}),
    ]
    for n in (2, 3):
        entries += [
            CorpusEntry(f"right_zero{n}", lambda n=n: right_zero(n),
                        {"order": n, "j_classes": 1, "regular": True}),
            CorpusEntry(f"left_zero{n}", lambda n=n: left_zero(n),
                        {"order": n, "j_classes": 1, "regular": True}),
            CorpusEntry(f"null{n}", lambda n=n: null_semigroup(n),
                        {"order": n, "j_classes": n, "regular": False}),
        ]
    entries += [
        CorpusEntry("semilattice2", semilattice2, {"order": 2, "j_classes": 2, "regular": True}),
        CorpusEntry("right_group", right_group, {"order": 4, "j_classes": 1, "regular": True}),
        CorpusEntry("rees_z2", rees_z2, {"order": 8, "j_classes": 1, "regular": True}),
        CorpusEntry("t4", _first(lambda: full_transformation_monoid(4)),
                    {"order": 256, "j_classes": 4, "regular": True}, optional=True),
    ]
    return [e for e in entries if include_optional or not e.optional]


def corpus_entry(name: str) -> CorpusEntry:
    for e in corpus(include_optional=True):
        if e.name == name:
            return e
    raise KeyError(name)
