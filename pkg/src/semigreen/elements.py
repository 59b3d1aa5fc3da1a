"""Concrete semigroup elements that can be composed.

Maps act on the right: ``x(fg) = (xf)g``, so ``f * g`` means "apply f,
then g".  Base sets are ``1..m`` and images are stored 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as cartesian

from semigreen.errors import DimensionMismatchError


@dataclass(frozen=True)
class Transformation:
    images: tuple[int, ...]

    variant = "t"

    def __post_init__(self):
        m = len(self.images)
        if any(not 1 <= i <= m for i in self.images):
            raise DimensionMismatchError(f"images {self.images} not in 1..{m}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Transformation) -> Transformation:
        return Transformation(tuple(other.images[i - 1] for i in self.images))

    def compatible(self, other) -> bool:
        return self.degree == other.degree

    def rank(self) -> int:
        return len(set(self.images))

    def key(self):
        return self.images

    def label(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"


@dataclass(frozen=True)
class PartialInjection:
    """Partial injective map on ``1..m``; ``None`` marks an undefined point."""

    images: tuple[int | None, ...]

    variant = "p"

    def __post_init__(self):
        m = len(self.images)
        defined = [i for i in self.images if i is not None]
        if any(not 1 <= i <= m for i in defined):
            raise DimensionMismatchError(f"images {self.images} not in 1..{m}")
        if len(set(defined)) != len(defined):
            raise ValueError(f"{self.images} is not injective")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int | None:
        return self.images[point - 1]

    def __mul__(self, other: PartialInjection) -> PartialInjection:
        return PartialInjection(tuple(
            None if i is None else other.images[i - 1] for i in self.images))

    def compatible(self, other) -> bool:
        return self.degree == other.degree

    def domain(self) -> frozenset[int]:
        return frozenset(p for p, i in enumerate(self.images, 1) if i is not None)

    def rank(self) -> int:
        return len(self.domain())

    def key(self):
        return tuple(0 if i is None else i for i in self.images)

    def label(self) -> str:
        return "[" + " ".join("-" if i is None else str(i) for i in self.images) + "]"


@dataclass(frozen=True)
class BooleanMatrix:
    rows: tuple[tuple[int, ...], ...]

    variant = "bm"

    def __post_init__(self):
        m = len(self.rows)
        if any(len(r) != m for r in self.rows):
            raise DimensionMismatchError("boolean matrix must be square")
        if any(b not in (0, 1) for r in self.rows for b in r):
            raise ValueError("entries must be 0 or 1")

    @property
    def degree(self) -> int:
        return len(self.rows)

    def __mul__(self, other: BooleanMatrix) -> BooleanMatrix:
        m = self.degree
        cols = list(zip(*other.rows))
        return BooleanMatrix(tuple(
            tuple(int(any(a and b for a, b in zip(self.rows[i], cols[j])))
                  for j in range(m))
            for i in range(m)))

    def compatible(self, other) -> bool:
        return self.degree == other.degree

    def key(self):
        return self.rows

    def label(self) -> str:
        return ";".join("".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True, eq=False)
class ReesMatrix:
    """Data of a Rees matrix semigroup M[G; I, Lambda; P] without zero.

    ``group`` is a FiniteSemigroup that is a group, ``sandwich[lam][i]``
    an element of it, rows I = ``range(len(sandwich[0]))`` and columns
    Lambda = ``range(len(sandwich))``.
    """

    group: object
    sandwich: tuple[tuple[int, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.sandwich[0])

    @property
    def n_cols(self) -> int:
        return len(self.sandwich)

    def elements(self) -> list[ReesTriple]:
        return [ReesTriple(i, g, lam, self)
                for i in range(self.n_rows)
                for g in range(self.group.n)
                for lam in range(self.n_cols)]


@dataclass(frozen=True)
class ReesTriple:
    i: int
    g: int
    lam: int
    context: ReesMatrix

    variant = "rees"

    def __post_init__(self):
        ctx = self.context
        if not (0 <= self.i < ctx.n_rows and 0 <= self.lam < ctx.n_cols
                and 0 <= self.g < ctx.group.n):
            raise DimensionMismatchError(f"{self.key()} outside the sandwich matrix")

    def __mul__(self, other: ReesTriple) -> ReesTriple:
        G = self.context.group
        p = self.context.sandwich[self.lam][other.i]
        return ReesTriple(self.i, G.product(G.product(self.g, p), other.g),
                          other.lam, self.context)

    def compatible(self, other) -> bool:
        return self.context is other.context

    def key(self):
        return (self.i, self.g, self.lam)

    def label(self) -> str:
        return f"({self.i},{self.context.group.label(self.g)},{self.lam})"


def all_transformations(m: int) -> list[Transformation]:
    return [Transformation(t) for t in cartesian(range(1, m + 1), repeat=m)]


def all_partial_injections(m: int) -> list[PartialInjection]:
    out = set()
    points = list(range(1, m + 1))
    for imgs in cartesian([None] + points, repeat=m):
        defined = [i for i in imgs if i is not None]
        if len(set(defined)) == len(defined):
            out.add(PartialInjection(imgs))
    return sorted(out, key=lambda p: p.key())


def symmetric_group(m: int) -> list[Transformation]:
    return [Transformation(p) for p in permutations(range(1, m + 1))]
