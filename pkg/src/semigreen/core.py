"""Finite semigroups given by multiplication tables.

Elements are the integers ``0..n-1`` and the product is a lookup in an
``n x n`` integer table.  Concrete representations (transformations,
partial injections, boolean matrices, Rees matrix triples) live in
:mod:`semigreen.elements` and are turned into tables by
:func:`generate_from_maps`.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from semigreen.errors import (
    DimensionMismatchError,
    EmptySubsetError,
    IndexOutOfRangeError,
    MixedVariantsError,
    NonAssociativeError,
    SizeLimitExceededError,
)

DEFAULT_SIZE_LIMIT = 100_000

# full O(n^3) associativity check is skipped above this order for tables
# built by composing concrete maps, which are associative by construction
ASSOCIATIVITY_CHECK_LIMIT = 1024


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A validated finite semigroup.

    Build instances with :func:`validate_table` rather than directly.
    ``generators``, when known, is a tuple of element indices generating
    the semigroup; Cayley graphs then only use those as multipliers.
    """

    table: np.ndarray
    identity: int | None = None
    labels: tuple[str, ...] | None = None
    generators: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FiniteSemigroup(n={self.n}, identity={self.identity})"

    def product(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def label(self, x: int) -> str:
        if self.labels is None:
            return str(x)
        return self.labels[x]

    def index(self, label: str) -> int:
        """Index of the element with the given label."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def multipliers(self) -> np.ndarray:
        """Elements used as edge labels in Cayley graphs."""
        if self.generators is None:
            return np.arange(self.n)
        return np.asarray(self.generators, dtype=self.table.dtype)

    def power(self, x: int, k: int) -> int:
        y = x
        for _ in range(k - 1):
            y = int(self.table[y, x])
        return y


def _index_dtype(n: int):
    return np.int32 if n < 2**31 else np.int64


def find_nonassociative(table: np.ndarray) -> tuple[int, int, int] | None:
    """Return the lexicographically smallest triple with (xy)z != x(yz)."""
    for x in range(table.shape[0]):
        left = table[table[x]]       # left[y, z] = (x y) z
        right = table[x][table]      # right[y, z] = x (y z)
        bad = np.argwhere(left != right)
        if len(bad):
            y, z = bad[0]
            return x, int(y), int(z)
    return None


def find_identity(table: np.ndarray) -> int | None:
    n = table.shape[0]
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar):
            return e
    return None


def validate_table(raw, labels: Sequence[str] | None = None,
                   generators: Sequence[int] | None = None,
                   check_associativity: bool = True) -> FiniteSemigroup:
    """Check a raw multiplication table and wrap it as a FiniteSemigroup.

    Raises IndexOutOfRangeError for entries outside ``0..n-1`` or a
    non-square table, and NonAssociativeError with the smallest failing
    triple.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0:
        raise IndexOutOfRangeError("a semigroup needs at least one element")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise IndexOutOfRangeError(f"row {i} has {len(r)} entries, expected {n}")
    table = np.array(rows, dtype=np.int64)
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise IndexOutOfRangeError(
            f"entry ({bad[0]}, {bad[1]}) = {table[tuple(bad)]} not in 0..{n - 1}")
    table = table.astype(_index_dtype(n))
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise IndexOutOfRangeError(f"{len(labels)} labels for {n} elements")
    if generators is not None:
        generators = tuple(int(g) for g in generators)
        if any(not 0 <= g < n for g in generators):
            raise IndexOutOfRangeError("generator index out of range")
    if check_associativity:
        witness = find_nonassociative(table)
        if witness is not None:
            raise NonAssociativeError(*witness)
    table.setflags(write=False)
    return FiniteSemigroup(table, find_identity(table), labels, generators)


def product(S: FiniteSemigroup, x: int, y: int) -> int:
    if not (0 <= x < S.n and 0 <= y < S.n):
        raise IndexOutOfRangeError(f"({x}, {y}) outside 0..{S.n - 1}")
    return S.product(x, y)


def generate_from_maps(gens, size_limit: int = DEFAULT_SIZE_LIMIT):
    """Enumerate the semigroup generated by concrete elements.

    Elements come out generators first, then in breadth-first order of
    discovery by right multiplication with generators; within one
    breadth-first layer new elements are sorted by payload.  Returns
    ``(S, elements)`` where ``elements[i]`` is the concrete element with
    index ``i`` in ``S``.
    """
    gens = list(gens)
    if not gens:
        raise EmptySubsetError("need at least one generator")
    variant = gens[0].variant
    for g in gens:
        if g.variant != variant:
            raise MixedVariantsError(f"{g.variant} mixed with {variant}")
        if not g.compatible(gens[0]):
            raise DimensionMismatchError(f"{g!r} incompatible with {gens[0]!r}")

    elements = []
    index = {}
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    if len(elements) > size_limit:
        raise SizeLimitExceededError(size_limit)
    k = len(elements)
    gen_ids = list(range(k))
    # parent[y], last[y]: y = elements[parent[y]] * elements[last[y]]
    parent = [-1] * k
    last = [-1] * k
    right = []
    layer = list(range(k))
    while layer:
        found = {}
        products = []
        for x in layer:
            row = [elements[x] * elements[gi] for gi in gen_ids]
            for gi, y in zip(gen_ids, row):
                if y not in index and y not in found:
                    found[y] = (x, gi)
            products.append(row)
        layer = []
        for y in sorted(found, key=lambda e: e.key()):
            index[y] = len(elements)
            elements.append(y)
            parent.append(found[y][0])
            last.append(found[y][1])
            layer.append(index[y])
            if len(elements) > size_limit:
                raise SizeLimitExceededError(size_limit)
        right.extend([index[y] for y in row] for row in products)

    n = len(elements)
    right_arr = np.array(right, dtype=np.int64).reshape(n, k)
    table = np.empty((n, n), dtype=np.int64)
    for y in range(k):
        table[:, y] = right_arr[:, y]
    for y in range(k, n):
        table[:, y] = right_arr[table[:, parent[y]], last[y]]
    S = validate_table(table, labels=[e.label() for e in elements],
                       generators=gen_ids,
                       check_associativity=n <= ASSOCIATIVITY_CHECK_LIMIT)
    return S, elements


@dataclass(frozen=True, eq=False)
class SubsemigroupEmbedding:
    """A product-closed subset U of an ambient semigroup S.

    ``local`` is U as a semigroup in its own right, with element ``i``
    standing for ambient element ``members[i]``.
    """

    ambient: FiniteSemigroup
    members: tuple[int, ...]
    local: FiniteSemigroup
    from_ambient: dict = field(repr=False)

    @property
    def to_ambient(self) -> np.ndarray:
        return np.asarray(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.from_ambient


def is_closed(S: FiniteSemigroup, subset: Iterable[int]) -> tuple[int, int] | None:
    """Return a pair whose product leaves ``subset``, or None if closed."""
    members = np.array(sorted(set(subset)))
    inside = np.zeros(S.n, dtype=bool)
    inside[members] = True
    prods = S.table[np.ix_(members, members)]
    bad = np.argwhere(~inside[prods])
    if len(bad):
        return int(members[bad[0][0]]), int(members[bad[0][1]])
    return None


def embedding(S: FiniteSemigroup, members: Iterable[int],
              seeds: Sequence[int] | None = None) -> SubsemigroupEmbedding:
    """Wrap an already product-closed subset as an embedding."""
    members = tuple(sorted(set(int(m) for m in members)))
    if not members:
        raise EmptySubsetError("empty subset")
    loc = np.full(S.n, -1, dtype=np.int64)
    loc[list(members)] = np.arange(len(members))
    sub = S.table[np.ix_(members, members)]
    local_table = loc[sub]
    if (local_table < 0).any():
        x, y = np.argwhere(local_table < 0)[0]
        raise ValueError(f"subset not closed: {members[x]}*{members[y]} escapes")
    labels = None if S.labels is None else [S.labels[m] for m in members]
    gens = None if seeds is None else sorted({int(loc[s]) for s in seeds})
    local = validate_table(local_table, labels=labels, generators=gens,
                           check_associativity=False)
    return SubsemigroupEmbedding(S, members, local,
                                 {m: i for i, m in enumerate(members)})


def closure_members(S: FiniteSemigroup, subset: Iterable[int]) -> frozenset[int]:
    seeds = sorted(set(int(x) for x in subset))
    if not seeds:
        raise EmptySubsetError("cannot close the empty set")
    for x in seeds:
        if not 0 <= x < S.n:
            raise IndexOutOfRangeError(f"{x} outside 0..{S.n - 1}")
    table = S.table
    seen = set(seeds)
    frontier = list(seeds)
    gens = np.array(seeds)
    while frontier:
        new = set(table[np.array(frontier)][:, gens].ravel().tolist()) - seen
        seen |= new
        frontier = list(new)
    return frozenset(seen)


def closure(S: FiniteSemigroup, subset: Iterable[int]) -> SubsemigroupEmbedding:
    """Smallest subsemigroup of S containing ``subset``."""
    subset = list(subset)
    return embedding(S, closure_members(S, subset), seeds=subset)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S^1: S itself if it is a monoid, otherwise S with a new identity."""
    if S.identity is not None:
        return S
    n = S.n
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = S.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    labels = None if S.labels is None else S.labels + ("1",)
    gens = None if S.generators is None else S.generators + (n,)
    return validate_table(table, labels=labels, generators=gens,
                          check_associativity=False)


def idempotents(S: FiniteSemigroup) -> list[int]:
    ar = np.arange(S.n)
    return np.flatnonzero(S.table[ar, ar] == ar).tolist()


def regular_mask(S: FiniteSemigroup) -> np.ndarray:
    # x regular iff x in x S x
    T = S.table
    ar = np.arange(S.n)
    xz = T                       # xz[x, z] = x z
    xzx = T[xz, ar[:, None]]     # xzx[x, z] = (x z) x
    return (xzx == ar[:, None]).any(axis=1)


def is_regular_element(S: FiniteSemigroup, x: int) -> bool:
    return any(S.product(S.product(x, z), x) == x for z in range(S.n))


def regular_set(S: FiniteSemigroup) -> list[int]:
    return np.flatnonzero(regular_mask(S)).tolist()


def element_order_data(S: FiniteSemigroup, x: int) -> tuple[int, int]:
    """Index and period of x: smallest k, p >= 1 with x^(k+p) = x^k."""
    seen = {}
    y = x
    m = 1
    while y not in seen:
        seen[y] = m
        y = S.product(y, x)
        m += 1
    k = seen[y]
    return k, m - k
