from math import comb, factorial

import numpy as np
import pytest

from semigreen.core import (
    adjoin_identity,
    closure,
    element_order_data,
    find_nonassociative,
    generate_from_maps,
    idempotents,
    is_regular_element,
    product,
    regular_set,
    validate_table,
)
from semigreen.corpus import (
    I3_E,
    I3_F,
    I3_G,
    brandt_b2,
    cyclic_group,
    null_semigroup,
    transpositions,
)
from semigreen.elements import (
    BooleanMatrix,
    PartialInjection,
    Transformation,
    all_partial_injections,
    all_transformations,
)
from semigreen.errors import (
    DimensionMismatchError,
    EmptySubsetError,
    IndexOutOfRangeError,
    MixedVariantsError,
    NonAssociativeError,
    SizeLimitExceededError,
)


def brute_force_nonassociative(table):
    n = len(table)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if table[table[x][y]][z] != table[x][table[y][z]]:
                    return x, y, z
    return None


class TestValidateTable:
    def test_trivial(self):
        S = validate_table([[0]])
        assert S.n == 1
        assert S.identity == 0

    def test_nonassociative_witness(self):
        raw = [[1, 0], [0, 0]]
        assert brute_force_nonassociative(raw) == (0, 0, 1)
        with pytest.raises(NonAssociativeError) as exc:
            validate_table(raw)
        assert exc.value.triple == (0, 0, 1)

    def test_brandt_accepted(self, b2):
        assert b2.n == 5
        assert b2.identity is None
        assert b2.labels == ("0", "e", "f", "a", "b")

    def test_brandt_rules(self, b2):
        # e^2=e, f^2=f, ea=a, af=a, fb=b, be=b, ab=e, ba=f, the rest 0
        rules = {("e", "e"): "e", ("f", "f"): "f", ("e", "a"): "a", ("a", "f"): "a",
                 ("f", "b"): "b", ("b", "e"): "b", ("a", "b"): "e", ("b", "a"): "f"}
        for x in b2.labels:
            for y in b2.labels:
                got = b2.label(b2.product(b2.index(x), b2.index(y)))
                assert got == rules.get((x, y), "0"), (x, y)

    @pytest.mark.parametrize("raw", [[[0, 2], [0, 0]], [[0, -1], [0, 0]], [[0, 0]], []])
    def test_out_of_range(self, raw):
        with pytest.raises(IndexOutOfRangeError):
            validate_table(raw)

    def test_identity_detection(self):
        assert validate_table([[0, 0], [0, 1]]).identity == 1
        assert cyclic_group(3).identity == 0
        assert null_semigroup(2).identity is None

    def test_table_is_readonly(self, b2):
        with pytest.raises(ValueError):
            b2.table[0, 0] = 1

    def test_vectorised_check_matches_brute_force(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            n = int(rng.integers(1, 4))
            raw = rng.integers(0, n, size=(n, n))
            assert find_nonassociative(raw) == brute_force_nonassociative(raw.tolist())


class TestProduct:
    def test_brandt(self, b2):
        assert b2.label(product(b2, b2.index("a"), b2.index("b"))) == "e"
        assert b2.label(product(b2, b2.index("e"), b2.index("f"))) == "0"

    def test_trivial(self):
        assert product(validate_table([[0]]), 0, 0) == 0

    def test_bounds(self, b2):
        with pytest.raises(IndexOutOfRangeError):
            product(b2, 5, 0)


class TestGenerateFromMaps:
    def test_i3_sub_order_matches_direct_closure(self):
        # independent closure: compose every pair until nothing new appears
        seen = {I3_F, I3_E}
        while True:
            new = {x * y for x in seen for y in seen} - seen
            if not new:
                break
            seen |= new
        S, elems = generate_from_maps([I3_F, I3_E])
        assert set(elems) == seen
        assert S.n == len(seen) == 5
        f2 = I3_F * I3_F
        assert f2 == I3_E * I3_F * I3_F == PartialInjection((3, None, None))
        assert set(elems) == {I3_F, I3_E, f2, I3_E * I3_F, PartialInjection((None,) * 3)}

    def test_generators_first(self):
        S, elems = generate_from_maps([I3_F, I3_E])
        assert elems[:2] == [I3_F, I3_E]
        assert S.generators == (0, 1)

    def test_identity_only(self):
        S, _ = generate_from_maps([Transformation((1, 2, 3))])
        assert S.n == 1
        assert S.identity == 0

    def test_t3(self):
        gens = transpositions(3) + [Transformation((1, 1, 2))]
        S, elems = generate_from_maps(gens)
        assert set(elems) == set(all_transformations(3))
        assert S.n == 27

    def test_right_action(self):
        # 1f = 2, 1(fg) = (1f)g = 2g = 1
        assert I3_F * I3_G == I3_E
        assert (I3_F * I3_G)(1) == I3_G(I3_F(1))

    def test_i3_order(self, i3):
        S, elems = i3
        oracle = sum(comb(3, k) ** 2 * factorial(k) for k in range(4))
        assert S.n == oracle == 34
        assert set(elems) == set(all_partial_injections(3))

    def test_table_agrees_with_composition(self, i3):
        S, elems = i3
        for x in range(S.n):
            for y in range(S.n):
                assert elems[S.product(x, y)] == elems[x] * elems[y]

    def test_isomorphic_to_closure_in_full_monoid(self, i3):
        S, elems = i3
        U = closure(S, [elems.index(I3_F), elems.index(I3_E)])
        T, telems = generate_from_maps([I3_F, I3_E])
        # same concrete elements, same products
        amb = [elems[m] for m in U.members]
        assert set(amb) == set(telems)
        for i, x in enumerate(amb):
            for j, y in enumerate(amb):
                assert amb[U.local.product(i, j)] == x * y
                assert telems[T.product(telems.index(x), telems.index(y))] == x * y

    def test_boolean_matrices_give_brandt(self, b2):
        unit = {"e": (0, 0), "f": (1, 1), "a": (0, 1), "b": (1, 0)}

        def mat(pos):
            rows = [[0, 0], [0, 0]]
            rows[pos[0]][pos[1]] = 1
            return BooleanMatrix(tuple(map(tuple, rows)))
        S, elems = generate_from_maps([mat(unit[k]) for k in "efab"])
        assert S.n == 5
        zero = BooleanMatrix(((0, 0), (0, 0)))
        name = {mat(v): k for k, v in unit.items()} | {zero: "0"}
        for x in range(S.n):
            for y in range(S.n):
                got = name[elems[S.product(x, y)]]
                want = b2.label(b2.product(b2.index(name[elems[x]]), b2.index(name[elems[y]])))
                assert got == want

    def test_errors(self):
        with pytest.raises(MixedVariantsError):
            generate_from_maps([I3_F, Transformation((1, 2, 3))])
        with pytest.raises(DimensionMismatchError):
            generate_from_maps([Transformation((1, 2)), Transformation((1, 2, 3))])
        with pytest.raises(EmptySubsetError):
            generate_from_maps([])
        with pytest.raises(SizeLimitExceededError):
            generate_from_maps(transpositions(3) + [Transformation((1, 1, 2))], size_limit=10)

    def test_invalid_partial_injection(self):
        with pytest.raises(ValueError):
            PartialInjection((1, 1, None))


class TestClosure:
    def test_brandt_ef(self, b2):
        U = closure(b2, [b2.index("e"), b2.index("f")])
        assert [b2.label(m) for m in U.members] == ["0", "e", "f"]

    def test_brandt_ea(self, b2):
        U = closure(b2, [b2.index("e"), b2.index("a")])
        assert [b2.label(m) for m in U.members] == ["0", "e", "a"]
        L = U.local
        nonzero = {(L.label(x), L.label(y)) for x in range(3) for y in range(3)
                   if L.label(L.product(x, y)) != "0"}
        assert nonzero == {("e", "e"), ("e", "a")}

    def test_whole(self, b2):
        assert closure(b2, range(5)).members == tuple(range(5))

    def test_local_table_agrees(self, t3):
        S, _ = t3
        U = closure(S, [3, 10])
        for i, x in enumerate(U.members):
            for j, y in enumerate(U.members):
                assert U.members[U.local.product(i, j)] == S.product(x, y)

    def test_empty(self, b2):
        with pytest.raises(EmptySubsetError):
            closure(b2, [])


class TestAdjoinIdentity:
    def test_brandt(self, b2):
        S1 = adjoin_identity(b2)
        assert S1.n == 6
        assert S1.identity == 5

    def test_monoid_unchanged(self, t3):
        S, _ = t3
        assert adjoin_identity(S) is S
        assert S.n == 27

    def test_trivial(self):
        S = validate_table([[0]])
        assert adjoin_identity(S) is S


class TestRegularity:
    def test_brandt(self, b2):
        assert [b2.label(x) for x in idempotents(b2)] == ["0", "e", "f"]
        assert regular_set(b2) == [0, 1, 2, 3, 4]

    def test_null(self):
        S = null_semigroup(2)
        assert regular_set(S) == [0]
        assert [is_regular_element(S, x) for x in range(2)] == [True, False]

    def test_e_regular_in_i3_sub(self, i3):
        S, elems = i3
        U = closure(S, [elems.index(I3_F), elems.index(I3_E)])
        e = U.from_ambient[elems.index(I3_E)]
        f = U.from_ambient[elems.index(I3_F)]
        assert is_regular_element(U.local, e)
        assert not is_regular_element(U.local, f)
        assert is_regular_element(S, elems.index(I3_F))


class TestOrderData:
    def test_idempotent(self, b2):
        assert element_order_data(b2, b2.index("e")) == (1, 1)

    def test_nilpotent(self, b2):
        assert element_order_data(b2, b2.index("a")) == (2, 1)

    def test_cyclic(self):
        assert element_order_data(cyclic_group(3), 1) == (1, 3)

    def test_bound(self, t3):
        S, _ = t3
        for x in range(S.n):
            k, p = element_order_data(S, x)
            assert k + p <= S.n + 1
            assert S.power(x, k + p) == S.power(x, k)
