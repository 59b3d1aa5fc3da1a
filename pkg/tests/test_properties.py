"""Invariants over random transformation and partial-injection semigroups."""
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from semigreen.core import closure, find_nonassociative, generate_from_maps, regular_mask
from semigreen.elements import BooleanMatrix, PartialInjection, Transformation
from semigreen.formats import format_table, parse_table_file
from semigreen.green import KINDS, compute_preorders, green_classes, preorders_bruteforce
from semigreen.inheritance import inheritance_report, leqr_inheritance_check, thm_stable_check
from semigreen.stability import classify_simple, stability_report

SETTINGS = settings(max_examples=60, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


def transformations(m):
    return st.tuples(*[st.integers(1, m)] * m).map(Transformation)


def partial_injections(m):
    return st.permutations(list(range(1, m + 1)) + [None] * m).map(
        lambda p: PartialInjection(tuple(p[:m])))


def boolean_matrices(m):
    row = st.tuples(*[st.integers(0, 1)] * m)
    return st.tuples(*[row] * m).map(BooleanMatrix)


@st.composite
def generator_sets(draw):
    kind = draw(st.sampled_from(["t", "p", "bm"]))
    m = draw(st.integers(1, 3 if kind != "bm" else 2))
    strat = {"t": transformations, "p": partial_injections, "bm": boolean_matrices}[kind](m)
    return draw(st.lists(strat, min_size=1, max_size=3))


@st.composite
def semigroups(draw):
    S, elems = generate_from_maps(draw(generator_sets()))
    return S, elems


@SETTINGS
@given(semigroups())
def test_table_is_composition_and_associative(data):
    S, elems = data
    assert len(set(elems)) == S.n
    assert find_nonassociative(S.table) is None
    for x in range(S.n):
        for y in range(S.n):
            assert elems[S.product(x, y)] == elems[x] * elems[y]


@SETTINGS
@given(semigroups())
def test_preorders_agree_and_d_equals_j(data):
    S, _ = data
    for a, b in zip(compute_preorders(S), preorders_bruteforce(S)):
        assert (a == b).all()
    G = green_classes(S)
    assert (G.relation("D") == G.relation("J")).all()
    assert (G.relation("H") == (G.relation("R") & G.relation("L"))).all()


@SETTINGS
@given(semigroups())
def test_finite_semigroups_pass_the_battery(data):
    S, _ = data
    rep = stability_report(S)
    assert all(rep.flags().values())
    c = classify_simple(S)
    assert c.equivalent
    if c.simple:
        assert c.stable and c.completely_simple


@SETTINGS
@given(semigroups(), st.data())
def test_inheritance_theorems_on_random_subsemigroup(data, choice):
    S, _ = data
    seeds = choice.draw(st.lists(st.integers(0, S.n - 1), min_size=1, max_size=3))
    U = closure(S, seeds)
    G, GU = green_classes(S), green_classes(U.local)
    rep = inheritance_report(S, U, G, GU)
    assert all(rep.contains[k] for k in KINDS)
    if rep.u_regular:
        assert all(rep.equals[k] for k in "RLH")
    assert leqr_inheritance_check(S, U, G, GU).violations == []
    assert thm_stable_check(S, U, G, GU).violations == []


@SETTINGS
@given(semigroups())
def test_regular_elements_have_inverses(data):
    S, _ = data
    T = S.table
    for x in range(S.n):
        has = any(T[T[x, z], x] == x for z in range(S.n))
        assert bool(regular_mask(S)[x]) == has


@SETTINGS
@given(semigroups())
def test_table_round_trip(data):
    S, _ = data
    T = parse_table_file(format_table(S))
    assert (T.table == S.table).all()
