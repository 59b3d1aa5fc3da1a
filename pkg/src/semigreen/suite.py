"""End-to-end theorem checks over the built-in corpus.

:func:`paper_suite` runs every check in a fixed order and returns a
:class:`SuiteResult`; the exit status is 0 iff every check passed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from semigreen import bicyclic as bc
from semigreen.core import closure, regular_mask
from semigreen.corpus import I3_E, I3_F, I3_G, corpus, i3_sub_fe
from semigreen.errors import SemigroupError
from semigreen.green import compute_preorders, green_classes, preorders_bruteforce
from semigreen.inheritance import (
    enumerate_subsemigroups,
    inheritance_report,
    leqr_inheritance_check,
    reg_closed_check,
    thm_stable_check,
)
from semigreen.stability import (
    classify_simple,
    right_group_decomposition,
    stability_report,
)

SECTIONS = ("dj", "inheritance", "counterexamples", "stability",
            "simple", "right-group", "bicyclic")

# golden right-group shapes (|G|, |R|)
RIGHT_GROUP_SHAPES = {"right_group": (2, 2), "right_zero3": (1, 3),
                      "right_zero2": (1, 2), "trivial": (1, 1)}


@dataclass(frozen=True)
class Check:
    section: str
    name: str
    subject: str
    passed: bool
    detail: str = ""

    @property
    def key(self) -> str:
        slug = re.sub(r"[^a-z0-9]+", "_", self.name.lower()).strip("_")
        return f"{slug}.{self.subject}"


@dataclass
class SuiteResult:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def add(self, section, name, subject, passed, detail=""):
        self.checks.append(Check(section, name, subject, bool(passed), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = ["semigreen paper suite"]
        section = None
        for c in self.checks:
            if c.section != section:
                section = c.section
                lines.append(f"\n== {section} ==")
            mark = "PASS" if c.passed else "FAIL"
            line = f"{mark}  {c.name} [{c.subject}]"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
        n_fail = len(self.failures())
        lines.append(f"\n{len(self.checks) - n_fail} passed, {n_fail} failed")
        return "\n".join(lines) + "\n"

    def to_kv(self) -> str:
        lines = []
        section = None
        for c in self.checks:
            if c.section != section:
                section = c.section
                lines.append(f"[{section}]")
            lines.append(f"{c.key}={'pass' if c.passed else 'fail'}")
        return "\n".join(lines) + "\n"


def brute_force_closure(gens) -> set:
    """Closure under composition of partial maps given as dicts.

    Deliberately independent of :mod:`semigreen.core`: repeated squaring
    of the whole set until nothing new appears.
    """
    def comp(p, q):
        return frozenset((x, q[y]) for x, y in p.items() if y in q)
    U = {frozenset(g.items()) for g in gens}
    while True:
        new = {comp(dict(a), dict(b)) for a in U for b in U} - U
        if not new:
            return U
        U |= new


def _as_dict(p) -> dict:
    return {x: y for x, y in enumerate(p.images, 1) if y is not None}


def _build_all(entries, result):
    built = {}
    for e in entries:
        try:
            S = e.build()
        except SemigroupError as exc:
            result.add("build", "construct", e.name, False, str(exc))
            continue
        ok = S.n == e.expected.get("order", S.n)
        result.add("build", "construct", e.name, ok, f"order {S.n}")
        built[e.name] = S
    return built


def _check_dj(built, result):
    for name, S in built.items():
        try:
            green_classes(S)
            result.add("dj", "D=J via R o L", name, True, f"n={S.n}")
        except SemigroupError as exc:
            result.add("dj", "D=J via R o L", name, False, str(exc))
        fast = compute_preorders(S)
        slow = preorders_bruteforce(S)
        same = all(np.array_equal(a, b) for a, b in zip(fast, slow))
        result.add("dj", "preorders=brute force", name, same)


def _check_inheritance(built, result, max_seed=3, cap=5000):
    for name, S in built.items():
        G = green_classes(S)
        embs, truncated = enumerate_subsemigroups(S, max_seed, cap)
        counts = {"containment": 0, "lem_leqR": 0, "thm_stable": 0}
        n_regular = n_applicable = 0
        for U in embs:
            GU = green_classes(U.local)
            try:
                rep = inheritance_report(S, U, G, GU)
                n_regular += rep.u_regular
            except SemigroupError:
                # containment or R/L/H inheritance for regular U failed
                counts["containment"] += 1
                continue
            counts["lem_leqR"] += len(leqr_inheritance_check(S, U, G, GU).violations)
            ts = thm_stable_check(S, U, G, GU)
            n_applicable += ts.applicable
            counts["thm_stable"] += len(ts.violations)
        detail = f"{len(embs)} subsemigroups" + (" (truncated)" if truncated else "")
        result.add("inheritance", "G' in G|_U and regular U inherits R,L,H", name,
                   counts["containment"] == 0, f"{detail}, {n_regular} regular")
        result.add("inheritance", "x <=R y, y in Reg(U) => x <=R' y (and dual)", name,
                   counts["lem_leqR"] == 0, f"{counts['lem_leqR']} violations")
        result.add("inheritance", "x J y, x <=J' y => x D' y", name,
                   counts["thm_stable"] == 0, f"{n_applicable} applicable")
        rc = reg_closed_check(S, G)
        result.add("inheritance", "Reg(S) closed => D'=D|_U=J'=J|_U", name, rc.ok,
                   "Reg(S) closed" if rc.closed else "Reg(S) not closed")


def _check_counterexamples(built, result):
    S = built.get("brandt_b2")
    if S is None:
        result.add("counterexamples", "Brandt B2 available", "brandt_b2", False,
                   "corpus member failed to build")
    else:
        _brandt_counterexamples(S, result)
        _miner(S, result)
    _i3_counterexample(result)


def _brandt_counterexamples(S, result):
    sec = "counterexamples"
    e, f, a = S.index("e"), S.index("f"), S.index("a")
    zero = S.index("0")
    G = green_classes(S)

    U = closure(S, [e, f])
    GU = green_classes(U.local)
    le, lf = U.from_ambient[e], U.from_ambient[f]
    result.add(sec, "U = <e,f> = {0,e,f}", "brandt_b2",
               set(U.members) == {zero, e, f})
    result.add(sec, "(e,f) in D|_U", "brandt_b2", G.related("D", e, f))
    result.add(sec, "(e,f) not in D'", "brandt_b2", not GU.related("D", le, lf))
    result.add(sec, "U is J'-trivial", "brandt_b2", GU.count("J") == len(U))
    rep = inheritance_report(S, U, G, GU)
    result.add(sec, "D, J not inherited; R, L, H inherited", "brandt_b2",
               not rep.equals["D"] and not rep.equals["J"]
               and all(rep.equals[k] for k in "RLH"))

    U = closure(S, [e, a])
    GU = green_classes(U.local)
    le, la = U.from_ambient[e], U.from_ambient[a]
    result.add(sec, "U = <e,a> = {0,e,a}", "brandt_b2",
               set(U.members) == {zero, e, a})
    result.add(sec, "e <=R a in S", "brandt_b2", G.leq_r[e, a])
    result.add(sec, "e not <=R' a", "brandt_b2", not GU.leq_r[le, la])
    result.add(sec, "a <R' e", "brandt_b2", GU.leq_r[la, le] and not GU.leq_r[le, la])
    found = leqr_inheritance_check(S, U, G, GU).findings
    result.add(sec, "near miss (e, a) reported", "brandt_b2", ("R", e, a) in found)


def _miner(S, result):
    sec = "counterexamples"
    G = green_classes(S)
    d_fail = leq_found = False
    for U in enumerate_subsemigroups(S, 3, 5000)[0]:
        GU = green_classes(U.local)
        if not inheritance_report(S, U, G, GU).equals["D"]:
            d_fail = True
        if any(k == "R" for k, _, _ in leqr_inheritance_check(S, U, G, GU).findings):
            leq_found = True
    result.add(sec, "sweep finds U with D' != D|_U", "brandt_b2", d_fail)
    result.add(sec, "sweep finds x <=R y, y not in Reg(U), x not <=R' y",
               "brandt_b2", leq_found)


def _i3_counterexample(result):
    sec = "counterexamples"
    subj = "i3"
    try:
        U, elems = i3_sub_fe()
    except SemigroupError as exc:
        result.add(sec, "build <f,e> in I3", subj, False, str(exc))
        return
    S = U.ambient
    G = green_classes(S)
    GU = green_classes(U.local)
    f, e, g = elems.index(I3_F), elems.index(I3_E), elems.index(I3_G)
    oracle = brute_force_closure([_as_dict(I3_F), _as_dict(I3_E)])
    result.add(sec, "|I3| = 34", subj, S.n == 34)
    result.add(sec, "|<f,e>| matches direct-composition closure", subj,
               len(U) == len(oracle), f"order {len(U)}")
    result.add(sec, "fg = e", subj, S.product(f, g) == e)
    le, lf = U.from_ambient[e], U.from_ambient[f]
    result.add(sec, "e in Reg(U)", subj, regular_mask(U.local)[le])
    result.add(sec, "e <R f in I3", subj, G.leq_r[e, f] and not G.leq_r[f, e])
    result.add(sec, "e <J f in I3", subj, G.leq_j[e, f] and not G.leq_j[f, e])
    result.add(sec, "e not <=R' f", subj, not GU.leq_r[le, lf])
    found = leqr_inheritance_check(S, U, G, GU).findings
    result.add(sec, "near miss (e, f) reported", subj, ("R", e, f) in found)


def _check_stability(built, result):
    sec = "stability"
    for name, S in built.items():
        G = green_classes(S)
        rep = stability_report(S, G)
        flags = rep.flags()
        result.add(sec, "all stability flags true", name, all(flags.values()),
                   ",".join(k for k, v in flags.items() if not v))
        result.add(sec, "KW1-stable == stable", name, rep.kw1_stable == rep.stable)
        result.add(sec, "KW-stable => KW1-stable", name, rep.kw1_stable or not rep.kw_stable)
        result.add(sec, "periodic => group-bound => stable", name,
                   (not rep.periodic or rep.group_bound) and (not rep.group_bound or rep.stable))
        result.add(sec, "stable == M_R* and M_L*", name,
                   rep.stable == (rep.mr_star and rep.ml_star))


def _check_simple(built, result):
    sec = "simple"
    for name, S in built.items():
        c = classify_simple(S)
        if c.simple:
            ok = c.equivalent and c.stable
            result.add(sec, "simple: stable = c.regular = c.simple = xRxyLy", name, ok,
                       f"{c.stable},{c.completely_regular},{c.completely_simple},{c.r_xy_l}")
        elif name == "brandt_b2":
            result.add(sec, "not simple", name, True)


def _check_right_group(built, result):
    sec = "right-group"
    for name, S in built.items():
        G = green_classes(S)
        if G.count("R") != 1:
            continue
        try:
            dec = right_group_decomposition(S, G)
        except (SemigroupError, AssertionError) as exc:
            result.add(sec, "right-simple => right group", name, False, str(exc))
            continue
        want = RIGHT_GROUP_SHAPES.get(name, dec.orders)
        result.add(sec, "right-simple => right group", name,
                   dec.orders == want and dec.left_stable and dec.left_cancellative,
                   f"|G|={dec.group_order}, |R|={dec.right_zero_order}")
    if "brandt_b2" in built:
        result.add(sec, "B2 not right-simple", "brandt_b2",
                   green_classes(built["brandt_b2"]).count("R") != 1)


def _check_bicyclic(result, depth=50, bound=8):
    sec = "bicyclic"
    subj = "bicyclic"
    result.add(sec, "ab = 1, ba != 1", subj, bc.A * bc.B == bc.ONE and bc.B * bc.A != bc.ONE)
    right, left = bc.bicyclic_stability_witnesses()
    result.add(sec, "(1, 1b) in J \\ R", subj, right.verified)
    result.add(sec, "(1, a1) in J \\ L", subj, left.verified)
    try:
        chain = bc.idempotent_chain(depth)
        result.add(sec, f"idempotent chain strict to depth {depth}", subj, len(chain) == depth + 1)
    except AssertionError as exc:
        result.add(sec, f"idempotent chain strict to depth {depth}", subj, False, str(exc))
    try:
        chain = bc.mrstar_failure_demo(depth)
        result.add(sec, f"M_R* failure chain strict to depth {depth}", subj,
                   len(chain) == depth + 1)
    except AssertionError as exc:
        result.add(sec, f"M_R* failure chain strict to depth {depth}", subj, False, str(exc))
    elems, rels = bc.definitional_relations(bound)
    closed = bc.closed_form_relations(elems)
    bad = [k for k in closed if not np.array_equal(closed[k], rels[k])]
    result.add(sec, f"closed forms = definitions, indices <= {bound}", subj, not bad,
               ",".join(bad))
    result.add(sec, f"associative, indices <= {bound}", subj, bc.check_associativity(bound))


def paper_suite(entries=None, only: str | None = None,
                include_optional: bool = False) -> SuiteResult:
    """Run every check; ``only`` restricts to one section of SECTIONS."""
    if only is not None and only not in SECTIONS:
        raise ValueError(f"unknown section {only!r}; choose from {', '.join(SECTIONS)}")
    result = SuiteResult()
    wanted = SECTIONS if only is None else (only,)
    if entries is None:
        entries = corpus(include_optional=include_optional)
    built = {}
    if any(s != "bicyclic" for s in wanted):
        built = _build_all(entries, result)
    if "dj" in wanted:
        _check_dj(built, result)
    if "inheritance" in wanted:
        _check_inheritance({k: v for k, v in built.items() if v.n <= 64}, result)
    if "counterexamples" in wanted:
        _check_counterexamples(built, result)
    if "stability" in wanted:
        _check_stability(built, result)
    if "simple" in wanted:
        _check_simple(built, result)
    if "right-group" in wanted:
        _check_right_group(built, result)
    if "bicyclic" in wanted:
        _check_bicyclic(result)
    return result
