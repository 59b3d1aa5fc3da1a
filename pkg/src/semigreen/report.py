"""Analysis reports for a single semigroup."""
from __future__ import annotations

from dataclasses import dataclass, field

from semigreen.core import FiniteSemigroup, idempotents, regular_mask
from semigreen.green import KINDS, GreenStructure, green_classes
from semigreen.inheritance import (
    enumerate_subsemigroups,
    inheritance_report,
    leqr_inheritance_check,
    thm_stable_check,
)
from semigreen.stability import classify_simple, stability_report


@dataclass
class AnalysisReport:
    name: str
    order: int
    identity: str | None
    class_counts: dict[str, int]
    idempotent_count: int
    regular_count: int
    stability: dict[str, bool]
    simple: bool
    subsemigroups: dict[str, int] = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    def sections(self) -> list[tuple[str, list[tuple[str, object]]]]:
        out = [
            ("semigroup", [("name", self.name), ("order", self.order),
                           ("identity", self.identity if self.identity is not None else "none")]),
            ("green", [(f"{k}_classes", self.class_counts[k]) for k in KINDS]),
            ("elements", [("idempotents", self.idempotent_count),
                          ("regular", self.regular_count),
                          ("regular_semigroup", self.regular_count == self.order)]),
            ("stability", list(self.stability.items()) + [("simple", self.simple)]),
        ]
        if self.subsemigroups:
            out.append(("subsemigroups", list(self.subsemigroups.items())))
        if self.witnesses:
            out.append(("witnesses", [(f"w{i}", " ".join(map(str, w)))
                                      for i, w in enumerate(self.witnesses)]))
        return out

    def to_text(self) -> str:
        lines = []
        for title, items in self.sections():
            lines.append(f"{title}:")
            lines += [f"  {k}: {_fmt(v)}" for k, v in items]
        return "\n".join(lines) + "\n"

    def to_kv(self) -> str:
        lines = []
        for title, items in self.sections():
            lines.append(f"[{title}]")
            lines += [f"{k}={_fmt(v)}" for k, v in items]
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def subsemigroup_summary(S: FiniteSemigroup, G: GreenStructure,
                         max_seed: int = 3, cap: int = 5000) -> dict[str, int]:
    embs, truncated = enumerate_subsemigroups(S, max_seed, cap)
    summary = {"count": len(embs), "truncated": int(truncated), "regular": 0,
               "leq_violations": 0, "leq_near_misses": 0, "thm_stable_violations": 0}
    for k in KINDS:
        summary[f"{k}_not_inherited"] = 0
    for U in embs:
        GU = green_classes(U.local)
        rep = inheritance_report(S, U, G, GU)
        summary["regular"] += rep.u_regular
        for k in KINDS:
            summary[f"{k}_not_inherited"] += not rep.equals[k]
        chk = leqr_inheritance_check(S, U, G, GU)
        summary["leq_violations"] += len(chk.violations)
        summary["leq_near_misses"] += len(chk.findings)
        summary["thm_stable_violations"] += len(thm_stable_check(S, U, G, GU).violations)
    return summary


def analyze(S: FiniteSemigroup, name: str = "input", subsemigroups: bool = True,
            max_seed: int = 3) -> AnalysisReport:
    G = green_classes(S)
    st = stability_report(S, G)
    return AnalysisReport(
        name=name,
        order=S.n,
        identity=None if S.identity is None else S.label(S.identity),
        class_counts={k: G.count(k) for k in KINDS},
        idempotent_count=len(idempotents(S)),
        regular_count=int(regular_mask(S).sum()),
        stability=st.flags(),
        simple=classify_simple(S, G).simple,
        subsemigroups=subsemigroup_summary(S, G, max_seed) if subsemigroups else {},
        witnesses=st.witnesses,
    )
