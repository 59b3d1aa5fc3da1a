"""Command line interface.

Exit status: 0 success, 1 a check failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import os
import sys

from semigreen.core import closure
from semigreen.corpus import CorpusEntry, corpus
from semigreen.errors import SemigroupError
from semigreen.formats import emit_eggbox, load, parse_generators
from semigreen.green import KINDS, green_classes
from semigreen.inheritance import (
    enumerate_subsemigroups,
    inheritance_report,
    leqr_inheritance_check,
    thm_stable_check,
)
from semigreen.report import analyze
from semigreen.stability import stability_report
from semigreen.suite import SECTIONS, paper_suite


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _load(path: str):
    return load(_read(path))


def _sub_indices(S, elements, arg: str) -> list[int]:
    if os.path.isfile(arg):
        if elements is None:
            raise InputError("--sub with a generator file needs a generator-file ambient")
        gens = parse_generators(_read(arg))
        try:
            return [elements.index(g) for g in gens]
        except ValueError:
            raise InputError("a --sub generator is not an element of the ambient") from None
    out = []
    for tok in arg.replace(",", " ").split():
        if tok.isdigit() and (S.labels is None or tok not in S.labels):
            k = int(tok)
        elif S.labels is not None and tok in S.labels:
            k = S.labels.index(tok)
        else:
            raise InputError(f"unknown element {tok!r}")
        if not 0 <= k < S.n:
            raise InputError(f"index {k} out of range")
        out.append(k)
    if not out:
        raise InputError("--sub is empty")
    return out


def cmd_analyze(args) -> int:
    S, _ = _load(args.file)
    rep = analyze(S, name=os.path.basename(args.file),
                  subsemigroups=not args.no_subs, max_seed=args.max_seed)
    sys.stdout.write(rep.to_kv() if args.format == "kv" else rep.to_text())
    return 0


def cmd_eggbox(args) -> int:
    S, _ = _load(args.file)
    sys.stdout.write(emit_eggbox(S, green_classes(S), "dot" if args.dot else "text"))
    return 0


def cmd_stability(args) -> int:
    S, _ = _load(args.file)
    G = green_classes(S)
    rep = stability_report(S, G)
    lines = [f"{k}: {'true' if v else 'false'}" for k, v in rep.flags().items()]
    lines.append("right_stable_elements: " + " ".join(
        S.label(x) for x in range(S.n) if rep.right_stable[x]))
    lines.append("left_stable_elements: " + " ".join(
        S.label(x) for x in range(S.n) if rep.left_stable[x]))
    for kind, x, y in rep.witnesses:
        lines.append(f"witness: {kind} {S.label(x)} {S.label(y)}")
    print("\n".join(lines))
    return 0 if all(rep.flags().values()) else 1


def cmd_inherit(args) -> int:
    S, elements = _load(args.file)
    U = closure(S, _sub_indices(S, elements, args.sub))
    G = green_classes(S)
    GU = green_classes(U.local)
    rep = inheritance_report(S, U, G, GU)
    leq = leqr_inheritance_check(S, U, G, GU)
    ts = thm_stable_check(S, U, G, GU)
    lab = S.label
    lines = ["members: " + " ".join(lab(m) for m in U.members),
             f"order: {len(U)}",
             f"u_regular: {str(rep.u_regular).lower()}",
             f"reg_s: {str(rep.reg_s_closed).lower()}"]
    for k in KINDS:
        lines.append(f"{k}: contains={str(rep.contains[k]).lower()} "
                     f"equals={str(rep.equals[k]).lower()}")
        for x, y in rep.counterexamples.get(k, []):
            lines.append(f"  in {k}|_U not {k}': ({lab(x)}, {lab(y)})")
    for kind, x, y in leq.violations:
        lines.append(f"violation: {kind} ({lab(x)}, {lab(y)})")
    for kind, x, y in leq.findings:
        lines.append(f"near_miss: x <={kind} y in S, not in U: ({lab(x)}, {lab(y)})")
    lines.append(f"thm_stable: {'applicable' if ts.applicable else 'not applicable'}, "
                 f"{len(ts.violations)} violations")
    print("\n".join(lines))
    return 1 if leq.violations or ts.violations else 0


def cmd_enumerate(args) -> int:
    S, _ = _load(args.file)
    G = green_classes(S)
    embs, truncated = enumerate_subsemigroups(S, args.max_seed, args.cap)
    for U in sorted(embs, key=lambda u: (len(u), u.members)):
        rep = inheritance_report(S, U, G)
        failed = "".join(k for k in KINDS if not rep.equals[k]) or "-"
        flag = "regular" if rep.u_regular else "nonregular"
        print(f"{{{' '.join(S.label(m) for m in U.members)}}} order={len(U)} "
              f"{flag} not_inherited={failed}")
    print(f"total: {len(embs)}" + (" (truncated)" if truncated else ""))
    return 0


def cmd_paper_suite(args) -> int:
    entries = corpus(include_optional=args.with_t4)
    for item in args.replace or []:
        name, sep, path = item.partition("=")
        if not sep:
            raise InputError(f"--replace expects NAME=FILE, got {item!r}")
        text = _read(path)
        entries = [CorpusEntry(name, lambda text=text: load(text)[0], e.expected)
                   if e.name == name else e for e in entries]
    result = paper_suite(entries, only=args.only)
    sys.stdout.write(result.to_kv() if args.format == "kv" else result.to_text())
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semigreen",
                                description="Green's relations and stability of finite semigroups")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="summary report for a semigroup file")
    a.add_argument("file")
    a.add_argument("--format", choices=("text", "kv"), default="text")
    a.add_argument("--max-seed", type=int, default=3)
    a.add_argument("--no-subs", action="store_true", help="skip the subsemigroup sweep")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("eggbox", help="eggbox diagrams of all D-classes")
    e.add_argument("file")
    e.add_argument("--dot", action="store_true", help="emit graphviz dot")
    e.set_defaults(func=cmd_eggbox)

    s = sub.add_parser("stability", help="stability flags and witnesses")
    s.add_argument("file")
    s.set_defaults(func=cmd_stability)

    i = sub.add_parser("inherit", help="compare Green's relations of <X> with restrictions")
    i.add_argument("file")
    i.add_argument("--sub", required=True,
                   help="comma-separated element indices or labels, or a generator file")
    i.set_defaults(func=cmd_inherit)

    n = sub.add_parser("enumerate-subs", help="subsemigroups generated by few elements")
    n.add_argument("file")
    n.add_argument("--max-seed", type=int, default=3)
    n.add_argument("--cap", type=int, default=5000)
    n.set_defaults(func=cmd_enumerate)

    ps = sub.add_parser("paper-suite", help="run every theorem check over the corpus")
    ps.add_argument("--only", choices=SECTIONS)
    ps.add_argument("--format", choices=("text", "kv"), default="text")
    ps.add_argument("--with-t4", action="store_true", help="include T4 (order 256)")
    ps.add_argument("--replace", action="append", metavar="NAME=FILE",
                    help="substitute a corpus member by a semigroup file")
    ps.set_defaults(func=cmd_paper_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SemigroupError) as exc:
        print(f"semigreen: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
