"""Text file formats and diagram rendering.

Table files::

    n
    row 0: n space-separated 0-based indices
    ...
    labels: name0 name1 ...        (optional)

Generator files, one generator per line (images are 1-based)::

    t 3: 2 3 1          total map
    p 3: 2 3 -          partial injection, '-' undefined
    bm 2: 01;10         boolean matrix, rows of bits

Blank lines and ``#`` comments are ignored in both formats.
"""
from __future__ import annotations

import numpy as np

from semigreen.core import FiniteSemigroup, generate_from_maps, validate_table
from semigreen.elements import BooleanMatrix, PartialInjection, Transformation
from semigreen.errors import ParseError
from semigreen.green import GreenStructure, eggboxes

GENERATOR_TAGS = ("t", "p", "bm")
GROUP_TD = '<TD BGCOLOR="lightgrey">'


def _lines(text: str):
    for k, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield k, line


def parse_table_file(text: str) -> FiniteSemigroup:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(1, "empty file")
    k, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(k, f"expected element count, got {first!r}") from None
    if n < 1:
        raise ParseError(k, "element count must be positive")
    if len(lines) < n + 1:
        raise ParseError(lines[-1][0], f"expected {n} table rows, got {len(lines) - 1}")
    rows = []
    for k, line in lines[1:n + 1]:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(k, "non-integer entry") from None
        if len(row) != n:
            raise ParseError(k, f"row has {len(row)} entries, expected {n}")
        if any(not 0 <= v < n for v in row):
            raise ParseError(k, f"entry outside 0..{n - 1}")
        rows.append(row)
    labels = None
    rest = lines[n + 1:]
    if rest:
        k, line = rest[0]
        if not line.startswith("labels:"):
            raise ParseError(k, "unexpected trailing content")
        labels = line[len("labels:"):].split()
        if len(labels) != n:
            raise ParseError(k, f"{len(labels)} labels for {n} elements")
        if len(rest) > 1:
            raise ParseError(rest[1][0], "unexpected trailing content")
    return validate_table(rows, labels=labels)


def format_table(S: FiniteSemigroup) -> str:
    width = len(str(S.n - 1))
    out = [str(S.n)]
    for row in S.table.tolist():
        out.append(" ".join(str(v).rjust(width) for v in row))
    if S.labels is not None and all(s and not any(c.isspace() for c in s) for s in S.labels):
        out.append("labels: " + " ".join(S.labels))
    return "\n".join(out) + "\n"


def parse_generator(line: str, k: int = 1):
    head, sep, body = line.partition(":")
    if not sep:
        raise ParseError(k, "expected '<tag> <m>: ...'")
    parts = head.split()
    if len(parts) != 2 or parts[0] not in GENERATOR_TAGS:
        raise ParseError(k, f"bad generator header {head!r}")
    tag = parts[0]
    try:
        m = int(parts[1])
    except ValueError:
        raise ParseError(k, f"bad degree {parts[1]!r}") from None
    try:
        if tag == "bm":
            rows = [r.replace(" ", "") for r in body.split(";")]
            if len(rows) != m or any(len(r) != m for r in rows):
                raise ParseError(k, f"expected {m} rows of {m} bits")
            return BooleanMatrix(tuple(tuple(int(c) for c in r) for r in rows))
        toks = body.split()
        if len(toks) != m:
            raise ParseError(k, f"expected {m} images, got {len(toks)}")
        if tag == "t":
            return Transformation(tuple(int(t) for t in toks))
        return PartialInjection(tuple(None if t == "-" else int(t) for t in toks))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(k, str(exc)) from None


def parse_generators(text: str) -> list:
    gens = [parse_generator(line, k) for k, line in _lines(text)]
    if not gens:
        raise ParseError(1, "no generators")
    return gens


def parse_generators_file(text: str) -> FiniteSemigroup:
    return generate_from_maps(parse_generators(text))[0]


def is_generator_text(text: str) -> bool:
    for _, line in _lines(text):
        return line.split()[0] in GENERATOR_TAGS
    return False


def load(text: str):
    """Parse either file format; returns ``(S, elements or None)``."""
    if is_generator_text(text):
        return generate_from_maps(parse_generators(text))
    return parse_table_file(text), None


def emit_eggbox(S: FiniteSemigroup, G: GreenStructure, format: str = "text") -> str:
    if format == "text":
        return _eggbox_text(S, G)
    if format == "dot":
        return _eggbox_dot(S, G)
    raise ValueError(f"unknown format {format!r}")


def _cell_text(S, cell, group):
    return ("*" if group else "") + ",".join(S.label(x) for x in cell)


def _eggbox_text(S: FiniteSemigroup, G: GreenStructure) -> str:
    blocks = []
    for box in eggboxes(S, G):
        texts = [[_cell_text(S, c, g) for c, g in zip(row, grow)]
                 for row, grow in zip(box.cells, box.group)]
        widths = [max(len(texts[r][c]) for r in range(len(texts)))
                  for c in range(len(box.cols))]
        rule = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
        lines = [f"D-class {box.d_class} ({box.shape[0]}x{box.shape[1]}, "
                 f"|H| = {len(box.cells[0][0])})", rule]
        for row in texts:
            lines.append("| " + " | ".join(t.ljust(w) for t, w in zip(row, widths)) + " |")
            lines.append(rule)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def _html(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _d_order_covers(G: GreenStructure) -> list[tuple[int, int]]:
    """Pairs (c, d) of D-classes with d immediately below c in the J-order."""
    reps = [int(np.flatnonzero(G.d_class == d)[0]) for d in range(G.count("D"))]
    below = {c: {d for d in range(len(reps))
                 if d != c and G.leq_j[reps[d], reps[c]]} for c in range(len(reps))}
    covers = []
    for c in range(len(reps)):
        for d in sorted(below[c]):
            if not any(d in below[m] for m in below[c]):
                covers.append((c, d))
    return covers


def _eggbox_dot(S: FiniteSemigroup, G: GreenStructure) -> str:
    lines = ["digraph eggbox {", "  node [shape=plaintext];"]
    for box in eggboxes(S, G):
        d = box.d_class
        lines.append(f"  subgraph cluster_d{d} {{")
        lines.append(f'    label="D{d}";')
        rows = []
        for row, grow in zip(box.cells, box.group):
            tds = "".join(
                (GROUP_TD if g else "<TD>") + _html(_cell_text(S, c, g)) + "</TD>"
                for c, g in zip(row, grow))
            rows.append(f"<TR>{tds}</TR>")
        lines.append(f'    d{d} [label=<<TABLE BORDER="0" CELLBORDER="1" '
                     f'CELLSPACING="0">{"".join(rows)}</TABLE>>];')
        lines.append("  }")
    for c, d in _d_order_covers(G):
        lines.append(f"  d{c} -> d{d};")
    lines.append("}")
    return "\n".join(lines) + "\n"

