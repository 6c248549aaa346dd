"""The plain-text algebra format, fixture loading, and JSON/DOT output.

Format (one directive per line, ``#`` starts a comment)::

    kind: algebra | commutator-structure
    name: <name>
    elements: <label> <label> ...
    op <symbol>/<arity>:        (algebra) n^(k-1) rows of n labels,
      <row>                     last argument varying fastest
    names:                      (optional) name = block | block ...
      <name> = <labels> | ...   omitted elements are singletons
    leq:                        (commutator-structure) order pairs
      <x> < <y>
    comm:                       m rows of m labels, row = left argument
      <row>
    principal: <label> ...      (optional) principal elements
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .algebra import FiniteAlgebra, Signature
from .commutator import CommutatorStructure
from .errors import ParseError
from .lattice import FiniteBoundedLattice
from .partition import Congruence

FIXTURES = (
    "c8",
    "s3",
    "m5",
    "n5x",
    "u5",
    "lattice-e",
    "lattice-p",
    "lattice-d",
    "chain-2",
    "chain-3",
    "chain-4",
)

_OP = re.compile(r"^op\s+(\S+)\s*/\s*(\d+)\s*:\s*$")


@dataclass
class Token:
    text: str
    line: int
    col: int


@dataclass
class AlgebraDocument:
    kind: str
    name: str
    elements: list[str]
    ops: list[tuple[str, int, list[list[Token]]]] = field(default_factory=list)
    names: list[tuple[str, list[list[Token]], int]] = field(default_factory=list)
    leq: list[tuple[Token, Token]] = field(default_factory=list)
    comm: list[list[Token]] = field(default_factory=list)
    principal: list[Token] | None = None


def _tokens(raw: str, lineno: int) -> list[Token]:
    return [Token(m.group(), lineno, m.start() + 1) for m in re.finditer(r"\S+", raw)]


def _strip_comment(raw: str) -> str:
    m = re.search(r"(^|\s)#", raw)
    return raw[: m.start()] if m else raw


def parse(text: str) -> AlgebraDocument:
    """Parse and validate a document; errors carry line and column."""
    header: dict[str, tuple[str, int]] = {}
    ops: list[tuple[str, int, list[list[Token]], int]] = []
    names: list[tuple[str, list[list[Token]], int]] = []
    leq: list[tuple[Token, Token]] = []
    comm: list[list[Token]] = []
    principal = None
    section = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip())
        m = _OP.match(stripped)
        if m:
            ops.append((m.group(1), int(m.group(2)), [], lineno))
            section = "op"
            continue
        key, sep, rest = stripped.partition(":")
        if sep and key in ("kind", "name", "elements", "principal") and indent == 0:
            if key in header:
                raise ParseError(f"duplicate {key!r}", lineno, 1)
            header[key] = (rest.strip(), lineno)
            if key == "principal":
                principal = _tokens(rest, lineno)
                for t in principal:
                    t.col += len(key) + 1 + (len(rest) - len(rest.lstrip()))
            section = None
            continue
        if sep and key in ("names", "leq", "comm") and not rest.strip() and indent == 0:
            section = key
            continue
        toks = _tokens(line, lineno)
        if section == "op":
            ops[-1][2].append(toks)
        elif section == "names":
            if len(toks) < 3 or toks[1].text != "=":
                raise ParseError("expected '<name> = <labels> | ...'", lineno, toks[0].col)
            blocks: list[list[Token]] = [[]]
            for t in toks[2:]:
                if t.text == "|":
                    blocks.append([])
                else:
                    blocks[-1].append(t)
            names.append((toks[0].text, blocks, lineno))
        elif section == "leq":
            if len(toks) != 3 or toks[1].text not in ("<", "<="):
                raise ParseError("expected '<x> < <y>'", lineno, toks[0].col)
            leq.append((toks[0], toks[2]))
        elif section == "comm":
            comm.append(toks)
        else:
            raise ParseError(f"unexpected line {stripped!r}", lineno, indent + 1)

    for key in ("kind", "name", "elements"):
        if key not in header:
            raise ParseError(f"missing '{key}:' line")
    kind, kline = header["kind"]
    if kind not in ("algebra", "commutator-structure"):
        raise ParseError(f"unknown kind {kind!r}", kline, 7)
    elements = header["elements"][0].split()
    eline = header["elements"][1]
    if not elements:
        raise ParseError("no elements declared", eline, 1)
    dup = {e for e in elements if elements.count(e) > 1}
    if dup:
        raise ParseError(f"duplicate element labels {sorted(dup)}", eline, 1)
    known = set(elements)
    n = len(elements)

    def check_label(t: Token):
        if t.text not in known:
            raise ParseError(f"unknown label {t.text!r}", t.line, t.col)

    doc = AlgebraDocument(kind, header["name"][0], elements)
    if kind == "algebra":
        if leq or comm:
            raise ParseError("'leq:'/'comm:' sections belong to commutator structures")
        seen = set()
        for op, k, rows, line in ops:
            if op in seen:
                raise ParseError(f"operation {op!r} declared twice", line, 4)
            seen.add(op)
            want_rows = 1 if k <= 1 else n ** (k - 1)
            want_cols = 1 if k == 0 else n
            if len(rows) > want_rows:
                extra = rows[want_rows][0]
                raise ParseError(f"table of {op}/{k} needs {want_rows} rows, got {len(rows)}", extra.line, extra.col)
            if len(rows) < want_rows:
                raise ParseError(f"table of {op}/{k} needs {want_rows} rows, got {len(rows)}", line, 1)
            for row in rows:
                if len(row) != want_cols:
                    col = row[-1].col if row else 1
                    raise ParseError(f"row of {op}/{k} needs {want_cols} entries, got {len(row)}", row[0].line, col)
                for t in row:
                    check_label(t)
            doc.ops.append((op, k, rows))
    else:
        if ops:
            raise ParseError("operation tables belong to algebras", ops[0][3], 1)
        for a, b in leq:
            check_label(a)
            check_label(b)
        if len(comm) != n:
            raise ParseError(f"'comm:' needs {n} rows, got {len(comm)}")
        for row in comm:
            if len(row) != n:
                raise ParseError(f"'comm:' rows need {n} entries, got {len(row)}", row[0].line, row[0].col)
            for t in row:
                check_label(t)
        doc.leq = leq
        doc.comm = comm
    for nm, blocks, line in names:
        for block in blocks:
            for t in block:
                check_label(t)
    doc.names = names
    if principal is not None:
        for t in principal:
            check_label(t)
        doc.principal = principal
    return doc


def build(doc: AlgebraDocument) -> FiniteAlgebra | CommutatorStructure:
    """Turn a parsed document into an algebra or a commutator structure."""
    index = {e: i for i, e in enumerate(doc.elements)}
    n = len(doc.elements)
    if doc.kind == "algebra":
        tables = []
        for _, k, rows in doc.ops:
            flat = [index[t.text] for row in rows for t in row]
            tables.append(np.asarray(flat, dtype=np.int32).reshape((n,) * k))
        sig = Signature(tuple((op, k) for op, k, _ in doc.ops))
        names = {}
        for nm, blocks, _ in doc.names:
            c = Congruence.from_blocks(n, [[index[t.text] for t in b] for b in blocks])
            names[c] = nm
        alg = FiniteAlgebra(tuple(doc.elements), sig, tuple(tables), name=doc.name, congruence_names=names)
        from .algebra import compatibility_violation

        for c, nm in names.items():
            if compatibility_violation(alg, c) is not None:
                raise ParseError(f"named partition {nm!r} is not a congruence")
        return alg
    covers = [(index[a.text], index[b.text]) for a, b in doc.leq]
    try:
        lat = FiniteBoundedLattice.from_covers(doc.elements, covers)
    except ValueError as exc:
        raise ParseError(f"'leq:' does not define a lattice: {exc}") from None
    table = np.asarray([[index[t.text] for t in row] for row in doc.comm], dtype=np.int64)
    principal = None
    if doc.principal is not None:
        marked = {index[t.text] for t in doc.principal}
        principal = tuple(i in marked for i in range(n))
    return CommutatorStructure(lat, table, provenance="fixture", name=doc.name, principal=principal)


def fixture_text(name: str) -> str:
    return resources.files("retic").joinpath("fixtures", f"{name}.alg").read_text(encoding="utf-8")


def load(source: str) -> FiniteAlgebra | CommutatorStructure:
    """Load a fixture by name or a document from a file path."""
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    elif source in FIXTURES:
        text = fixture_text(source)
    else:
        raise FileNotFoundError(f"no file or built-in fixture named {source!r}")
    return build(parse(text))


# -- output -----------------------------------------------------------------------


def emit_json(report) -> str:
    """Stable JSON: sorted keys, no ASCII escaping."""
    return json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(lat: FiniteBoundedLattice, name: str = "lattice") -> str:
    """Hasse diagram of the cover relation, bottom at rank 0."""
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i, lab in enumerate(lat.labels):
        lines.append(f"  n{i} [label={_dot_id(lab)}];")
    ranks: dict[int, list[int]] = {}
    for i, h in enumerate(lat.height):
        ranks.setdefault(h, []).append(i)
    for h in sorted(ranks):
        lines.append("  { rank=same; " + " ".join(f"n{i};" for i in ranks[h]) + " }")
    for a, b in lat.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
