"""Command-line driver: ``retic <command> <file|fixture> [options]``."""
from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .analysis import analyze, commutator_dict, lattice_summary, structure_of
from .commutator import CommutatorStructure
from .errors import HypothesisError, LatticeTooLarge, ParseError, ReticError
from .io import FIXTURES, emit_dot, emit_json, load
from .lattice import identify
from .reticulation import build_reticulation
from .spectrum import spectrum_report
from .verify import battery

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_VERIFY = 0, 1, 2, 3, 4

COMMANDS = ("analyze", "commutators", "spectrum", "reticulate", "verify", "dot")

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def pretty_name(name: str) -> str:
    """Catalog name in math notation: L2^2 -> L₂², L2+L2^2 -> L₂⊕L₂²."""
    out = []
    for part in name.split("+"):
        base, _, exp = part.partition("^")
        out.append(base[0] + base[1:].translate(_SUB) + {"": "", "2": "²", "3": "³"}[exp])
    return "⊕".join(out)


def _shape(lat) -> str:
    names = identify(lat)
    if names:
        return " ≅ ".join(pretty_name(n) for n in names)
    return "covers " + ", ".join(f"{lat.labels[a]} < {lat.labels[b]}" for a, b in lat.covers)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="retic", description="Congruences, commutators and reticulations of finite algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("source", help=f"a document path or a built-in fixture ({', '.join(FIXTURES)})")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.add_argument("--dot-out", metavar="PATH", help="also write Hasse diagrams of Con(A) and L(A) in DOT")
    p.add_argument("--max-lattice", type=int, metavar="N", help="cap on lattice size for ideal enumeration")
    p.add_argument("--method", choices=("translation", "matrix"), default="translation",
                   help="commutator engine (default: translation)")
    return p


def _dot_text(cs: CommutatorStructure) -> str:
    name = cs.name or "A"
    text = emit_dot(cs.lattice, f"Con({name})")
    try:
        text += emit_dot(build_reticulation(cs).lattice, f"L({name})")
    except HypothesisError:
        pass
    return text


def _table_text(cs: CommutatorStructure) -> list[str]:
    labels = [cs.label(i) for i in range(cs.size)]
    width = max(len(s) for s in labels)
    head = (" " * (width + 3) + " ".join(s.ljust(width) for s in labels)).rstrip()
    rows = [head]
    for a in range(cs.size):
        cells = " ".join(cs.label(cs.comm(a, b)).ljust(width) for b in range(cs.size))
        rows.append(f"{labels[a].ljust(width)} | {cells}".rstrip())
    return rows


def _set(xs) -> str:
    return "{" + ", ".join(xs) + "}"


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.max_lattice is not None:
        if args.max_lattice < 1:
            print("retic: --max-lattice must be positive", file=sys.stderr)
            return EXIT_USAGE
        os.environ["RETIC_MAX_LATTICE"] = str(args.max_lattice)
    try:
        obj = load(args.source)
    except ParseError as exc:
        print(f"retic: {args.source}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FileNotFoundError, IsADirectoryError) as exc:
        print(f"retic: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cs = structure_of(obj, method=args.method)
        code = _dispatch(args, cs, out)
        if args.dot_out:
            with open(args.dot_out, "w", encoding="utf-8") as fh:
                fh.write(_dot_text(cs))
        return code
    except HypothesisError as exc:
        print(f"retic: refused: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except LatticeTooLarge as exc:
        print(f"retic: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ReticError as exc:
        print(f"retic: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _dispatch(args, cs: CommutatorStructure, out) -> int:
    name = cs.name or "A"
    lab = cs.label
    cmd = args.command
    if cmd == "analyze":
        data = analyze(cs)
        if args.json:
            out.write(emit_json(data))
            return EXIT_OK
        con = data["congruences"]
        print(f"{name}: |Con| = {len(con['elements'])}, shape {_shape(cs.lattice)}", file=out)
        print("laws: " + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in data["laws"].items()), file=out)
        c = data["classification"]
        print(f"abelian={c['abelian']} solvable={c['solvable']} nilpotent={c['nilpotent']}", file=out)
        sp = data["spectrum"]
        print(f"Spec = {_set(sp['spec'])}, Max = {_set(sp['max'])}", file=out)
        print(f"B(Con) = {_set(sp['boolean_center'])}, hyperarchimedean = {sp['hyperarchimedean']}", file=out)
        ret = data["reticulation"]
        if "refused" in ret:
            print(f"L({name}) refused: {ret['refused']}", file=out)
        else:
            print(f"L({name}) ≅ {_shape(build_reticulation(cs).lattice)}", file=out)
        return EXIT_OK
    if cmd == "commutators":
        if args.json:
            out.write(emit_json({"name": cs.name, "commutator": commutator_dict(cs), "laws": dict(cs.law_flags)}))
        else:
            print("\n".join(_table_text(cs)), file=out)
        return EXIT_OK
    if cmd == "spectrum":
        d = spectrum_report(cs).to_dict(cs)
        if args.json:
            out.write(emit_json({"name": cs.name} | d))
            return EXIT_OK
        print(f"Spec = {_set(d['spec'])}", file=out)
        print(f"Max = {_set(d['max'])}", file=out)
        for t, r in d["radical"].items():
            print(f"ρ({t}) = {r}", file=out)
        return EXIT_OK
    if cmd == "reticulate":
        r = build_reticulation(cs)
        shape = _shape(r.lattice)
        if args.json:
            out.write(emit_json({"name": cs.name, "lattice": lattice_summary(r.lattice)} | r.to_dict()))
            return EXIT_OK
        print(f"L({name}) ≅ {shape}", file=out)
        for c, members in enumerate(r.classes):
            print(f"  {r.lattice.labels[c]}: {_set(lab(t) for t in members)}", file=out)
        return EXIT_OK
    if cmd == "verify":
        rep = battery(cs.algebra if cs.algebra is not None else cs)
        if args.json:
            out.write(emit_json(rep.to_dict()))
        else:
            print("\n".join(rep.lines()), file=out)
            bad = len(rep.failures())
            print(f"{'ok' if rep.passed else 'FAILED'}: {len(rep.checks)} checks, {bad} failed", file=out)
        return EXIT_OK if rep.passed else EXIT_VERIFY
    if cmd == "dot":
        out.write(_dot_text(cs))
        return EXIT_OK
    raise AssertionError(cmd)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
