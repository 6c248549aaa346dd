"""Regenerate the operation-table fixtures from their definitions.

Groups come from quaternion and permutation arithmetic, lattices from
their order relations. M, N and U are transcribed tables and are written
by hand in the fixture directory.
"""
from __future__ import annotations

import itertools
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "retic" / "fixtures"


def write(name, kind, labels, ops, names=(), header=""):
    lines = [f"# {header}"] if header else []
    lines += [f"kind: {kind}", f"name: {name}", "elements: " + " ".join(labels)]
    n = len(labels)
    for op, k, fn in ops:
        lines.append(f"op {op}/{k}:")
        if k == 0:
            lines.append("  " + fn())
        elif k == 1:
            lines.append("  " + " ".join(fn(x) for x in labels))
        else:
            for prefix in itertools.product(labels, repeat=k - 1):
                lines.append("  " + " ".join(fn(*prefix, y) for y in labels))
    if names:
        lines.append("names:")
        for nm, blocks in names:
            lines.append(f"  {nm} = {blocks}")
    (OUT / f"{name}.alg").write_text("\n".join(lines) + "\n", encoding="utf-8")


def quaternion():
    # units as (sign, axis) with axis in 1,i,j,k
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    unit = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}
    val = {}
    for lab in labels:
        val[lab] = (-1, lab[1:]) if lab.startswith("-") else (1, lab)
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def name(s, a):
        return a if s == 1 else "-" + a

    def mul(x, y):
        sx, ax = val[x]
        sy, ay = val[y]
        s, a = table[(ax, ay)]
        return name(sx * sy * s, a)

    def inv(x):
        return next(y for y in labels if mul(x, y) == "1")

    write(
        "c8", "algebra", labels,
        [("mul", 2, mul), ("inv", 1, inv), ("e", 0, lambda: "1")],
        names=[
            ("<-1>", "1 -1 | i -i | j -j | k -k"),
            ("<i>", "1 -1 i -i | j -j k -k"),
            ("<j>", "1 -1 j -j | i -i k -k"),
            ("<k>", "1 -1 k -k | i -i j -j"),
        ],
        header="quaternion group; signature (mul, inv, e)",
    )


def symmetric3():
    perms = {
        "1": (1, 2, 3),
        "t": (2, 1, 3),  # (1 2)
        "u": (3, 2, 1),  # (1 3)
        "v": (1, 3, 2),  # (2 3)
        "c": (2, 3, 1),  # (1 2 3)
        "d": (3, 1, 2),  # c∘c
    }
    back = {p: k for k, p in perms.items()}
    labels = list(perms)

    def mul(x, y):
        # (x·y)(p) = x(y(p))
        px, py = perms[x], perms[y]
        return back[tuple(px[py[i] - 1] for i in range(3))]

    def inv(x):
        return next(y for y in labels if mul(x, y) == "1")

    write(
        "s3", "algebra", labels,
        [("mul", 2, mul), ("inv", 1, inv), ("e", 0, lambda: "1")],
        names=[("A3", "1 c d | t u v")],
        header="symmetric group on {1,2,3}; t=(1 2) u=(1 3) v=(2 3) c=(1 2 3) d=c·c; (x·y)(p) = x(y(p))",
    )


def lattice(name, labels, covers, names=(), header=""):
    leq = {(a, a) for a in labels} | set(covers)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True

    def join(x, y):
        ub = [z for z in labels if (x, z) in leq and (y, z) in leq]
        return next(z for z in ub if all((z, w) in leq for w in ub))

    def meet(x, y):
        lb = [z for z in labels if (z, x) in leq and (z, y) in leq]
        return next(z for z in lb if all((w, z) in leq for w in lb))

    bottom = next(z for z in labels if all((z, w) in leq for w in labels))
    top = next(z for z in labels if all((w, z) in leq for w in labels))
    write(
        name, "algebra", labels,
        [("join", 2, join), ("meet", 2, meet), ("0", 0, lambda: bottom), ("1", 0, lambda: top)],
        names=names,
        header=header or "bounded lattice; signature (join, meet, 0, 1)",
    )


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    quaternion()
    symmetric3()
    lattice(
        "lattice-e", ["0", "a", "x", "y", "b", "1"],
        [("0", "a"), ("a", "1"), ("0", "b"), ("b", "1"), ("0", "x"), ("x", "y"), ("y", "1")],
        names=[("mu", "x y")],
        header="bounded lattice E: 0<a<1, 0<b<1, 0<x<y<1",
    )
    lattice(
        "lattice-p", ["0", "a", "x", "y", "1"],
        [("0", "a"), ("a", "1"), ("0", "x"), ("x", "y"), ("y", "1")],
        names=[("alpha", "0 x y | a 1"), ("beta", "0 a | x y 1"), ("gamma", "x y")],
        header="bounded lattice P (pentagon): 0<a<1, 0<x<y<1",
    )
    lattice(
        "lattice-d", ["0", "a", "x", "b", "1"],
        [("0", "a"), ("a", "1"), ("0", "x"), ("x", "1"), ("0", "b"), ("b", "1")],
        header="bounded lattice D (diamond): three atoms a, x, b",
    )
    lattice("chain-2", ["0", "1"], [("0", "1")], header="two-element chain")
    lattice("chain-3", ["0", "x", "1"], [("0", "x"), ("x", "1")], header="three-element chain")
    lattice("chain-4", ["0", "x", "y", "1"], [("0", "x"), ("x", "y"), ("y", "1")], header="four-element chain L4")


if __name__ == "__main__":
    main()
