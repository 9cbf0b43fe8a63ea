#!/usr/bin/env python3
"""Writes the complex fixtures under data/ in the turnkit-complex record format."""

import itertools
import json
import pathlib
import sys

OUT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data")


def write(name, record):
    record = {"format": "turnkit-complex", "version": 1, "name": name, **record}
    (OUT / f"{name}.json").write_text(json.dumps(record, separators=(",", ":")) + "\n")


def cells(name, counts, boundary=None, sq2=None):
    rec = {"cells": counts, "boundary": boundary or {}}
    if sq2:
        rec["sq2"] = sq2
    write(name, rec)


def simplicial(name, facets):
    write(name, {"simplices": [sorted(f) for f in facets]})


def sphere_boundary(n):
    """Boundary of the n-simplex, an (n-1)-sphere on n + 1 vertices."""
    return [list(f) for f in itertools.combinations(range(n + 1), n)]


def product(k, l):
    nl = 1 + max(max(f) for f in l)
    out = []
    for f in k:
        for g in l:
            p, q = len(f) - 1, len(g) - 1
            for moves in itertools.combinations(range(p + q), p):
                i = j = 0
                simplex = [f[0] * nl + g[0]]
                for step in range(p + q):
                    if step in moves:
                        i += 1
                    else:
                        j += 1
                    simplex.append(f[i] * nl + g[j])
                out.append(simplex)
    return out


def rp4():
    """Antipodal quotient of the barycentric subdivision of the 5-dimensional cross-polytope boundary."""
    verts = [(i, s) for i in range(5) for s in (1, -1)]
    faces = []
    for size in range(1, 6):
        for f in itertools.combinations(verts, size):
            if len({i for i, _ in f}) == size:
                faces.append(frozenset(f))

    def neg(f):
        return frozenset((i, -s) for i, s in f)

    def key(f):
        return (len(f), sorted(f))

    classes = sorted({min(f, neg(f), key=key) for f in faces}, key=key)
    ids = {}
    for n, c in enumerate(classes):
        ids[c] = n
        ids[neg(c)] = n
    top = [f for f in faces if len(f) == 5]
    facets = set()
    for f in top:
        for order in itertools.permutations(sorted(f)):
            chain = [frozenset(order[: m + 1]) for m in range(5)]
            facets.add(tuple(sorted(ids[c] for c in chain)))
    return sorted(facets)


CP2_9 = [
    (0, 1, 2, 3, 4), (0, 1, 2, 3, 7), (0, 1, 2, 4, 5), (0, 1, 2, 5, 6), (0, 1, 2, 6, 7), (0, 1, 3, 4, 5),
    (0, 1, 3, 5, 7), (0, 1, 5, 6, 8), (0, 1, 5, 7, 8), (0, 1, 6, 7, 8), (0, 2, 3, 4, 8), (0, 2, 3, 7, 8),
    (0, 2, 4, 5, 6), (0, 2, 4, 6, 7), (0, 2, 4, 7, 8), (0, 3, 4, 5, 6), (0, 3, 4, 6, 8), (0, 3, 5, 6, 8),
    (0, 3, 5, 7, 8), (0, 4, 6, 7, 8), (1, 2, 3, 4, 8), (1, 2, 3, 6, 7), (1, 2, 3, 6, 8), (1, 2, 4, 5, 8),
    (1, 2, 5, 6, 8), (1, 3, 4, 5, 7), (1, 3, 4, 6, 7), (1, 3, 4, 6, 8), (1, 4, 5, 7, 8), (1, 4, 6, 7, 8),
    (2, 3, 5, 6, 7), (2, 3, 5, 6, 8), (2, 3, 5, 7, 8), (2, 4, 5, 6, 7), (2, 4, 5, 7, 8), (3, 4, 5, 6, 7),
]

RP2_6 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]

TORUS_7 = [tuple(sorted((i % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)] + [
    tuple(sorted((i % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)
]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    cells("rp2_cells", [1, 1, 1], {"2": [[2]]})
    cells("rp3_cells", [1, 1, 1, 1], {"2": [[2]]})
    cells("s4_cells", [1, 0, 0, 0, 1])
    cells("s8_cells", [1, 0, 0, 0, 0, 0, 0, 0, 1])
    cells("cp3_cells", [1, 0, 1, 0, 1, 0, 1])
    for l in range(1, 5):
        cells(f"m{l}_cells", [1, 0, 0, 0, 2 * l, 0, 0, 0, 1])
    cells("moore_s7_2_cells", [1, 0, 0, 0, 0, 0, 0, 1, 1], {"8": [[2]]})
    # CP^2 x S^2 with cells z, s in degree 2; z^2, zs in degree 4; z^2 s in degree 6.
    cells("cp2xs2_cells", [1, 0, 2, 0, 2, 0, 1], sq2={"2": [[1, 0], [0, 0]], "4": [[0, 1]]})

    s2 = sphere_boundary(3)
    simplicial("rp2_6", RP2_6)
    simplicial("torus_7", TORUS_7)
    simplicial("s2_4", s2)
    simplicial("s6_8", sphere_boundary(7))
    simplicial("cp2_9", CP2_9)
    simplicial("cp2xs2", product(CP2_9, s2))
    simplicial("rp4_121", rp4())


if __name__ == "__main__":
    main()
