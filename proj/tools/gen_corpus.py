#!/usr/bin/env python3
"""Generate the base triangulations of the corpus as .tri files.

Lens spaces L(p, 1) are built as the Z_p quotient of the join of two (k p)-gons under
(z, w) -> (zeta z, zeta w), followed by barycentric subdivision of the quotient cell complex.
Every tetrahedron of the quotient has four vertices in distinct orbits, so the quotient is a
regular cell complex and its subdivision (the order complex of the face poset) is simplicial.
Bistellar moves then shrink the result. Products are produced by `polygonkit product`.
"""

import argparse
import itertools
import random
import sys
from collections import defaultdict
from pathlib import Path


def lens_space(p, k=2):
    n = k * p

    def act(cell, g):
        return frozenset((side, (i + g * k) % n) for side, i in cell)

    def orbit_key(cell):
        return min(tuple(sorted(act(cell, g))) for g in range(p))

    tets = set()
    for i in range(n):
        for j in range(n):
            tet = frozenset({("a", i), ("a", (i + 1) % n), ("b", j), ("b", (j + 1) % n)})
            tets.add(orbit_key(tet))
    ids = {}
    facets = set()
    for rep in sorted(tets):
        verts = list(rep)
        for perm in itertools.permutations(verts):
            chain = []
            for size in range(1, 5):
                key = orbit_key(frozenset(perm[:size]))
                chain.append(ids.setdefault(key, len(ids) + 1))
            facet = tuple(sorted(chain))
            if facet in facets:
                raise RuntimeError("subdivision repeats a facet")
            facets.add(facet)
    return sorted(facets)


def rp2():
    return [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
            (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)]


def sphere(d):
    verts = range(1, d + 3)
    return [tuple(v for v in verts if v != skip) for skip in reversed(verts)]


def faces_of(facets, size):
    out = set()
    for f in facets:
        out.update(itertools.combinations(f, size))
    return out


def is_closed_pseudomanifold(facets):
    count = defaultdict(int)
    for f in facets:
        for r in itertools.combinations(f, len(f) - 1):
            count[r] += 1
    return all(c == 2 for c in count.values())


def euler(facets):
    d = len(facets[0])
    return sum((-1) ** (k - 1) * len(faces_of(facets, k)) for k in range(1, d + 1))


def rank_mod(rows, p):
    """Rank of a sparse matrix (list of {col: value}) over F_p."""
    pivots = {}
    rank = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                rank += 1
                break
            factor = row[c]
            for k, v in pivots[c].items():
                row[k] = (row.get(k, 0) - factor * v) % p
                if row[k] == 0:
                    del row[k]
    return rank


def boundary_rank(facets, k, p):
    """Rank of the boundary map from k-vertex faces to (k-1)-vertex faces over F_p."""
    lower = {f: i for i, f in enumerate(sorted(faces_of(facets, k - 1)))}
    rows = []
    for f in sorted(faces_of(facets, k)):
        rows.append({lower[f[:j] + f[j + 1:]]: (-1) ** j for j in range(k)})
    return rank_mod(rows, p)


def betti1(facets, p):
    return len(faces_of(facets, 2)) - boundary_rank(facets, 2, p) - boundary_rank(facets, 3, p)


def orientation(facets):
    """Signs making induced ridge orientations cancel, or None if non-orientable."""
    by_ridge = defaultdict(list)
    for idx, f in enumerate(facets):
        for j in range(len(f)):
            by_ridge[f[:j] + f[j + 1:]].append((idx, (-1) ** j))
    signs = [0] * len(facets)
    for start in range(len(facets)):
        if signs[start]:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            f = facets[i]
            for j in range(len(f)):
                (a, sa), (b, sb) = by_ridge[f[:j] + f[j + 1:]]
                if a != i:
                    (a, sa), (b, sb) = (b, sb), (a, sa)
                want = -signs[i] * sa * sb
                if signs[b] == 0:
                    signs[b] = want
                    stack.append(b)
                elif signs[b] != want:
                    return None
    return signs


def relabel(facets):
    verts = sorted({v for f in facets for v in f})
    m = {v: i + 1 for i, v in enumerate(verts)}
    return sorted(tuple(sorted(m[v] for v in f)) for f in facets)


def simplify3(facets, rng, budget=4000):
    """Shrink a 3-manifold triangulation with bistellar moves (4-1 and 3-2 greedily, 2-3 to escape)."""
    cur = {frozenset(f) for f in facets}

    def star(s):
        return [f for f in cur if s <= f]

    def has_face(s):
        return any(s <= f for f in cur)

    def reduce_once():
        verts = sorted({v for f in cur for v in f})
        rng.shuffle(verts)
        for v in verts:
            st = star({v})
            if len(st) == 4:
                top = frozenset(set().union(*st) - {v})
                if top not in cur:
                    cur.difference_update(st)
                    cur.add(top)
                    return True
        edges = list({frozenset(e) for f in cur for e in itertools.combinations(sorted(f), 2)})
        rng.shuffle(edges)
        for e in edges:
            st = star(e)
            if len(st) == 3:
                tri = frozenset(set().union(*st) - e)
                if not has_face(tri):
                    cur.difference_update(st)
                    u, v = sorted(e)
                    cur.add(tri | {u})
                    cur.add(tri | {v})
                    return True
        return False

    best = set(cur)
    for _ in range(budget):
        while reduce_once():
            pass
        if len(cur) < len(best):
            best = set(cur)
        tris = list({frozenset(t) for f in cur for t in itertools.combinations(sorted(f), 3)})
        rng.shuffle(tris)
        for t in tris:
            st = star(t)
            u, v = [next(iter(f - t)) for f in st]
            if not has_face(frozenset({u, v})):
                cur.difference_update(st)
                for e in itertools.combinations(sorted(t), 2):
                    cur.add(frozenset(e) | {u, v})
                break
        if len(cur) > len(best) + 24:
            cur = set(best)
    return relabel([tuple(sorted(f)) for f in best])


def write_tri(path, facets, comment, oriented):
    d = len(facets[0]) - 1
    lines = [f"# {comment}", f"dim={d}"]
    signs = orientation(facets) if oriented else None
    if oriented and signs is None:
        raise RuntimeError(f"{path}: not orientable")
    if signs is not None:
        lines.append("oriented=true")
    for i, f in enumerate(facets):
        body = " ".join(map(str, f))
        lines.append(f"{body} {'+1' if signs[i] > 0 else '-1'}" if signs is not None else body)
    Path(path).write_text("\n".join(lines) + "\n")


def check3(name, facets, torsion_prime):
    assert is_closed_pseudomanifold(facets), name
    assert euler(facets) == 0, name
    for q in (2, 3, 5):
        b1 = betti1(facets, q)
        expected = 1 if q == torsion_prime else 0
        if b1 != expected:
            raise RuntimeError(f"{name}: b1 over F_{q} is {b1}, expected {expected}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "corpus"))
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--budget", type=int, default=2000)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)

    write_tri(out / "s1.tri", sphere(1), "S1, boundary of a triangle", True)
    write_tri(out / "s2.tri", sphere(2), "S2, boundary of the 3-simplex", True)
    write_tri(out / "s3.tri", sphere(3), "S3, boundary of the 4-simplex", True)
    assert is_closed_pseudomanifold(rp2()) and euler(rp2()) == 1 and orientation(rp2()) is None
    write_tri(out / "rp2.tri", rp2(), "RP2, six vertices", False)

    for p, name, label in ((2, "rp3", "RP3 = L(2,1)"), (3, "l31", "L(3,1)"), (4, "l41", "L(4,1)")):
        raw = relabel(lens_space(p))
        check3(label, raw, 2 if p in (2, 4) else p)
        small = simplify3(raw, rng, args.budget)
        check3(label, small, 2 if p in (2, 4) else p)
        verts = len({v for f in small for v in f})
        write_tri(out / f"{name}.tri", small,
                  f"{label}, join quotient subdivided then bistellar-reduced ({verts} vertices, {len(small)} facets)", True)
        print(f"{name}: {len(raw)} -> {len(small)} facets, {verts} vertices", file=sys.stderr)
        if p == 2:
            write_tri(out / "rp3_sd.tri", raw,
                      f"{label}, subdivided join quotient ({len(raw)} facets)", True)


if __name__ == "__main__":
    main()
