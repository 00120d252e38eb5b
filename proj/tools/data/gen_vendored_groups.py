#!/usr/bin/env python3
"""Regenerates the vendored permutation-group files under data/.

Run from the repository root:  python3 tools/data/gen_vendored_groups.py

Everything here is brute force and independent of the C++ library; the
library's test suite re-validates every file it produces (group orders,
transitivity, primitivity, and the designs the groups act on).
"""
import itertools
import os
import sys

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data")


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                r = tuple(g[p[i]] for i in range(degree))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def cycles(perm):
    out, done = [], set()
    for i in range(len(perm)):
        if i in done or perm[i] == i:
            continue
        c, j = [], i
        while j not in done:
            done.add(j)
            c.append(j + 1)
            j = perm[j]
        out.append("(" + ",".join(map(str, c)) + ")")
    return "".join(out) if out else "()"


def write_group(name, degree, gens, comment):
    path = os.path.join(DATA, name)
    with open(path, "w") as f:
        for line in comment:
            f.write("# " + line + "\n")
        f.write("degree %d\n" % degree)
        for g in gens:
            f.write(cycles(g) + "\n")
    print("wrote", path)


def cyclic_blocks(n, base):
    # point index r is residue r; the block set is the same under any shift of labels
    blocks = set()
    for s in range(n):
        blocks.add(frozenset(((b % n) + s) % n for b in base))
    return blocks


def automorphisms(n, blocks):
    """All permutations of range(n) mapping the block set onto itself (backtracking)."""
    found = []

    def rec(img, used):
        if len(img) == n:
            found.append(tuple(img))
            return
        for y in range(n):
            if y in used:
                continue
            img.append(y)
            mapping = dict(enumerate(img))
            ok = all(frozenset(mapping[x] for x in b) in blocks
                     for b in blocks if all(x in mapping for x in b))
            if ok:
                used.add(y)
                rec(img, used)
                used.discard(y)
            img.pop()

    rec([], set())
    return found


def pick_generators(degree, auts, first):
    target = len(auts)
    for g in sorted(auts):
        if len(closure([first, g], degree)) == target:
            return [first, g]
    raise SystemExit("no 2-generator set found")


def psl_on_cyclic_design(n, base, expected):
    blocks = cyclic_blocks(n, base)
    auts = automorphisms(n, blocks)
    assert len(auts) == expected, (n, len(auts))
    shift = tuple((i + 1) % n for i in range(n))
    return pick_generators(n, auts, shift)


# GF(4) = {0, 1, t, t+1} encoded 0, 1, 2, 3 with t^2 = t + 1.
def gf4_mul(a, b):
    if a == 0 or b == 0:
        return 0
    log = {1: 0, 2: 1, 3: 2}
    exp = [1, 2, 3]
    return exp[(log[a] + log[b]) % 3]


def gf4_add(a, b):
    return a ^ b


def gf4_conj(a):
    return gf4_mul(a, a)


def normalize(v):
    for x in v:
        if x:
            inv = {1: 1, 2: 3, 3: 2}[x]
            return tuple(gf4_mul(inv, y) for y in v)
    raise ValueError


def hermitian(u, w):
    s = 0
    for a, b in zip(u, w):
        s = gf4_add(s, gf4_mul(a, gf4_conj(b)))
    return s


def dot(row, col):
    s = 0
    for a, b in zip(row, col):
        s = gf4_add(s, gf4_mul(a, b))
    return s


def psu42_on_isotropic_points():
    points = sorted({normalize(v) for v in itertools.product(range(4), repeat=4)
                     if any(v) and hermitian(v, v) == 0})
    assert len(points) == 45
    index = {p: i for i, p in enumerate(points)}

    def act(matrix):
        img = []
        for p in points:
            w = tuple(
                dot(p, [matrix[r][c] for r in range(4)]) for c in range(4))
            img.append(index[normalize(w)])
        return tuple(img)

    swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    cycle4 = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]]
    diag = [[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    j_minus_i = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    gens = [act(m) for m in (swap, cycle4, diag, j_minus_i)]
    order = len(closure(gens, 45))
    assert order == 25920, order
    # reduce to two generators when possible, keeping the file short
    for a, b in itertools.combinations(gens, 2):
        if len(closure([a, b], 45)) == 25920:
            return points, [a, b]
    return points, gens


def main():
    os.makedirs(DATA, exist_ok=True)
    gens7 = psl_on_cyclic_design(7, [1, 2, 4], 168)
    write_group("psl2_7.grp", 7, gens7,
                ["PSL(2,7) = PSL(3,2) on the points of the Fano plane",
                 "lines are the translates of {1,2,4} mod 7"])
    gens11 = psl_on_cyclic_design(11, [1, 3, 4, 5, 9], 660)
    write_group("psl2_11.grp", 11, gens11,
                ["PSL(2,11) on the points of the (11,5,2) biplane",
                 "blocks are the translates of the quadratic residues {1,3,4,5,9} mod 11"])
    points, gens45 = psu42_on_isotropic_points()
    write_group("psu4_2_45.grp", 45, gens45,
                ["PSU(4,2) on the 45 isotropic points of the Hermitian surface in PG(3,4)",
                 "point i is the i-th normalized isotropic vector in lexicographic order"])
    base = [j + 1 for j, p in enumerate(points)
            if j != 0 and hermitian(points[0], p) == 0]
    assert len(base) == 12
    path = os.path.join(DATA, "unitary45_base.des")
    with open(path, "w") as f:
        f.write("# points of the Hermitian surface collinear with point 1 (excluding 1)\n")
        f.write("v 45\n")
        f.write(",".join(map(str, base)) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    sys.exit(main())
