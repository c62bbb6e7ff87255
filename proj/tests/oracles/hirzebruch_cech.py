#!/usr/bin/env python3
"""dim H^1(F_a, T) for Hirzebruch surfaces from toric Cech cohomology.

The fan of F_a has rays (1,0), (0,1), (-1,a), (0,-1) and four maximal cones.
For a torus-invariant divisor D = sum d_r D_r the Cech complex of O(D) on the
affine cover splits by characters m; each graded piece is a complex of
0/1-dimensional spaces whose cohomology is computed with exact ranks.

The generalized Euler sequence 0 -> O^2 -> sum O(D_r) -> T -> 0 and
H^1(O) = H^2(O) = 0 (checked here too) give h^1(T) = sum_r h^1(O(D_r)) as long
as h^2(O(D_r)) vanishes, which is also checked.
"""

import argparse
import itertools
import json
import sys
from fractions import Fraction


def rays(a):
    return [(1, 0), (0, 1), (-1, a), (0, -1)]


def maximal_cones():
    return [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 0})]


def rank(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m or not m[0]:
        return 0
    r = 0
    cols = len(m[0])
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def has_section(face, m, d, vs):
    # chi^m is a section of O(D) on U_face iff <m, v_r> >= -d_r for every ray r of the face
    return all(m[0] * vs[r][0] + m[1] * vs[r][1] >= -d[r] for r in face)


def cech_dims(a, d, box):
    vs = rays(a)
    cones = maximal_cones()
    n = len(cones)
    simplices = [list(itertools.combinations(range(n), p + 1)) for p in range(n)]

    def face(s):
        f = cones[s[0]]
        for i in s[1:]:
            f = f & cones[i]
        return f

    total = [0] * 3
    for m in itertools.product(range(-box, box + 1), repeat=2):
        live = [[s for s in simplices[p] if has_section(face(s), m, d, vs)] for p in range(n)]
        ranks = []
        for p in range(n - 1):
            src, dst = live[p], live[p + 1]
            mat = [[0] * len(src) for _ in dst]
            for i, t in enumerate(dst):
                for k in range(len(t)):
                    s = t[:k] + t[k + 1:]
                    if s in src:
                        mat[i][src.index(s)] = (-1) ** k
            ranks.append(rank(mat))
        for p in range(3):
            dim = len(live[p])
            out = ranks[p] if p < len(ranks) else 0
            inc = ranks[p - 1] if p > 0 else 0
            total[p] += dim - out - inc
    return total


def h1_tangent(a):
    box = abs(a) + 4
    zero = cech_dims(a, [0, 0, 0, 0], box)
    if zero != [1, 0, 0]:
        raise RuntimeError(f"F_{a}: structure sheaf cohomology {zero}, expected [1, 0, 0]")
    h1 = 0
    for r in range(4):
        d = [0, 0, 0, 0]
        d[r] = 1
        h = cech_dims(a, d, box)
        if h[2] != 0:
            raise RuntimeError(f"F_{a}: h^2(O(D_{r + 1})) = {h[2]}")
        h1 += h[1]
    return h1


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--a", type=int, nargs="+", required=True, help="Hirzebruch parameters")
    p.add_argument("--out", help="write {a: h1} as JSON here instead of stdout")
    args = p.parse_args(argv)
    result = {str(a): h1_tangent(a) for a in args.a}
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
