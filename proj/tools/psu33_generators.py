#!/usr/bin/env python3
"""Print degree-28 permutation generators of PSU(3,3) as a perm:[...] spec.

SU(3,3) acts on the 28 isotropic points of PG(2,9) for the hermitian form
x1*y3^3 + x2*y2^3 + x3*y1^3. Its centre is trivial, so the action is
faithful and the image has order 6048. The upper and lower unitriangular
unitary matrices generate the group.
"""

import itertools
import sys

# GF(9) = GF(3)[i] / (i^2 + 1), stored as pairs (a, b) meaning a + b*i.
F = [(a, b) for a in range(3) for b in range(3)]
ZERO, ONE = (0, 0), (1, 0)


def add(x, y):
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)


def mul(x, y):
    return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)


def conj(x):
    return (x[0], (-x[1]) % 3)


def form(x, y):
    s = ZERO
    for i in range(3):
        s = add(s, mul(x[i], conj(y[2 - i])))
    return s


def apply(m, v):
    return tuple(
        add(add(mul(v[0], m[0][j]), mul(v[1], m[1][j])), mul(v[2], m[2][j])) for j in range(3)
    )


def normalise(v):
    for c in v:
        if c != ZERO:
            inv = next(y for y in F if mul(c, y) == ONE)
            return tuple(mul(inv, x) for x in v)
    raise ValueError("zero vector")


def is_unitary(m):
    basis = [tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3)]
    images = [apply(m, e) for e in basis]
    return all(form(images[a], images[b]) == form(basis[a], basis[b])
               for a in range(3) for b in range(3))


def main():
    points = sorted({normalise(v) for v in itertools.product(F, repeat=3)
                     if v != (ZERO,) * 3 and form(v, v) == ZERO})
    assert len(points) == 28, len(points)
    index = {p: i for i, p in enumerate(points)}

    gens = []
    for a, b, c in itertools.product(F, repeat=3):
        upper = ((ONE, a, b), (ZERO, ONE, c), (ZERO, ZERO, ONE))
        lower = ((ONE, ZERO, ZERO), (a, ONE, ZERO), (b, c, ONE))
        for m in (upper, lower):
            if (a, b, c) != (ZERO, ZERO, ZERO) and is_unitary(m):
                gens.append([index[normalise(apply(m, p))] for p in points])

    # keep a small generating subset: greedy by closure size
    def closure(perms):
        seen = {tuple(range(28))}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in perms:
                    y = tuple(g[x[k]] for k in range(28))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen)

    chosen = []
    size = 1
    for g in gens:
        s = closure(chosen + [g])
        if s > size:
            chosen.append(g)
            size = s
        if size == 6048:
            break
    assert size == 6048, size

    def cycles(p):
        out, done = [], set()
        for s in range(28):
            if s in done or p[s] == s:
                continue
            cyc, x = [], s
            while x not in done:
                done.add(x)
                cyc.append(x + 1)
                x = p[x]
            out.append("(" + ",".join(map(str, cyc)) + ")")
        return "".join(out)

    sys.stdout.write("perm:[" + ";".join(cycles(g) for g in chosen) + "]\n")


if __name__ == "__main__":
    main()
