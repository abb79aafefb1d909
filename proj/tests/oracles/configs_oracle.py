"""Independent oracle for collinear triples over Q(zeta_m) using sympy.

Elements are sympy polynomials in z reduced modulo cyclotomic_poly(m, z).
"""
import itertools
import sys
from sympy import symbols, cyclotomic_poly, rem, expand, Poly, QQ

z = symbols("z")


def det3(p, q, r, phi):
    a = [p, q, r]
    d = 0
    for perm in itertools.permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
        t = sign
        for i in range(3):
            t = t * a[i][perm[i]]
        d += t
    return rem(expand(d), phi, z)


def fermat(m):
    phi = cyclotomic_poly(m, z)
    pts = [(1, z ** a, z ** b) for a in range(1, m + 1) for b in range(1, m + 1)]
    return pts, phi


def dual_hesse():
    e = z
    pts = [(e, e, 1), (1, e, 1), (e**2, e, 1), (e, 1, 1), (1, 1, 1), (e**2, 1, 1),
           (e, e**2, 1), (1, e**2, 1), (e**2, e**2, 1)]
    return pts, cyclotomic_poly(3, z)


def triples(pts, phi):
    out = []
    for t in itertools.combinations(range(len(pts)), 3):
        if det3(pts[t[0]], pts[t[1]], pts[t[2]], phi) == 0:
            out.append(tuple(i + 1 for i in t))
    return out


def group_triples(m):
    el = [(a, b) for b in range(m) for a in range(m)]
    out = []
    for t in itertools.combinations(range(len(el)), 3):
        if all(sum(el[i][c] for i in t) % m == 0 for c in range(2)):
            out.append(tuple(i + 1 for i in t))
    return out


if __name__ == "__main__":
    pts, phi = dual_hesse()
    print("dual_hesse", triples(pts, phi))
    print("det Q1 Q6 Q8", det3(pts[0], pts[5], pts[7], phi))
    for m in (1, 2, 3, 4):
        pts, phi = fermat(m)
        t = triples(pts, phi)
        print("fermat", m, len(t), t if len(t) < 40 else "")
    for m in (2, 3, 4, 5):
        print("torsion", m, len(group_triples(m)))
