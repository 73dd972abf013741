"""Independent sympy oracle for the dynamical R-matrix identities.

Computes the identities by brute-force symbolic expansion; the C++ tests
freeze the verdicts/values printed here.
"""
import itertools
import sys
import sympy as sp


def make(n):
    h = sp.symbols(f"h1:{n+1}")

    def hij(i, j):
        return h[i] - h[j]

    def shift(f, s):
        return f.subs({h[k]: h[k] + s[k] for k in range(n)}, simultaneous=True)

    def eps(k, sign=1):
        v = [0] * n
        v[k] = sign
        return v

    def R(i, j, k, l):
        if (k, l) == (i, j) and i != j:
            return 1 / hij(i, j)
        if (k, l) == (j, i):
            if i < j:
                return (hij(i, j) ** 2 - 1) / hij(i, j) ** 2
            return sp.Integer(1)
        return sp.Integer(0)

    def chi(i):
        p = sp.Integer(1)
        for k in range(n):
            if k != i:
                p *= hij(i, k)
        return p

    def Qp(i):
        return shift(chi(i), eps(i)) / chi(i)

    def Qm(i):
        return shift(chi(i), eps(i, -1)) / chi(i)

    def Psi(i, j, k, l):
        if (k, l) == (i, j) and i != j:
            return Qp(i) * Qm(j) / (hij(i, j) + 1)
        if (k, l) == (j, i):
            if i < j:
                return sp.Integer(1)
            if i > j:
                return (hij(i, j) - 1) ** 2 / (hij(i, j) * (hij(i, j) - 2))
            # i == j: diagonal component
            return Qp(i) * Qm(i)
        return sp.Integer(0)

    return h, R, Psi, shift, eps, Qp, Qm, chi


def dybe(n):
    h, R, Psi, shift, eps, *_ = make(n)
    rng = range(n)
    fails = 0
    for i, j, k, m, nn, r in itertools.product(rng, repeat=6):
        lhs = sum(R(i, j, a, b) * shift(R(b, k, u, r), eps(a, -1)) * R(a, u, m, nn)
                  for a in rng for b in rng for u in rng)
        rhs = sum(shift(R(j, k, a, b), eps(i, -1)) * R(i, a, m, u) * shift(R(u, b, nn, r), eps(m, -1))
                  for a in rng for b in rng for u in rng)
        if sp.simplify(lhs - rhs) != 0:
            fails += 1
    return fails


def skew(n):
    h, R, Psi, shift, eps, *_ = make(n)
    rng = range(n)
    fails = 0
    for i, j, m, nn in itertools.product(rng, repeat=4):
        s = sum(Psi(i, k, j, l) * shift(R(m, l, nn, k), eps(m)) for k in rng for l in rng)
        want = 1 if (i == nn and m == j) else 0
        if sp.simplify(s - want) != 0:
            fails += 1
    return fails


if __name__ == "__main__":
    for n in (1, 2):
        print("dybe", n, "fails", dybe(n))
    for n in (1, 2, 3):
        print("skew", n, "fails", skew(n))
    h, R, Psi, shift, eps, Qp, Qm, chi = make(2)
    print("Psi(2,1,2,1,2) =", sp.factor(Psi(0, 1, 0, 1)))
    print("Psi n=2 diag (1,1)", sp.factor(Psi(0, 0, 0, 0)))
