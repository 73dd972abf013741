"""Delta-system verdicts, chi identity and W-decompositions for
test_potential.cpp.  Decompositions are found by an undetermined-coefficient
solve in sympy."""
import itertools
import sympy as sp
from hdiff_oracle import Field


def in_W(F, f):
    n = F.n
    return all(F.delta(F.delta(F.hij(i, j) * f, j), i) == 0 for i in range(n) for j in range(i + 1, n))


def decompose(F, f, pivot, deg):
    n = F.n
    unknowns, basis, labels = [], [], []
    for k in range(n):
        if k == pivot:
            continue
        for d in range(deg + 1):
            a = sp.Symbol(f"a_{k}_{d}")
            unknowns.append(a)
            basis.append(F.h[k] ** d / F.chi(k))
            labels.append(("part", k, d))
    for L in range(deg + 1):
        a = sp.Symbol(f"c_{L}")
        unknowns.append(a)
        basis.append(F.H(L))
        labels.append(("H", L))
    hs = [sp.Symbol(f"h{k+1}") for k in range(n)]
    expr = sum(u * b.as_expr() for u, b in zip(unknowns, basis)) - F.K(f).as_expr()
    num = sp.numer(sp.together(expr))
    eqs = sp.Poly(sp.expand(num), *hs).coeffs()
    sol = sp.solve(eqs, unknowns, dict=True)
    if not sol:
        return None
    sol = {u: sol[0].get(u, 0).subs({v: 0 for v in unknowns}) for u in unknowns}
    parts, sym = {}, {}
    for u, lab in zip(unknowns, labels):
        v = sol[u]
        if v == 0:
            continue
        if lab[0] == "part":
            parts.setdefault(lab[1] + 1, {})[lab[2]] = v
        else:
            sym[lab[1]] = v
    return parts, sym


if __name__ == "__main__":
    for n in (1, 2, 3, 4, 5):
        F = Field(n)
        for L in range(9):
            s = sum((F.h[j] ** L / F.chi(j) for j in range(n)), F.K(0))
            want = F.K(0) if L <= n - 2 else F.H(L - n + 1)
            assert s == want, (n, L)
    print("chi identity holds for n<=5, L<=8")

    F2, F3 = Field(2), Field(3)
    samples = [
        (F2, "h1*h2^2", F2.h[0] * F2.h[1] ** 2),
        (F2, "h1^3/chi(1)", F2.h[0] ** 3 / F2.chi(0)),
        (F2, "1/(h1-h2+1)", 1 / (F2.hij(0, 1) + 1)),
        (F3, "h2^2/chi(2) + H(3)", F3.h[1] ** 2 / F3.chi(1) + F3.H(3)),
        (F3, "h1*h2", F3.h[0] * F3.h[1]),
        (F3, "e(2)", F3.e(2)),
        (F3, "1/((h1-h2)*(h2-h3))", 1 / (F3.hij(0, 1) * F3.hij(1, 2))),
    ]
    for F, label, f in samples:
        print(f"n={F.n} {label}: in_W={in_W(F, f)}")

    for F, label, f, pivot in [
        (F2, "h1^3/chi(1)", F2.h[0] ** 3 / F2.chi(0), 0),
        (F3, "h2^2/chi(2) + H(3)", F3.h[1] ** 2 / F3.chi(1) + F3.H(3), 1),
        (F3, "h2^2/chi(2) + H(3)", F3.h[1] ** 2 / F3.chi(1) + F3.H(3), 0),
        (F3, "(2*h1^4 - h1)/chi(1) + 3*h3/chi(3)", (2 * F3.h[0] ** 4 - F3.h[0]) / F3.chi(0) + 3 * F3.h[2] / F3.chi(2), 2),
    ]:
        print(f"n={F.n} pivot={pivot+1} {label}: {decompose(F, f, pivot, 6)}")

    for n in (2, 3):
        F = Field(n)
        az = [-F.h[i] - sum(F.h, F.K(0)) + 1 for i in range(n)]
        print(f"n={n} sigma_AZ = Delta(-H2)? {all(F.delta(-F.H(2), i) == az[i] for i in range(n))}")
        print(f"n={n} ones = Delta(H1)? {all(F.delta(F.H(1), i) == 1 for i in range(n))}")
