"""rho(t), central elements and central characters for test_central.cpp and
test_lowestweight.cpp.

rho is built from the W-decomposition of the potential: a part pi(h_k)/chi_k
contributes e(t)/(1 + h_k t) pi(h_k)/chi_k, a symmetric H_L contributes
sum_j e(t)/(1 + h_j t) h_j^(L+n-1)/chi_j.  The character on |0> is computed
by inverting the weight-zero block of the x d relations, independently of Psi.
"""
import sympy as sp
from hdiff_oracle import Field, Ring

t = sp.Symbol("t")


def e_without(F, j):
    p = sp.Integer(1)
    for m in range(F.n):
        if m != j:
            p *= 1 + sp.Symbol(f"h{m+1}") * t
    return sp.Poly(sp.expand(p), t)


def coeff(F, poly, k):
    return F.K(sp.sympify(poly.coeff_monomial(t ** k)))


def rho(F, parts, sym):
    """parts: {k: [pi_0, pi_1, ...]}, sym: {L: c}"""
    n = F.n
    out = [F.K(0)] * n
    for k, pi in parts.items():
        w = sum((c * F.h[k] ** d for d, c in enumerate(pi)), F.K(0)) / F.chi(k)
        e = e_without(F, k)
        for a in range(n):
            out[a] += coeff(F, e, a) * w
    for L, c in sym.items():
        for j in range(n):
            e = e_without(F, j)
            w = c * F.h[j] ** (L + n - 1) / F.chi(j)
            for a in range(n):
                out[a] += coeff(F, e, a) * w
    return out


def potential(F, parts, sym):
    f = F.K(0)
    for k, pi in parts.items():
        f += sum((c * F.h[k] ** d for d, c in enumerate(pi)), F.K(0)) / F.chi(k)
    for L, c in sym.items():
        f += c * F.H(L)
    return f


def check_rho(F, r, sigma):
    for j in range(F.n):
        e = e_without(F, j)
        for a in range(F.n):
            if F.delta(r[a], j) != coeff(F, e, a) * sigma[j]:
                return False
    return True


def character(F, r, sigma, lam):
    n = F.n
    at = lambda f: F.value(f, lam)
    A = sp.Matrix(n, n, lambda i, j: 1 if i == j else at(1 / (1 - F.hij(i, j))))
    s = sp.Matrix([at(x) for x in sigma])
    dx = A.inv() * s  # d_j x^j |0>
    action = []
    for k in range(n):
        v = sum(at(coeff(F, e_without(F, j), k)) * dx[j] for j in range(n)) - at(r[k])
        action.append(sp.nsimplify(v))
    predicted = [-F.value(r[k], [x - 1 for x in lam]) for k in range(n)]
    return action, predicted, list(dx)


def central_ok(F, r, sigma):
    R = Ring(F, sigma)
    n = F.n
    cs = []
    for k in range(n):
        c = {}
        for i in range(n):
            a = coeff(F, e_without(F, i), k)
            if a != 0:
                c = R.add(c, R.mul(R.scalar(a), R.nf((("d", i), ("x", i)))))
        c = R.add(c, R.scalar(r[k]), -1)
        cs.append(c)
    for c in cs:
        for i in range(n):
            for g in (R.gen("x", i), R.gen("d", i), R.scalar(F.h[i])):
                if R.add(R.mul(c, g), R.mul(g, c), -1):
                    return False
    return True


CASES = {
    "0": ({}, {}),
    "H1": ({}, {1: 1}),
    "-H2": ({}, {2: -1}),
    "invchi1": ({0: [1]}, {}),
}

if __name__ == "__main__":
    for n in (1, 2, 3):
        F = Field(n)
        lam = [sp.Rational(i * (n + 2), n + 1) for i in range(1, n + 1)]
        for name, (parts, sym) in CASES.items():
            if n == 1 and parts:
                continue
            f = potential(F, parts, sym)
            sigma = [F.delta(f, j) for j in range(n)]
            r = rho(F, parts, sym)
            act, pred, dx = character(F, r, sigma, lam)
            print(f"n={n} sigma={name} rho_ok={check_rho(F, r, sigma)} central_ok={central_ok(F, r, sigma)}")
            for k in range(n):
                print(f"  rho_{k} = {F.text(r[k])}")
            print(f"  lambda={lam} action={act} predicted={pred}")
            print(f"  d_j x^j |0> = {dx}")
