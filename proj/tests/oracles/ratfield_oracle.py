"""Frozen arithmetic, shift, finite-difference and partial-fraction values for
test_ratfield.cpp."""
import sympy as sp

h1, h2, h3 = sp.symbols("h1 h2 h3")


def txt(e):
    e = sp.factor(sp.cancel(sp.together(e)))
    n, d = sp.fraction(e)
    s = str(sp.expand(n)).replace("**", "^")
    if d == 1:
        return s
    return f"({s})/({str(d).replace('**', '^')})"


print("prod:", txt((h1 - h2 + 1) / (h1 - h2) * (h1 - h2) / (h1 - h2 - 1)))
print("sum:", txt(1 / (h1 - h2) + 1 / (h1 - h2 + 1)))
print("shift e1 of 1/(h1-h2):", txt((1 / (h1 - h2)).subs(h1, h1 + 1)))
print("shift -e of h1*h2/(h1-h3):", txt((h1 * h2 / (h1 - h3)).subs({h1: h1 - 1, h2: h2 - 1, h3: h3 - 1}, simultaneous=True)))
f = h1 ** 2 / (h1 - h2)
print("delta1 of h1^2/(h1-h2):", txt(f - f.subs(h1, h1 - 1)))
print("delta2 of h1^2/(h1-h2):", txt(f - f.subs(h2, h2 - 1)))
print("inverse of 3*(h1-h2)*(h2-h3+2):", txt(1 / (3 * (h1 - h2) * (h2 - h3 + 2))))
g = (h1 ** 3 + h2) / ((h1 - h2) ** 2 * (h1 - h3 + 1))
print("eval g at (1/2, 3, -2):", g.subs({h1: sp.Rational(1, 2), h2: 3, h3: -2}))
# partial fractions in h1: u / (h1 - hk - a)^nu
ap = sp.apart(g, h1)
print("apart g in h1:", ap)
# residues by the standard formulas
X = h1 - h2
u2 = sp.cancel((g * X ** 2).subs(h1, h2))
u1 = sp.cancel(sp.diff(g * X ** 2, h1).subs(h1, h2))
Y = h1 - h3 + 1
v1 = sp.cancel((g * Y).subs(h1, h3 - 1))
reg = sp.cancel(g - u2 / X ** 2 - u1 / X - v1 / Y)
print("pf k=2 a=0 nu=1:", txt(u1))
print("pf k=2 a=0 nu=2:", txt(u2))
print("pf k=3 a=-1 nu=1:", txt(v1))
print("pf regular:", txt(reg))
