"""The exact arithmetic the verification stands on.

Everything in this package reduces to three kernels: number-field towers
over arbitrary-precision rationals, dense polynomial arithmetic with
resultants, and truncated power series.  All of it is exact; nothing is
floating point.
"""

from sextic19.numberfield import (
    FieldElement, QQ, adjoin_root, build_tower, field_sqrt, generator,
    is_square, number_field,
)
from sextic19.polynomial import (
    UniPoly, discriminant, poly_gcd, resultant, squarefree_decomposition,
)
from sextic19.rationals import Rat
from sextic19.series import TruncatedSeries

# ---- number fields: a cubic field and a two-generator tower
F = number_field([-2, -2, 0, 1], "a")          # a^3 = 2a + 2
a = generator(F)
print("a^2 * a =", a**2 * a)                   # reduced mod the minimal poly
print("1/(1+a) =", 1 / (1 + a))

T = build_tower([("a", [7, 0, 1]), ("b", [3, 0, 1])])   # a^2=-7, b^2=-3
at = FieldElement(T, T.coerce(T.base.gen, T.base))
bt = generator(T)
print("(ab)^2 =", at * bt * at * bt, "   [the tower of curve 34]")

# ---- exact square-root decisions, the basis for recognizing when a
# quadratic splits: completely split primes give reconstruction, a single
# degree-one non-residue is a proof of non-squareness
C = number_field([-1, -1, -1, 1], "c")         # the cubic field of curve 24
c = generator(C)
x = 1 + 2 * c - c**2
print("sqrt((1+2c-c^2)^2) =", C.to_str(field_sqrt(C, (x * x).rep)))
print("5c^2 - 20 a square in Q(c)?", is_square(C, (5 * c**2 - 20).rep),
      "  -> the A_4 pair of curve 24 needs a quadratic extension")
ext, roots = adjoin_root(C, [(-(5 * c**2 - 20)).rep, C.zero, C.one])
print("that extension has absolute degree", ext.degree_over_q)

# ---- polynomials: resultants, discriminants, squarefree structure
P = lambda *cs: UniPoly.from_ints(QQ, cs)
f = P(-1, 0, 1) * P(3, 1) ** 2                 # (t^2-1)(t+3)^2
print("\ngcd(f, f') =", poly_gcd(f, f.derivative()))
lead, parts = squarefree_decomposition(f)
print("squarefree parts:", [(p.to_str(), m) for p, m in parts])
print("Res(t^2-1, t-2) =", resultant(P(-1, 0, 1), P(-2, 1)))
print("Discr(t^2+3t+1) =", discriminant(P(1, 3, 1)))

# ---- truncated series: the local engine behind branch classification
s_plus_s2 = TruncatedSeries(QQ, [Rat(0), Rat(1), Rat(1)], 8)
rev = s_plus_s2.reversion()
print("\nreversion(s+s^2) =", rev)
print("check:", s_plus_s2.compose(rev))
