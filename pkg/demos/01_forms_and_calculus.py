"""Superforms and their calculus: d', d'', wedge, contraction.

A (p,q)-superform on Q^n is a sum of terms g(x) d'x_I ^ d''x_J with
polynomial coefficients and strictly increasing multi-indices.  The two
differentials make the space of forms a bicomplex.
"""

from fractions import Fraction

from tropcalc import Polynomial, Superform

n = 3

# x1^2 x3 d'x1 ^ d''x2
g = Polynomial(n, {(2, 0, 1): Fraction(1)})
alpha = Superform.monomial(n, (0,), (1,), g)
print("alpha =", alpha)

print("\nd'alpha  =", alpha.dprime())
print("d''alpha =", alpha.dsecond())

print("\nbicomplex identities:")
print("  d'd'alpha   =", alpha.dprime().dprime())
print("  d''d''alpha =", alpha.dsecond().dsecond())
anti = alpha.dprime().dsecond() + alpha.dsecond().dprime()
print("  d'd'' + d''d' =", anti)
assert alpha.dprime().dprime().is_zero()
assert alpha.dsecond().dsecond().is_zero()
assert anti.is_zero()

# wedge is graded-commutative with respect to the total degree
beta = Superform.monomial(n, (2,), (0,), Polynomial(n, {(0, 1, 0): Fraction(1)}))
ab = alpha.wedge(beta)
ba = beta.wedge(alpha)
sign = (-1) ** ((alpha.p + alpha.q) * (beta.p + beta.q))
print("\nalpha ^ beta =", ab)
assert ab == ba.scale(sign)
print("graded commutativity holds with sign", sign)

# Leibniz rule for d''
lhs = ab.dsecond()
rhs = alpha.dsecond().wedge(beta) + alpha.wedge(beta.dsecond()).scale(
    (-1) ** (alpha.p + alpha.q))
assert lhs == rhs
print("Leibniz rule for d'' holds")

# contracting a vector into a d' slot drops p by one
v = (Fraction(1), Fraction(0), Fraction(2))
gamma = ab.contract(v, "dprime", 1)
print("\n<alpha ^ beta ; v> (slot 1) =", gamma)
assert (gamma.p, gamma.q) == (ab.p - 1, ab.q)
