"""Exact arithmetic in the algebra: normal form, relations, the star map.

Elements live on the basis L_1^{d_1}...L_n^{d_n} T_w with all exponents
below r; products are rewritten back onto it exactly, over the rationals
here (any prime field works the same way).
"""

from fractions import Fraction

from ariki_koike import ArikiKoikeAlgebra, Params, Rationals

params = Params(field=Rationals(), q=2, Q=(1, 5), n=2, r=2, s=1)
alg = ArikiKoikeAlgebra(params)
print(f"algebra on n={params.n} strands, parameters q={params.q}, "
      f"Q=({', '.join(str(x) for x in params.Q)})")
print(f"rank r^n n! = {alg.dim}")

T0, T1 = alg.gen_T(0), alg.gen_T(1)
L1, L2 = alg.gen_L(1), alg.gen_L(2)

print("\n== the defining relations, as computed identities ==")
cyc = (T0 - alg.from_scalar(1)) * (T0 - alg.from_scalar(5))
print(f"  (T0 - Q1)(T0 - Q2) = 0: {cyc.is_zero()}")
print(f"  T0 T1 T0 T1 = T1 T0 T1 T0: {T0*T1*T0*T1 == T1*T0*T1*T0}")
print(f"  (T1 + 1)(T1 - q) = 0: {((T1 + alg.one()) * (T1 - alg.from_scalar(2))).is_zero()}")

print("\n== the commuting family and its rewriting ==")
print(f"  L2 = q^-1 T1 L1 T1: {L2 == (T1 * L1 * T1).scale(Fraction(1, 2))}")
print(f"  L1 L2 = L2 L1: {L1 * L2 == L2 * L1}")
print("  a product that needs the cyclotomic reduction:")
print("  L1 * L1 =")
print("    " + (L1 * L1).serialize().replace("\n", "\n    "))
print("  L2 * L2 =")
print("    " + (L2 * L2).serialize().replace("\n", "\n    "))

print("\n== the star anti-automorphism ==")
h = T1 * L2 - L1.scale(3)
print("  h =")
print("    " + h.serialize().replace("\n", "\n    "))
print("  h* =")
print("    " + h.star().serialize().replace("\n", "\n    "))
print(f"  (h*)* = h: {h.star().star() == h}")
print(f"  (T1 L2)* = L2 T1: {(T1 * L2).star() == L2 * T1}")
