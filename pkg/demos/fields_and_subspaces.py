"""
Finite fields and row-reduced subspaces
=======================================

Elements of a field with q = p^e elements are integer codes 0..q-1;
the base-p digits of a code are the coefficients of a polynomial in a
fixed generator.  Subspaces are stored as reduced row echelon matrices,
so two equal subspaces are literally the same array.
"""

import numpy as np

from qgrass import Subspace, make_field

# the 9-element field: codes are pairs of base-3 digits
gf = make_field(3, 2)
print("field:", gf, "with", gf.q, "elements")

a, b = 5, 7
print(f"{a} + {b} =", gf.add(a, b))
print(f"{a} * {b} =", gf.mul(a, b))
print(f"{a}^-1   =", gf.inv(a), " check:", gf.mul(a, gf.inv(a)))

# arithmetic is vectorized over numpy arrays
v = np.array([1, 2, 3, 4])
w = np.array([8, 7, 6, 5])
print("v + w  =", gf.add(v, w))
print("v . w  =", gf.dot(v, w))

# the Frobenius power map x -> x^3 generates the field symmetries
x = 5
print("frobenius(5) =", gf.frobenius(x), " applied twice:", gf.frobenius(gf.frobenius(x)))

# subspaces canonicalize on construction: any spanning set gives the
# same stored basis
rows = [[1, 2, 0, 1], [2, 4, 0, 2], [0, 0, 1, 1]]
S = Subspace.from_rows(gf, rows)
print("\nspan of three rows (one dependent):")
print(S.basis, " dim =", S.dim)

T = Subspace.from_rows(gf, [[1, 2, 1, 2], [0, 0, 1, 1]])
print("\nsecond plane:")
print(T.basis)

meet = S & T
join = S + T
print("\nintersection dim =", meet.dim, " sum dim =", join.dim)
print("dimension formula holds:", S.dim + T.dim == meet.dim + join.dim)

# the annihilator under the standard dot form
print("\nannihilator of S:")
print(S.perp().basis)
print("double annihilator returns S:", S.perp().perp() == S)
