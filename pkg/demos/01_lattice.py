# %% [markdown]
# # Picard lattices of blown-up surfaces
#
# Classes are exact rational vectors in the basis [H, p1.., q1..] on a
# blow-up of P^2, or [G0, F, p1.., q1..] on a blow-up of a Hirzebruch surface.

# %%
from fibslope.lattice import BaseSurface, arithmetic_genus, build_surface, canonical_class, chi, pair

plane = build_surface(BaseSurface.plane(), simple_count=3, node_count=1)
print("basis:", plane.basis)
K = canonical_class(plane)
print("K =", K, " K^2 =", K.square())

# %% A quartic through the three simple points and with a node at q1
C = plane.divisor([4, -1, -1, -1, -2])
print("C^2 =", C.square(), " p_a(C) =", arithmetic_genus(C), " chi(C) =", chi(C))

# %% The line through p1 and p2 is a (-1)-curve
line = plane.divisor([1, -1, -1, 0, 0])
print("line^2 =", line.square(), " K.line =", pair(K, line))

# %% On P^1 x P^1 the bidegree classes pair by (a, b).(c, d) = ad + bc
quadric = build_surface(BaseSurface.hirzebruch(0), 0, 0)
print("(8,8)^2 =", quadric.divisor([8, 8]).square(), " K^2 =", canonical_class(quadric).square())
