# %% [markdown]
# # Zariski decompositions of adjoint divisors
#
# The negative part is found by Fujita's iteration against the catalog of
# sections, bisecants and their (-2)-chains, then re-verified independently.

# %%
from fibslope import presets
from fibslope.pencil import ChainSpec, PencilSpec, fibration_from_spec
from fibslope.zariski import (
    CurveCatalog,
    adjoint,
    closed_form_n1,
    closed_form_n1_prime,
    verify_decomposition,
    zariski_fujita,
)

model = fibration_from_spec(presets.plane_nodal_18())
dec = zariski_fujita(model.fiber + 3 * model.canonical, model.catalog)
print("P =", dec.positive.coefficients[0], "H;  P^2 =", dec.p_squared)
print("distinct multiplicities in N:", sorted(str(x) for x in set(dec.negative.values())))
print(verify_decomposition(dec, model.catalog).to_json())

# %% Vertical chains realized by infinitely near base points
spec = PencilSpec("P2", 5, 25, 0, chains=ChainSpec(sections=(3, 1) + (0,) * 19))
chained = fibration_from_spec(spec)
dec2 = zariski_fujita(chained.fiber + 2 * chained.canonical, chained.catalog)
n1 = closed_form_n1(chained.catalog)
print("N(C+2K) == N1:", dec2.negative == n1.multiplicities, " N1^2 =", n1.square, " l =", chained.l)

# %% Abstract catalogs accept any chain lengths, horizontal chains included
cat = CurveCatalog.from_configuration(sections=[2, 0], horizontal=[0, 3], bisecants=[1])
print(zariski_fujita(adjoint(cat, 3), cat).to_json()["negative"])
part = closed_form_n1_prime(cat)
print("N1' square on the lattice", part.square, "vs count prediction", part.predicted_square)
