# %% [markdown]
# # Pencils, fibrations and relative minimality
#
# A pencil is given by numbers: degree, simple base points l and nodal base
# points m.  Validation checks l + 4m = C0^2 and that the linear system moves.

# %%
from fibslope import presets
from fibslope.invariants import invariants
from fibslope.pencil import (
    PencilSpec,
    PencilValidationError,
    fibration_from_spec,
    gonality_bounds,
    relative_minimality_check,
    validate_pencil,
)

pencil = validate_pencil(presets.plane_nodal_18())
model = fibration_from_spec(pencil.spec)
inv = invariants(model)
print(f"g = {inv.g}, a = K_f^2 = {inv.a}, a - 6b = {inv.six_b_margin}, K_T^2 = {inv.K_T_squared}")
print("sigma lower bound:", inv.sigma_lower_bound)

# %% The certificate tests every proper sub-class of the pencil class
cert = relative_minimality_check(pencil)
print("degree 18:", cert.verdict, "after", len(cert.witnesses), "candidates")
conic = relative_minimality_check(validate_pencil(PencilSpec("P2", 2, 4, 0)))
print("conics:", conic.verdict, "witness", conic.survivors[0].to_json())

# %% Gonality: cited for plane curves, asserted for the quadric examples
print(gonality_bounds(pencil))
print(gonality_bounds(validate_pencil(presets.quadric_nodal_26())))

# %% Broken input is reported with every violated constraint
try:
    validate_pencil(PencilSpec("P2", 18, 100, 54))
except PencilValidationError as exc:
    print(exc)
