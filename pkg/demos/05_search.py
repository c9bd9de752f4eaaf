# %% [markdown]
# # Searching pencil parameters
#
# Enumerate degrees and node counts, keep the tuples meeting the constraints.

# %%
from fibslope.report import markdown_table
from fibslope.search import SearchRequest, search


def show(rows):
    cols = ["g", "a", "b", "l", "m", "margin"]
    keys = [k for k, _ in rows[0].params if k != "m"] if rows else []
    print(markdown_table(keys + cols, [[str(r.to_json()[c]) for c in keys + cols] for r in rows]))


# %% Plane pencils with l = 2m (so 6m = d^2) and 4l + m <= 6b
show(search(SearchRequest("PlaneNodal", {"d": (12, 36)}, ("L_eq_2m", "FourLPlusM_le_6b"))))

# %% Bidegree (8, 8): relatively minimal members with 4l + m <= 6b
show(search(SearchRequest("F0Nodal", {"alpha": (8, 8), "beta": (8, 8), "m": (20, 30)},
                          ("Balance", "Mobility", "RelMin", "FourLPlusM_le_6b"))))

# %% Where a = 6b holds exactly
show(search(SearchRequest("F0Nodal", {"alpha": (8, 10), "beta": (8, 10)}, ("Balance", "Mobility", "Equality_a_eq_6b"))))
