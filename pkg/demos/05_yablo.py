# %% [markdown]
# # Yablo's sequence
#
# Truncated after N sentences the scheme has one consistent assignment: only
# the last sentence is true.  No ultimately periodic infinite assignment works.

# %%
from italcheck.yablo import finite_yablo, periodic_yablo

for n in (1, 3, 6):
    print(n, ["T" if v else "F" for v in finite_yablo(n)[0].prefix])

# %%
shapes = [(p, l) for p in range(5) for l in range(1, 6)]
print(all(periodic_yablo(p, l) is None for p, l in shapes), len(shapes), "shapes checked")
