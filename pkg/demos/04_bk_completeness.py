# %% [markdown]
# # Completeness and the Brandenburger-Keisler configuration
#
# A static model is complete for a language when every nonempty definable set
# of one sort is exactly the possibility set of some state of the other sort.

# %%
from italcheck.completeness import bk_sweep, definable_sets, is_complete
from italcheck.formula import Agent, render
from italcheck.model import EnumSpec, static_model
from italcheck.paradox import bk_narrative

m0 = static_model(["x1", "x2"], ["y1", "y2"], [("x1", "y1"), ("x2", "y2")],
                  [("y1", "x2"), ("y2", "x1")])
for ys, f in sorted(definable_sets(m0, 3, Agent.B).sets.items(), key=lambda kv: sorted(kv[0])):
    print(sorted(ys), render(f))
print(is_complete(m0, 3).to_dict())

# %% [markdown]
# Sweep all 64 strict 2x2 models.  With atoms only, a few models are complete;
# once belief and assumption operators are available none are.

# %%
for depth in range(4):
    r = bk_sweep(EnumSpec(2, 2), depth)
    print(depth, f"{r.models_incomplete}/{r.models_total} incomplete")

# %%
print(bk_narrative())
