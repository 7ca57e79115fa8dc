# %% [markdown]
# # Theorem instances
#
# Both theorems are checked on every enumerated strict 2x2 model with a
# two-step loop.  Theorem 1 is vacuous when no Ann state assumes all of Bob's
# states forever.

# %%
from italcheck.checker import check_theorem1, check_theorem2, satisfiable, sweep_theorems
from italcheck.formula import parse
from italcheck.model import EnumSpec, static_model

sweep = sweep_theorems(EnumSpec.parse("a=2,b=2,prefix=0,loop=2,strict"))
print(sweep.summary())

# %% [markdown]
# A model where the hypothesis of theorem 1 is met: `x1` considers both Bob
# states possible.

# %%
m2 = static_model(["x1", "x2"], ["y1", "y2"], [("x1", "y1"), ("x1", "y2"), ("x2", "y1")],
                  [("y1", "x2"), ("y2", "x1")])
print(check_theorem1(m2).to_dict()["verdict"], check_theorem1(m2).antecedent_witness)
print(check_theorem2(m2).verdict)

# %% [markdown]
# The Yablo-like configuration itself never holds anywhere, which is what
# makes the implication of theorem 1 true at every point.

# %%
config = parse("G (B[a,b] A[b,a] (X G D))")
print(satisfiable(m2, config))
