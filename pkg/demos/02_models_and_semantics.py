# %% [markdown]
# # Lasso models and evaluation
#
# A model stores `prefix_len + loop_len` belief slices; time `n` beyond the
# stored range folds back into the loop.

# %%
from italcheck.formula import parse
from italcheck.model import canon_time, validate
from italcheck.semantics import assumed_set, diag_slice, evaluate

m1 = validate({
    "worlds_a": ["x1", "x2"], "worlds_b": ["y1", "y2"], "prefix_len": 0, "loop_len": 2,
    "slices": [
        {"rel_ab": [["x1", "y1"], ["x2", "y2"]], "rel_ba": [["y1", "x2"], ["y2", "x1"]]},
        {"rel_ab": [["x1", "y1"], ["x2", "y2"]], "rel_ba": [["y1", "x1"], ["y2", "x2"]]},
    ],
})
print([canon_time(m1, n) for n in range(6)])

# %% [markdown]
# `D` holds where no possible world considers the current one possible back.
# At time 1, `x1` and `y1` see each other.

# %%
for n in range(2):
    print(n, sorted(diag_slice(m1, n)))
print("x1 assumes", sorted(assumed_set(m1, 1, "x1")), "at time 1")

# %%
for text in ["D", "G D", "F D", "G F D", "X !D"]:
    print(f"{text:6} at (0, x1): {evaluate(m1, 0, 'x1', parse(text))}")

# %% [markdown]
# Validation reports every broken invariant at once.

# %%
from italcheck.model import ModelError

try:
    validate({"worlds_a": ["x1", "x2"], "worlds_b": ["y1", "y2"],
              "slices": [{"rel_ab": [["x1", "y1"]], "rel_ba": [["y1", "x1"], ["y2", "x1"]]}]})
except ModelError as exc:
    for v in exc.violations:
        print(v)
