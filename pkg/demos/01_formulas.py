# %% [markdown]
# # Formulas
#
# Parsing, printing and desugaring.  `X`, `G`, `F` are next, always and
# sometime; `B[i,j]` and `A[i,j]` are belief and assumption of agent `i`
# about agent `j`.

# %%
from italcheck.formula import debug_repr, desugar, parse, render

f = parse("G (B[a,b] A[b,a] (X G D)) -> G D")
print(debug_repr(f))
print(render(f))

# %% [markdown]
# Printing drops every parenthesis the precedence rules make redundant, and
# the result always parses back to the same tree.

# %%
for text in ["(p & q) | r", "p & (q | r)", "(p -> q) -> r", "p -> (q -> r)", "!(F p)"]:
    g = parse(text)
    print(f"{text:18} -> {render(g):16} round trip ok: {parse(render(g)) == g}")

# %% [markdown]
# Desugaring leaves only negation, conjunction, next, always and the two
# epistemic operators.

# %%
print(render(desugar(parse("F D"))))
print(render(desugar(parse("p -> q | r"))))
print(render(desugar(parse("true"))))
