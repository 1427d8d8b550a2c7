# %% [markdown]
# # Rewriting words in U_h(sl2)
#
# Words in the generators H, X, Y are put in PBW order (H before X before Y)
# by swapping adjacent letters and paying a factor h times the bracket.

# %%
from orbitquant import sl2, sl3
from orbitquant.uh import pbw_normal_form, word, centrality_check, symmetrize

L = sl2()
print(L.names, L.generators)

# %% [markdown]
# A single word, reduced with two different strategies. The answer must not
# depend on which overlap we resolve first.

# %%
yxx = (2, 1, 1)
for strategy in ("recursive", "leftmost", "rightmost"):
    print(strategy.ljust(10), pbw_normal_form(L, yxx, strategy).to_str())

# %% [markdown]
# Products of elements go through the same kernel.

# %%
X, Y, H = (word(L, g) for g in "XYH")
print((Y * X).to_str())
print((X * Y - Y * X).to_str())

# %% [markdown]
# The symmetrized quadratic invariant is central.

# %%
P = symmetrize(L.invariants[0], L)
print("P =", P.to_str())
print("central:", centrality_check(P, L))

L3 = sl3()
P3 = symmetrize(L3.invariants[0], L3)
print("sl3 quadratic Casimir has", len(P3.items()), "terms; central:", centrality_check(P3, L3))
