# %% [markdown]
# # Star products on polynomials over sl2*
#
# Two orderings give two star products. Both reduce to the pointwise product
# at h = 0 and both see the Poisson bracket at first order.

# %%
from orbitquant import sl2, poisson_bracket
from orbitquant.star import StarProduct, extract_cochain, gauge_transform, check_associativity

L = sl2()
xH, xX, xY = (L.var(i) for i in range(3))
pbw, sym = StarProduct(L, "pbw"), StarProduct(L, "sym")

# %%
for sp in (pbw, sym):
    print(sp.ordering.value, ":", sp(xX, xY).to_str(L.names))

# %% [markdown]
# Cochains are the coefficients of h^n in the expansion.

# %%
a, b = xX * xX, xY * xH
for n in range(4):
    print(n, extract_cochain(sym, n, a, b).value.to_str(L.names))

c1 = extract_cochain(sym, 1, a, b).value - extract_cochain(sym, 1, b, a).value
print("antisymmetric part equals bracket:", c1 == poisson_bracket(a, b, L))

# %% [markdown]
# The two products are gauge equivalent; T maps the SYM picture to the PBW picture.

# %%
print(gauge_transform(sym, pbw, xX * xY).to_str(L.names))
print("associative:", check_associativity(sym, xX, xY * xH, xH * xH))
