# %% [markdown]
# # The sl2 orbit and its quantized quotient
#
# Fix p = xX*xY + xH^2/4 at the value 1. The SYM star product does not pass
# to the quotient by (p - 1); a quotient of U_h with a shifted Casimir does.

# %%
from orbitquant import sl2, Orbit, HPoly
from orbitquant.star import StarProduct, orbit_closure_witness
from orbitquant.orbit import QuantizedOrbitAlgebra, hilbert_check, quotient_star, quotient_axiom_check

L = sl2()
orbit = Orbit(L, [1])
print("classical basis:", [g.to_str(L.names) for g in orbit.basis])

# %%
w = orbit_closure_witness(StarProduct(L, "sym"), orbit, 1)
print("a =", w.a.to_str(L.names), " remainder =", w.remainder.to_str(L.names))

# %% [markdown]
# Quantized algebra with C(h) = 1 + h.

# %%
Q = QuantizedOrbitAlgebra(orbit, [HPoly([1, 1])])
for rule in Q.rule_strings():
    print(rule)

for d, quantum, classical in hilbert_check(Q, 6):
    print(d, quantum, classical)

# %%
xH, xX, xY = (L.var(i) for i in range(3))
print(quotient_star(xH, xH, Q).to_str(L.names))
print("axioms up to degree 3:", quotient_axiom_check(Q, 3).passed)
