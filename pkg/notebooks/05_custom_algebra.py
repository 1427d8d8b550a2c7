# %% [markdown]
# # A user-declared algebra
#
# so(3) written out by hand as a config dictionary, then checked the same way
# as the built-ins.

# %%
from orbitquant.parsing import algebra_from_config, parse_expression
from orbitquant.lie import jacobi_witness, regularity_check
from orbitquant.star import StarProduct

config = {
    "dim": 3,
    "names": ["xa", "xb", "xc"],
    "rank": 1,
    "brackets": [
        {"i": 1, "j": 2, "coeffs": {"xc": 1}},
        {"i": 2, "j": 3, "coeffs": {"xa": 1}},
        {"i": 1, "j": 3, "coeffs": {"xb": -1}},
    ],
    "invariants": ["xa^2 + xb^2 + xc^2"],
}
A = algebra_from_config(config, "inline")
print(A.names, jacobi_witness(len(A.names), A.structure))
print(regularity_check(A, A.invariants, [1, 0, 0]))

# %%
f = parse_expression("xa*xb", A)
g = parse_expression("xc", A)
print(StarProduct(A, "sym")(f, g).to_str(A.names))
