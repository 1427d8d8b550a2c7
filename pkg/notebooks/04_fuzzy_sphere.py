# %% [markdown]
# # Fuzzy spheres from su(2) irreps
#
# The (m+1)-dimensional representation with Planck constant hbar realises
# the quotient when the Casimir shift is C(h) = l^2 + l*h, l = hbar*m/2.

# %%
from fractions import Fraction

import numpy as np

from orbitquant import HPoly
from orbitquant.su2rep import build_irrep, casimir_eigenvalue, expected_casimir, fuzzy_sphere_algebra, kernel_and_span_check

rep = build_irrep(2, Fraction(1, 2))
print(rep.H)
print(rep.X @ rep.Y - rep.Y @ rep.X)

# %%
for m in range(1, 7):
    print(m, expected_casimir(m, Fraction(1)), casimir_eigenvalue(build_irrep(m, Fraction(1, 2))))

# %% [markdown]
# The right shift kills the ideal and the images span all matrices; the naive
# shift l^2 does not.

# %%
m, hbar = 3, Fraction(1)
rep = build_irrep(m, hbar)
good = kernel_and_span_check(fuzzy_sphere_algebra(m, hbar), rep, m)
l = hbar * m / 2
bad = kernel_and_span_check(fuzzy_sphere_algebra(m, hbar, HPoly([l * l])), rep, m)
print("correct:", good.kernel, good.spans[-1])
print("naive:  ", bad.kernel)
print(np.array_equal(rep.H, rep.H.T))
