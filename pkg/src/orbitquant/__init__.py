"""Exact deformation quantization of coadjoint orbits.

Star products on Pol(g*) transported from the deformed enveloping algebra
U_h, quotient algebras by Casimir ideals, and sl(2) matrix cross-checks.
All arithmetic is over Q[h].
"""

from .lie import LieAlgebra, killing_form, make_algebra, quadratic_invariant, regularity_check, sl2, sl3, so3
from .orbit import (
    CasimirShift,
    QuantizedOrbitAlgebra,
    casimir_operator,
    hilbert_check,
    ideal_reduce,
    quotient_axiom_check,
    quotient_star,
)
from .parsing import load_algebra, parse_expression, parse_hpoly, parse_uh_expression
from .poly import Orbit, Poly, classical_reduce, in_orbit_ideal, poisson_bracket, sample_orbit
from .scalars import Fraction, HPoly, specialize
from .star import (
    StarProduct,
    check_associativity,
    check_axiom_a,
    check_axiom_b,
    extract_cochain,
    gauge_transform,
    intertwine_check,
    orbit_closure_witness,
    star,
)
from .uh import (
    UhElement,
    centrality_check,
    generator,
    pbw_normal_form,
    psi_pbw,
    psi_pbw_inv,
    symmetrize,
    symmetrize_inv,
    uh_mul,
    word,
)

__version__ = "0.1.0"
