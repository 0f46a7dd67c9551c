"""Exact computational algebra for hyperfields and hyperrings.

Submodules:

* hypercore -- carriers, multivalued arithmetic, axiom-verification engines
* polyq     -- exact univariate/bivariate rational polynomials, Sturm machinery
* finring   -- finite commutative rings, quotient hyperrings, primes, localization
* topofin   -- finite topological spaces: generation, comparison, export
* homspace  -- Hom-sets into K and S, Spec/Sper spaces, gluing
* berkline  -- the analytic affine line over a trivially valued field
* cli       -- command-line workbench over all of the above
"""

from hyperalg.hypercore import (
    GAMMA_Q,
    GAMMA_Z2LEX,
    KRASNER,
    NEG_INF,
    PHASE,
    PHASE_ZERO,
    SIGNS,
    TROPICAL,
    check_doubly_distributive,
    check_hyperfield,
    check_hypergroup,
    check_hyperring,
    hom_check,
    hyperadd,
    hypersum_sets,
)

__all__ = [
    "GAMMA_Q",
    "GAMMA_Z2LEX",
    "KRASNER",
    "NEG_INF",
    "PHASE",
    "PHASE_ZERO",
    "SIGNS",
    "TROPICAL",
    "check_doubly_distributive",
    "check_hyperfield",
    "check_hypergroup",
    "check_hyperring",
    "hom_check",
    "hyperadd",
    "hypersum_sets",
]

__version__ = "0.1.0"
