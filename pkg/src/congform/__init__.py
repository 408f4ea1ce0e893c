"""Congruence lattices of finite algebras, closure operators on their
quotients, and the correspondence with reflective subcategories.

The central objects: a FiniteAlgebra is a carrier {0..n-1} with
operation tables; a Congruence is a compatible partition in canonical
encoding; a Universe is a finite, optionally quotient-closed, family of
algebras; a ClosureOperator is an extensive natural family of maps on
the congruence fibres over a universe; a Reflector assigns to every
member its reflection congruence into a subcategory.  ``reflection``
converts between the last two and verifies that the conversions are
mutually inverse; ``instances`` provides worked examples (nilradical,
quandle reachability, abelianization) together with corpora to test
them on.
"""

from .algebras import (
    COMMUTATIVE_RNG_SIGNATURE,
    Congruence,
    CongruenceLattice,
    FiniteAlgebra,
    GROUP_SIGNATURE,
    Homomorphism,
    QUANDLE_SIGNATURE,
    Signature,
    algebra_from_json,
    algebra_to_json,
    canonical_algebra,
    compose,
    con_lattice,
    congruence_from_blocks,
    congruence_to_blocks,
    diagonal,
    enumerate_homs,
    enumerate_surjections,
    find_isomorphism,
    full,
    generated_congruence,
    homomorphism,
    identity_hom,
    join,
    kernel_congruence,
    meet,
    quotient,
    validate_algebra,
)
from .errors import CheckResult, CongformError
from .forms import (
    image_congruence,
    leq,
    lifts,
    preimage_congruence,
    right_universalizer_check,
)
from .instances import (
    BUILTIN_OPERATOR_NAMES,
    Ideal,
    abelianization_operator,
    builtin_operator,
    congruence_of_ideal,
    corpus,
    corpus_manifest,
    cyclic_group,
    cyclic_rng,
    dihedral_group,
    dihedral_quandle,
    exponent_two_abelianization_operator,
    ideal,
    ideal_from_json,
    ideal_of_congruence,
    ideal_to_json,
    klein_four_group,
    nilradical,
    nilradical_operator,
    quandle_closure_operator,
    quandle_reachability,
    symmetric_group,
    trivial_quandle,
)
from .operators import (
    ClosureOperator,
    Universe,
    enumerate_operators,
    identity_operator,
    is_cohereditary,
    is_idempotent,
    is_minimal,
    make_operator,
    operator_leq,
    operator_report,
    preserves_cocartesian,
    strictify,
    top_operator,
    universe,
    universe_from_generators,
)
from .reflection import (
    Reflector,
    SubcategoryPredicate,
    antitone_check,
    closed_under_quotients,
    closure_from_reflector,
    membership,
    oracle_reflection,
    oracle_reflector,
    predicate_from_equations,
    predicate_from_operator,
    predicate_from_quasiequations,
    reflector_from_closure,
    roundtrip_closure,
    roundtrip_reflector,
    subcategory_members,
)
from .terms import (
    Equation,
    QuasiEquation,
    Term,
    app,
    satisfies_equations,
    satisfies_quasiequations,
    term_from_json,
    term_to_json,
    var,
)
from .verify import run_verification

__version__ = "0.1.0"
