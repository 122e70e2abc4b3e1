"""Exact composition dynamics of polynomials over the rationals.

Everything is computed in exact rational arithmetic: functional
decomposition, conjugacy normal forms, affine symmetry groups, and
search-based amenability verdicts that come with re-checkable
certificates.
"""

from .decompose import (
    NO_RATIONAL_WITNESS,
    Decomposition,
    RittFactorization,
    all_decompositions,
    left_compose_solutions,
    left_compose_solve,
    right_compose_solve,
    right_factor,
    ritt_first,
    ritt_second_family,
)
from .errors import (
    BadDegree,
    BadParams,
    BadSubgroup,
    DegreeTooLow,
    EmptyInput,
    InfiniteGroup,
    InternalInconsistency,
    NotAnIdentity,
    NotRational,
    ParseError,
    RittLabError,
    SpecialInput,
)
from .forms import (
    CenteredForm,
    ChebyshevConjugate,
    Equivalence,
    NotSpecial,
    PowerConjugate,
    center,
    chebyshev,
    is_conjugate_to_chebyshev,
    is_conjugate_to_power,
    is_special,
    linear_equivalence,
    monic_chebyshev,
)
from .io_cli import main, parse_poly, render_poly, report
from .polynomials import (
    AffineMap,
    ONE,
    Poly,
    Z,
    ZERO,
    compose,
    conjugate,
    evaluate,
    iterate,
    rational_nth_root,
)
from .semigroup import (
    BoundExhausted,
    CommonIterate,
    CommutesWithIterate,
    DegreeObstruction,
    Finding,
    LeadingCoeffObstruction,
    Outcome,
    SearchBounds,
    SemidirectContext,
    SemidirectElement,
    SideVerdict,
    TwistedPair,
    Verdict,
    abstract_semidirect_context,
    classify,
    common_iterate,
    commutes_with_iterate,
    folner_ratio,
    folner_window,
    free_collision_search,
    multiplicatively_dependent,
    semidirect_context,
    semidirect_mul,
    semidirect_realize,
    sgr_left_amenable,
    twisted_pair,
    verify_certificate,
)
from .symmetry import CyclicTwist, StabilizationReport, aut_group, aut_stabilization, g_group, gamma_apply

__version__ = "0.1.0"
