"""Exact colored HOMFLYPT invariants of framed braid closures.

Values live in Q(q)[x^{±1}]; substituting x = q^n recovers the sl_n
quantum invariant in its integral normalization.  All arithmetic is exact.
"""

from .braid import (Braid, BraidError, ClosureInfo, ColoredBraid,
                    cable_first_component, closure_info, parse_braid)
from .invariants import (Partition, adjust_framing, framing_factor,
                         homfly_columns, homfly_partition, homfly_rows,
                         torus_reference, trefoil_reference,
                         trefoil_zero_framed_rows)
from .ladder import (LadderWord, Letter, build_cap, build_cup,
                     crossing_weights, enumerate_terms, weight_offsets)
from .pbw import Evaluator, ev, ev_specialized
from .qcomb import heaviside, kronecker, qbinom, qfactorial, qint, xbinom
from .recurrence import (OperatorError, RecurrenceOperator, guess,
                         parse_operator, parse_xpoly, trefoil_recurrence)
from .rings import (LaurentQ, RatQ, XPoly, is_integral_laurent, laurent_gcd,
                    xpoly_divexact, xpoly_gcd)

__version__ = "0.1.0"

__all__ = [
    "Braid", "BraidError", "ClosureInfo", "ColoredBraid", "Evaluator",
    "LadderWord", "LaurentQ", "Letter", "OperatorError", "Partition",
    "RatQ", "RecurrenceOperator", "XPoly", "adjust_framing",
    "build_cap", "build_cup", "cable_first_component", "closure_info",
    "crossing_weights", "enumerate_terms", "ev", "ev_specialized",
    "framing_factor", "guess", "heaviside", "homfly_columns",
    "homfly_partition", "homfly_rows", "is_integral_laurent", "kronecker",
    "laurent_gcd", "parse_braid", "parse_operator", "parse_xpoly",
    "qbinom", "qfactorial", "qint", "torus_reference", "trefoil_recurrence",
    "trefoil_reference", "trefoil_zero_framed_rows", "weight_offsets",
    "xbinom", "xpoly_divexact", "xpoly_gcd",
]
