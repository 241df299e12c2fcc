"""Symbolic engine for equivariant Grothendieck-ring classes.

Exact normal forms for classes with roots-of-unity actions, the Fermat-loci
convolution products on the point and on the affine line, nearby-fiber and
vanishing-cycle classes from simple-normal-crossing resolution data, the
vanishing-cycles measure on generator presentations, and realizations through
the compactly supported Euler characteristic and the Hodge-Deligne
E-polynomial.
"""

from .laurent import LaurentInt
from .errors import (MotivicError, ValidationError, DatumValidationError,
                     RealizationUndefinedError, OracleBudgetError, ParseError)
from .classes import MuClass, normalize, add, mul, forget_action
from .convolve import BiClass, tensor, psi_pair, star, star_power, assoc_check
from .a1 import A1Class, a1_unit, a1_star, epsilon_push
from .vanishing import (Stratum, SNCDatum, Resolved, Constant, SmoothProper,
                        validate_datum, nearby_fiber, vanishing_cycles,
                        phi_generator, phi_measure, ts_check)
from .realize import (EPoly, chi_c, chi_of_a1, e_polynomial,
                      point_count_oracle, count_fermat_points)
from .jsonio import (class_to_json, class_from_json, a1_to_json, a1_from_json,
                     datum_to_json, datum_from_json, generator_to_json,
                     generator_from_json, presentation_to_json,
                     presentation_from_json, pretty)

__version__ = "0.1.0"

__all__ = [
    "LaurentInt", "MuClass", "BiClass", "A1Class", "EPoly",
    "Stratum", "SNCDatum", "Resolved", "Constant", "SmoothProper",
    "normalize", "add", "mul", "forget_action",
    "tensor", "psi_pair", "star", "star_power", "assoc_check",
    "a1_unit", "a1_star", "epsilon_push",
    "validate_datum", "nearby_fiber", "vanishing_cycles",
    "phi_generator", "phi_measure", "ts_check",
    "chi_c", "chi_of_a1", "e_polynomial", "point_count_oracle",
    "count_fermat_points",
    "class_to_json", "class_from_json", "a1_to_json", "a1_from_json",
    "datum_to_json", "datum_from_json", "generator_to_json",
    "generator_from_json", "presentation_to_json", "presentation_from_json",
    "pretty",
    "MotivicError", "ValidationError", "DatumValidationError",
    "RealizationUndefinedError", "OracleBudgetError", "ParseError",
]
