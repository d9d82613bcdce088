"""Boolean maps on strongly involution posets and (n, r)-systems of subset-sum inequalities."""

from .cores import (CorePair, CoreReport, basis_violation, enumerate_bases, enumerate_family,
                    fundamental_core, fundamental_core_minus, fundamental_core_plus, h_minus, h_plus,
                    is_core_brute, is_w_basis_minus, is_w_basis_plus, span_minus, span_plus)
from .errors import (CapExceeded, Incompatible, InvalidSystem, InvolutionViolation, NotABasis,
                     NotInBnr, NotWeighted, ParseError, PartialOrderViolation, SnrError)
from .feasibility import FeasibilityResult, LinearConstraint, Verdict, feasible, implies
from .formal import ConjectureReport, conjecture_scan, in_fc_minus, in_fc_plus, is_complemented_pointwise
from .maps import MapFamily, PartialMap, Sign, classify, format_map, map_from_listing, parse_map
from .poset import Involution, Poset, boolean_lattice, chain, validate_involution
from .snr import SnrLattice, SnrParams, SnrString, build_lattice, parse_string
from .systems import (NrSystem, Relation, chi, compatible, equivalent, is_generative, nlc_check,
                      parse_system, plc_check, tau)
from .weights import WeightFunction, alpha_minus, alpha_plus, induced_map, pos_set

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ConjectureReport",
    "CorePair",
    "CoreReport",
    "FeasibilityResult",
    "Incompatible",
    "InvalidSystem",
    "Involution",
    "InvolutionViolation",
    "LinearConstraint",
    "MapFamily",
    "NotABasis",
    "NotInBnr",
    "NotWeighted",
    "NrSystem",
    "ParseError",
    "PartialMap",
    "PartialOrderViolation",
    "Poset",
    "Relation",
    "Sign",
    "SnrError",
    "SnrLattice",
    "SnrParams",
    "SnrString",
    "Verdict",
    "WeightFunction",
    "alpha_minus",
    "alpha_plus",
    "basis_violation",
    "boolean_lattice",
    "build_lattice",
    "chain",
    "chi",
    "classify",
    "compatible",
    "conjecture_scan",
    "enumerate_bases",
    "enumerate_family",
    "equivalent",
    "feasible",
    "format_map",
    "fundamental_core",
    "fundamental_core_minus",
    "fundamental_core_plus",
    "h_minus",
    "h_plus",
    "implies",
    "in_fc_minus",
    "in_fc_plus",
    "induced_map",
    "is_complemented_pointwise",
    "is_core_brute",
    "is_generative",
    "is_w_basis_minus",
    "is_w_basis_plus",
    "map_from_listing",
    "nlc_check",
    "parse_map",
    "parse_string",
    "parse_system",
    "plc_check",
    "pos_set",
    "span_minus",
    "span_plus",
    "tau",
    "validate_involution",
]
