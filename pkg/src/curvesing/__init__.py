"""Exact invariants of plane curve branches ``x = t^p, y = t^q + t^r``.

The most used entry points are re-exported here; the submodules hold the rest.
"""

from .bfunction import (
    BsRatio,
    bs_quasihomogeneous,
    bs_ratio,
    global_bfunction,
    local_bfunction,
    local_bfunction_origin,
    modular_bfunction,
)
from .brieskorn import brieskorn_bfunction
from .implicitize import BranchCurve, implicitize_branch, sylvester_resultant, verify_vanishing
from .local_algebra import milnor_number, standard_basis, tjurina_number
from .poly import ContractError, FactoredB, MultiPoly, ParseError, UniPoly
from .puiseux import PuiseuxCharacteristic, characteristic_of, puiseux_characteristic
from .report import build_report, render
from .semigroup import CoprimePair, frobenius_number, gap_set

__version__ = "0.1.0"

__all__ = [
    "BranchCurve",
    "BsRatio",
    "ContractError",
    "CoprimePair",
    "FactoredB",
    "MultiPoly",
    "ParseError",
    "PuiseuxCharacteristic",
    "UniPoly",
    "brieskorn_bfunction",
    "bs_quasihomogeneous",
    "bs_ratio",
    "build_report",
    "characteristic_of",
    "frobenius_number",
    "gap_set",
    "global_bfunction",
    "implicitize_branch",
    "local_bfunction",
    "local_bfunction_origin",
    "milnor_number",
    "modular_bfunction",
    "puiseux_characteristic",
    "render",
    "standard_basis",
    "sylvester_resultant",
    "tjurina_number",
    "verify_vanishing",
]
