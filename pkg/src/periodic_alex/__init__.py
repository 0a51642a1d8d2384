"""Exact-arithmetic toolkit for periodicity obstructions of Alexander
polynomials: congruence and substitution checks, cyclotomic unit scans,
and S-unit equation searches with the accompanying finiteness bound."""

__version__ = "0.1.0"

from .cyclotomic import CycInt, UnitWitness, char_poly, invert_unit, is_root_of_unity, lemma1_ratio, zeta
from .obstructions import (
    GHPair,
    MurasugiInstance,
    MurasugiWitness,
    TorresWitness,
    Verdict,
    candidate_from_gh,
    murasugi_congruence_check,
    murasugi_search,
    scan_units,
    theorem1_check,
    torres_linear_check,
)
from .polynomials import IntPolynomial, ModPolynomial, alternating_polynomial, reduce_mod
from .reports import KnotRecord, ObstructionReport, ingest, ingest_text, run_checks, verify_report
from .sunits import (
    BoundValue,
    SUnitContext,
    SUnitElement,
    SUnitSolution,
    count_primes_above,
    enumerate_candidates,
    evertse_bound,
    is_s_smooth,
    s_unit_test,
    solve_sunit_equation,
    theorem2_bound,
)

__all__ = [
    "__version__",
    "IntPolynomial",
    "ModPolynomial",
    "alternating_polynomial",
    "reduce_mod",
    "CycInt",
    "UnitWitness",
    "zeta",
    "char_poly",
    "invert_unit",
    "is_root_of_unity",
    "lemma1_ratio",
    "Verdict",
    "MurasugiInstance",
    "MurasugiWitness",
    "TorresWitness",
    "GHPair",
    "murasugi_congruence_check",
    "murasugi_search",
    "torres_linear_check",
    "candidate_from_gh",
    "theorem1_check",
    "scan_units",
    "BoundValue",
    "SUnitContext",
    "SUnitElement",
    "SUnitSolution",
    "count_primes_above",
    "evertse_bound",
    "theorem2_bound",
    "is_s_smooth",
    "s_unit_test",
    "solve_sunit_equation",
    "enumerate_candidates",
    "KnotRecord",
    "ObstructionReport",
    "ingest",
    "ingest_text",
    "run_checks",
    "verify_report",
]
