"""Exact minimal faithful quasi-permutation and permutation degrees of
finite p-groups, computed from power-commutator presentations."""

from ._tc_core import COMPILED, BudgetExceeded
from .catalog import CATALOG, expand_catalog, expected_values, instantiate
from .chartab import CharTable, character_table, check_orthogonality
from .cyclotomic import CycInt
from .permdeg import MuSolution, mu_bruteforce, realize_permutation, solve_mu
from .presentation import GroupSpec, RegularGroup, enumerate_regular, parse_presentation
from .quasiperm import CSolution, GaloisSum, galois_orbits, solve_c
from .verify import SUITES, CheckResult, run_corpus

__version__ = "0.1.0"

__all__ = [
    "COMPILED",
    "BudgetExceeded",
    "CATALOG",
    "expand_catalog",
    "expected_values",
    "instantiate",
    "CharTable",
    "character_table",
    "check_orthogonality",
    "CycInt",
    "MuSolution",
    "mu_bruteforce",
    "realize_permutation",
    "solve_mu",
    "GroupSpec",
    "RegularGroup",
    "enumerate_regular",
    "parse_presentation",
    "CSolution",
    "GaloisSum",
    "galois_orbits",
    "solve_c",
    "SUITES",
    "CheckResult",
    "run_corpus",
    "__version__",
]
