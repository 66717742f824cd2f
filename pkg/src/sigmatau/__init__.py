"""Grammar-compressed sigma-tau generation of permutations.

The package provides the compressed word driving the generation of all
n-permutations by left rotations (sigma) and first-two swaps (tau), plus
fast ranking/unranking in the generated order, a brute-force oracle, and
the Hamiltonian-cycle variant.
"""

from .permcore import (
    CyclicOrder,
    apply_sigma,
    apply_tau,
    apply_word,
    check_perm,
    format_perm,
    parse_perm,
)
from .slpseq import LengthTables, SlpProgram, build, letters, permutations, sum_kj

__all__ = [
    "CyclicOrder",
    "LengthTables",
    "SlpProgram",
    "apply_sigma",
    "apply_tau",
    "apply_word",
    "build",
    "check_perm",
    "format_perm",
    "letters",
    "parse_perm",
    "permutations",
    "sum_kj",
]

__version__ = "0.1.0"
