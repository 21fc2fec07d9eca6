"""Pell's-cubic linear primality test.

Hot kernels come from the compiled ``_ckernels`` extension when it is
built, otherwise from ``_pykernels``; ``BACKEND`` names the one in use.
"""

from ._backend import kernels as _kernels
from .modmath import MulCounter, OddModulus, Residue
from .oracle import is_prime_oracle, sieve_upto
from .pellcore import PellTriple, power_of_generator
from .primality import Outcome, Reason, Verdict, pell_test, pell_test_variant, strong_test

BACKEND = _kernels.NAME

__all__ = [
    "BACKEND",
    "MulCounter",
    "OddModulus",
    "Outcome",
    "PellTriple",
    "Reason",
    "Residue",
    "Verdict",
    "is_prime_oracle",
    "pell_test",
    "pell_test_variant",
    "power_of_generator",
    "sieve_upto",
    "strong_test",
]
