"""Largest prime factors of shifted primes.

Segmented sieves, exact threshold statistics T_c(x) / T'_c(x), Dickman's rho,
and twin-prime-type sieve bounds. Everything heavy lives in the compiled
extension; this package just re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, __version__  # noqa: F401
