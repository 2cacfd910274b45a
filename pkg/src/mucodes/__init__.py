"""Constrained address codes for DNA-based data storage.

Construct, verify, bound, and use mutually uncorrelated (MU) and
kappa-weakly mutually uncorrelated (WMU) codes with optional GC-balance,
minimum-distance, and primer-dimer-avoidance constraints.
"""

__version__ = "0.1.0"

from .seqcore import (  # noqa: F401
    Alphabet,
    BINARY,
    DNA,
    ConstraintProfile,
    Seq,
    complement,
    from_str,
    hamming_distance,
    is_balanced,
    psi,
    psi_inverse,
    reverse,
    seq,
)
from .constructions import Code  # noqa: F401
