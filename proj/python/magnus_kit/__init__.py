"""Normal closures in groups <a, b, y | [a^k, b] u v>.

Words are strings in the usual grammar: whitespace separated tokens
``name``, ``name^-1``, ``name[i]`` or ``name[i]^-1``.
"""

from ._core import (
    MagnusError,
    Presentation,
    Verdict,
    canonicalize,
    conjugate_free,
    free_magnus,
    is_trivial,
    magnus_same_closure,
    nc_member_bounded,
    reduce,
    rs_rewrite,
    specialize,
    verify_certificate,
    verify_free_certificate,
    width,
)

__all__ = [
    "MagnusError",
    "Presentation",
    "Verdict",
    "canonicalize",
    "conjugate_free",
    "free_magnus",
    "is_trivial",
    "magnus_same_closure",
    "nc_member_bounded",
    "reduce",
    "rs_rewrite",
    "specialize",
    "verify_certificate",
    "verify_free_certificate",
    "width",
]
