"""Exact verification of signed Mahonian identities.

Statistics, signed and character-twisted distribution polynomials over the
classical reflection groups S_n, B_n, D_n and the wreath products G(r, n),
with exact coefficients in the cyclotomic integers, plus a catalog of
product-formula identities and a brute-force verifier that certifies them.

>>> import mahon
>>> pi = mahon.Element(2, "-3 1 -6 2 -5 -4")
>>> mahon.stat("lenb", pi)
26
>>> mahon.verify("B.dist.len", n=3)["verdict"]
'equal'
"""

from ._mahon import (
    ArithmeticOverflow,
    ConstraintError,
    Cyc,
    DomainError,
    Element,
    ParseError,
    Poly,
    RingMismatchError,
    UnknownIdentityError,
    __version__,
    compose,
    decompose,
    distribution,
    identities,
    omega,
    q_bracket,
    selftest,
    stat,
    verify,
    verify_range,
)

__all__ = [
    "ArithmeticOverflow",
    "ConstraintError",
    "Cyc",
    "DomainError",
    "Element",
    "ParseError",
    "Poly",
    "RingMismatchError",
    "UnknownIdentityError",
    "__version__",
    "compose",
    "decompose",
    "distribution",
    "identities",
    "omega",
    "q_bracket",
    "selftest",
    "stat",
    "verify",
    "verify_range",
]
