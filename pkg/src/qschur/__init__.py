"""Exact models of quantum osp(1|2), its q-Schur algebra quotients, weight
modules, and the modified (idempotented) forms, over Z[i][v, v^-1].

Everything is computed symbolically and exactly; every algebraic identity the
package claims is checkable by running the verification suites exposed through
``qschur.cli`` (console script ``qschur``).
"""

from qschur.coeff import (
    GaussianInt,
    GaussianLaurent,
    NotDivisible,
    RationalFunction,
    qbinom_v,
    qbinom_vt,
    qfact_v,
    qfact_vt,
    qint_v,
    qint_vt,
)

__all__ = [
    "GaussianInt",
    "GaussianLaurent",
    "NotDivisible",
    "RationalFunction",
    "qbinom_v",
    "qbinom_vt",
    "qfact_v",
    "qfact_vt",
    "qint_v",
    "qint_vt",
]

__version__ = "0.1.0"
