"""Linear forms in odd zeta values: exact coefficients and high-precision numerics.

Rationals come back as fractions.Fraction, reals as decimal.Decimal carrying
every digit justified by the requested binary precision.
"""

import json
from decimal import Decimal
from fractions import Fraction

from . import _core
from ._core import ConsistencyError, ConvergenceError, PreconditionError, VerificationError

__all__ = [
    "ConsistencyError",
    "ConvergenceError",
    "PreconditionError",
    "VerificationError",
    "S_direct",
    "S_via_zeta",
    "asymptotics",
    "contour_S",
    "delta",
    "eliminate",
    "final_exponent",
    "kappa",
    "partial_fractions",
    "phi",
    "predict_S",
    "q_coefficients",
    "rho0",
]

DEFAULT_PREC = 256


def _complex(pair):
    re, im = pair
    return Decimal(re), Decimal(im)


def partial_fractions(n, A=68):
    """p[j][m] for j = 1..A (key j) and m = 0..n (list index)."""
    doc = json.loads(_core.partial_fractions(n, A))
    return {j + 1: [Fraction(x) for x in row] for j, row in enumerate(doc["p"])}


def q_coefficients(n, A=68):
    doc = json.loads(_core.q_coefficients(n, A))
    return {
        "q0": Fraction(doc["q0"]),
        "q0_hat": Fraction(doc["q0_hat"]),
        "q": {int(j): Fraction(v) for j, v in doc["q"].items()},
    }


def eliminate(n, A, m):
    doc = json.loads(_core.eliminate(n, A, m))
    return {"c0": Fraction(doc["c0"]), "c": {int(j): Fraction(v) for j, v in doc["c"].items()}}


def S_direct(n, A=68, which="plain", prec=DEFAULT_PREC):
    return Decimal(_core.S_direct(n, A, which, prec))


def S_via_zeta(n, A=68, which="plain", prec=DEFAULT_PREC):
    return Decimal(_core.S_via_zeta(n, A, which, prec))


def delta(prec=DEFAULT_PREC):
    return Decimal(_core.delta(prec))


def kappa(A=68, prec=DEFAULT_PREC):
    return Decimal(_core.kappa(A, prec))


def final_exponent(prec=DEFAULT_PREC):
    return Decimal(_core.final_exponent(prec))


def asymptotics(A=68, prec=DEFAULT_PREC):
    """Saddle data and constants as the JSON document the CLI prints."""
    return json.loads(_core.asymptotics(A, prec))


def predict_S(n, A=68, which="plain", prec=DEFAULT_PREC):
    """(re, im) of the saddle-point prediction."""
    return _complex(_core.predict_S(A, n, which, prec))


def contour_S(n, A, which="plain", c="3/4", rel_tol=1e-30, prec=DEFAULT_PREC):
    doc = json.loads(_core.contour_S(n, A, which, str(c), rel_tol, prec))
    doc["value"] = (Decimal(doc["value"]["re"]), Decimal(doc["value"]["im"]))
    return doc


def phi(n):
    doc = json.loads(_core.phi(n))
    return {
        "d_n": int(doc["d_n"]),
        "phi_n": int(doc["phi_n"]),
        "phi_factorization": {int(p): int(e) for p, e in doc["phi_factorization"].items()},
    }


def rho0(x):
    return _core.rho0(str(Fraction(x)))
