"""Named built-in instances.

G2D5 is the canonical genus-2, degree-5 pair f = (x^2+1)^2 - x^5 with
certificate (a, t) = (x^2 + 1, 0).  G3D7 and G5D11 are the pinned outputs of
generate_instance(genus, seed=1, height=2); the literals are frozen here so
tests and reports do not depend on re-running the generator, and a test
asserts the generator still reproduces them.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import HyperellipticCurve, TorsionCertificate, make_curve
from .polys import QPoly

GENERATOR_PINS = {"G3D7": (3, 1, 2), "G5D11": (5, 1, 2)}


def _instance(a_coeffs, t, d):
    a = QPoly(a_coeffs)
    t = Fraction(t)
    f = a * a - QPoly([-t, 1]) ** d
    return make_curve(f), TorsionCertificate(a=a, t=t, d=d)


_BUILTINS = {
    "G2D5": lambda: _instance([1, 0, 1], 0, 5),
    "G3D7": lambda: _instance([-1, 2, -2], -2, 7),
    "G5D11": lambda: _instance([-1, 2, -2, 0, -2, 1], 1, 11),
}


def instance_names() -> list[str]:
    return sorted(_BUILTINS)


def named_instance(name: str) -> tuple[HyperellipticCurve, TorsionCertificate]:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(instance_names())}") from None
