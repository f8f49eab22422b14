"""Cross-diameter identities between the Krawtchouk-type families.

These are pure univariate polynomial statements relating the family for
diameter d to the family for diameter d-2 and the smaller spectrum
polynomial.  Everything is decided by exact coefficient comparison; a
negative index always denotes the zero polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .hypercube import krawtchouk_polys, spectrum_poly
from .polys import RationalPoly


def _member(family: tuple[RationalPoly, ...], j: int) -> RationalPoly:
    if j < 0:
        return RationalPoly.zero()
    return family[j]


@dataclass(frozen=True)
class PhiImageReport:
    """Per-index outcome of the descent identities for one diameter."""

    d: int
    branch_results: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return all(self.branch_results)

    def failing_indices(self) -> tuple[int, ...]:
        return tuple(i for i, ok in enumerate(self.branch_results) if not ok)


def verify_phi_images(d: int) -> PhiImageReport:
    """Check how each F_i^(d) descends to the diameter d-2 data.

    For 0 <= i <= d the expected identity is:
        i in {0, 1}:       F_i^(d) = 1 resp. z
        2 <= i <= d-2:     F_i^(d) = F_i^(d-2) - F_{i-2}^(d-2)
        i = d-1:           F_{d-1}^(d) = Phi_{d-2}/(d-1)! - F_{d-3}^(d-2)
        i = d:             F_d^(d) = z Phi_{d-2}/d! - F_{d-2}^(d-2)
    with the last two taking precedence when indices collide (they agree
    with the general branches where both apply).
    """
    if d < 2:
        raise ValueError("descent identities require d >= 2")
    big = krawtchouk_polys(d)
    small = krawtchouk_polys(d - 2)
    phi_small = spectrum_poly(d - 2)
    results = []
    for i in range(d + 1):
        if i == d:
            expect = RationalPoly.x() * phi_small * Fraction(1, math.factorial(d))
            expect = expect - _member(small, d - 2)
        elif i == d - 1:
            expect = phi_small * Fraction(1, math.factorial(d - 1))
            expect = expect - _member(small, d - 3)
        elif i == 0:
            expect = RationalPoly.one()
        elif i == 1:
            expect = RationalPoly.x()
        else:
            expect = _member(small, i) - _member(small, i - 2)
        results.append(big[i] == expect)
    return PhiImageReport(d, tuple(results))


def verify_phi_factorial(dmax: int) -> bool:
    """Phi_d = (d+1)! F_{d+1} for every 1 <= d <= dmax."""
    if dmax < 1:
        raise ValueError("dmax must be at least 1")
    for d in range(1, dmax + 1):
        family = krawtchouk_polys(d)
        if spectrum_poly(d) != family[d + 1] * math.factorial(d + 1):
            return False
    return True
