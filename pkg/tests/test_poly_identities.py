"""Tests for the cross-diameter polynomial identities."""

from fractions import Fraction

import pytest

from terwalg.hypercube import krawtchouk_polys, spectrum_poly
from terwalg.poly_identities import verify_phi_factorial, verify_phi_images
from terwalg.polys import RationalPoly


def test_images_d2():
    rep = verify_phi_images(2)
    assert rep.d == 2
    assert len(rep.branch_results) == 3
    assert rep.passed
    assert rep.failing_indices() == ()


def test_images_small_range():
    for d in range(2, 17):
        assert verify_phi_images(d).passed, d


def test_images_require_d_at_least_2():
    with pytest.raises(ValueError):
        verify_phi_images(1)


def test_unrolled_middle_branch_d4():
    # F_2^(4) = (z^2-4)/2 and F_2^(2) - F_0^(2) gives the same polynomial.
    f4 = krawtchouk_polys(4)
    f2 = krawtchouk_polys(2)
    expected = RationalPoly((-2, 0, Fraction(1, 2)))
    assert f4[2] == expected
    assert f2[2] - f2[0] == expected


def test_unrolled_top_branch_d2():
    # F_2^(2) = z*Phi_0/2! - F_0^(0) = z^2/2 - 1.
    f2 = krawtchouk_polys(2)
    lhs = RationalPoly.x() * spectrum_poly(0) * Fraction(1, 2) - RationalPoly.one()
    assert f2[2] == lhs == RationalPoly((-1, 0, Fraction(1, 2)))


def test_factorial_identity_small_cases():
    assert krawtchouk_polys(1)[2] * 2 == spectrum_poly(1) == RationalPoly((-1, 0, 1))
    assert krawtchouk_polys(2)[3] * 6 == spectrum_poly(2) == RationalPoly((0, -4, 0, 1))


def test_factorial_identity_range():
    assert verify_phi_factorial(16)


def test_factorial_requires_positive_range():
    with pytest.raises(ValueError):
        verify_phi_factorial(0)
