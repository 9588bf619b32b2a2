from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistroots.rootcalc import (
    ExponentPair,
    HalfTwistWitness,
    TwistLedger,
    exponent_image,
    geometric_ledger,
    half_twist_ledger,
    half_twist_witness,
    ledger_check,
    presentation_invariants,
    relation_invariants,
    root_exponents,
    root_order,
    separating_ledger,
    verify_root_identity,
)


def test_image_of_twist():
    assert exponent_image(ExponentPair(0, 1), 2) == 3


@pytest.mark.parametrize("g", range(2, 11))
def test_defining_relation_images_agree(g):
    assert exponent_image(ExponentPair(2 * g - 1, 0), g) == exponent_image(ExponentPair(0, 2), g)


def test_root_power_image_g5():
    root = ExponentPair(1 - 5, 1)
    total = sum(exponent_image(root, 5) for _ in range(9))
    assert total == 9 == exponent_image(ExponentPair(0, 1), 5)


@pytest.mark.parametrize("g", range(2, 51))
def test_root_identity(g):
    assert verify_root_identity(g)
    assert root_order(g) == 2 * g - 1
    assert root_exponents(g) == (1 - g, 1)
    # arithmetic oracle
    assert (2 * g - 1) * ((1 - g) * 2 + (2 * g - 1)) == 2 * g - 1


@pytest.mark.parametrize("g", range(2, 51))
def test_presentation_is_infinite_cyclic(g):
    factors, free_rank = presentation_invariants(g)
    assert factors == (gcd(2 * g - 1, 2),) == (1,)
    assert free_rank == 1


def test_non_injective_control():
    assert relation_invariants([[4, -2]]) == ((2,), 1)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_invariant_factor_of_one_relation_is_gcd(a, b):
    factors, free_rank = relation_invariants([[a, b]])
    if a == b == 0:
        assert factors == () and free_rank == 2
    else:
        assert factors == (gcd(a, b),) and free_rank == 1


def test_invalid_genus():
    with pytest.raises(ValueError):
        exponent_image(ExponentPair(0, 1), 1)
    with pytest.raises(ValueError):
        verify_root_identity(1)


def test_separating_ledger():
    ledger = separating_ledger()
    assert ledger.contributions == (Fraction(1, 2),)
    assert ledger_check(ledger)


def test_geometric_ledger_g2():
    ledger = geometric_ledger(2)
    assert ledger.contributions == (Fraction(2, 3), Fraction(-1, 3))
    assert ledger.applications == 3
    assert ledger_check(ledger)


def test_half_twist_ledger_g2():
    ledger = half_twist_ledger(2)
    assert ledger == TwistLedger((Fraction(1, 2), Fraction(-1, 3)), 3, Fraction(1, 2))
    assert ledger.net == Fraction(1, 2)
    assert ledger_check(ledger)


@pytest.mark.parametrize("g", range(2, 11))
def test_closed_form_ledgers(g):
    assert ledger_check(geometric_ledger(g))
    assert ledger_check(half_twist_ledger(g))


def test_ledger_rejects_wrong_target():
    assert not ledger_check(TwistLedger((Fraction(1, 3),), 2, 1))
    assert not ledger_check(TwistLedger((Fraction(2, 3), Fraction(1, 3)), 3, 1))


@given(st.integers(1, 100))
def test_degenerate_ledger(apps):
    assert ledger_check(TwistLedger((Fraction(1, 5), Fraction(-1, 5)), apps, 0))


def test_ledger_fractions_lowest_terms():
    ledger = TwistLedger((Fraction(2, 4), 0.5), 2)
    assert ledger.contributions == (Fraction(1, 2), Fraction(1, 2))
    assert ledger.contributions[0].denominator == 2


@pytest.mark.parametrize(
    "n, expected",
    [
        (6, HalfTwistWitness(3, 1, 1)),
        (7, HalfTwistWitness(5, 2, 0)),
        (8, HalfTwistWitness(5, 2, 1)),
        (5, HalfTwistWitness(3, 1, 0)),
    ],
)
def test_half_twist_witness_examples(n, expected):
    assert half_twist_witness(n) == expected


@pytest.mark.parametrize("n", range(5, 41))
def test_half_twist_witness_exists(n):
    w = half_twist_witness(n)
    assert w.q % 2 == 1 and w.q > 1
    assert w.q + w.central == n - 2
    assert gcd(w.p, w.q) == 1
    assert ledger_check(w.ledger())
    # even n = 2g + 2 reproduces q = 2g - 1, p = g - 1 with a central puncture
    if n % 2 == 0:
        g = (n - 2) // 2
        assert (w.q, w.p, w.central) == (2 * g - 1, g - 1, 1)
    else:
        assert w.central == 0


def test_half_twist_witness_needs_five_punctures():
    with pytest.raises(ValueError):
        half_twist_witness(4)
