# Copyright (C) 2026 The ArithDyn Development Team

import logging
import math
from fractions import Fraction
import pytest
import arithdyn.util as util
from arithdyn.linalg.basic import InputError, CapacityError, BudgetError
import arithdyn.dynamics.elliptic as elliptic
from arithdyn.dynamics.elliptic import weierstrassCurve, ePoint

E = weierstrassCurve(0, -2)
P = ePoint(E, 3, 5)
O = ePoint.infinity(E)


def test_curve_validation():
    assert E.discriminant == -16 * 27 * 4
    with pytest.raises(InputError):
        weierstrassCurve(-3, 2)
    with pytest.raises(InputError):
        weierstrassCurve.parse('1')
    assert weierstrassCurve.parse('0,-2') == E


def test_points():
    assert ePoint.parse(E, '3,5') == P
    assert ePoint.parse(E, 'inf').is_infinity
    assert elliptic.on_curve(E, 3, -5)
    with pytest.raises(InputError):
        ePoint(E, 1, 1)
    assert P.to_json() == [['3', '1'], ['5', '1']]
    assert O.to_json() == 'inf'


def test_doubling():
    assert elliptic.ec_double(P) == ePoint(E, Fraction(129, 100),
                                           Fraction(-383, 1000))


def test_group_law():
    assert P + O == P and O + P == P
    assert (P + (-P)).is_infinity
    two, three = elliptic.ec_multiply(2, P), elliptic.ec_multiply(3, P)
    assert three == two + P
    assert (P + two) + three == P + (two + three)
    assert elliptic.ec_multiply(-1, P) == -P
    assert elliptic.ec_multiply(0, P).is_infinity
    assert elliptic.ec_multiply(6, P) == three + three


def test_points_on_different_curves():
    with pytest.raises(InputError):
        elliptic.ec_add(P, ePoint(weierstrassCurve(0, 1), 2, 3))


def test_torsion():
    E1 = weierstrassCurve(-1, 0)
    assert elliptic.torsion_order(ePoint(E1, 0, 0)) == 2
    E2 = weierstrassCurve(0, 1)
    assert elliptic.torsion_order(ePoint(E2, 2, 3)) == 6
    assert elliptic.torsion_order(ePoint(E2, 0, 1)) == 3
    assert elliptic.torsion_order(O) == 1
    assert elliptic.torsion_order(P) is None
    assert not elliptic.is_torsion(P)


def test_naive_height():
    assert elliptic.naive_height(P) == pytest.approx(math.log(3))
    assert elliptic.naive_height(elliptic.ec_double(P)) == \
        pytest.approx(math.log(129))
    assert elliptic.naive_height(O) == 0.0


def test_canonical_height_of_torsion_points():
    E2 = weierstrassCurve(0, 1)
    assert elliptic.canonical_height(ePoint(E2, 2, 3)) == (0.0, 0.0)
    assert elliptic.canonical_height(O) == (0.0, 0.0)


def test_canonical_height_is_quadratic():
    h, e = elliptic.canonical_height(P, 8)
    h2, e2 = elliptic.canonical_height(elliptic.ec_double(P), 8)
    assert h > 0
    assert abs(h2 - 4 * h) <= e2 + 4 * e
    assert e < 1e-3


def test_canonical_height_depth_cap():
    with pytest.raises(CapacityError):
        elliptic.canonical_height(P, util.MAX_DEPTH + 1)
    with pytest.raises(InputError):
        elliptic.canonical_height(P, 0)


def test_canonical_height_budget():
    with pytest.raises(BudgetError):
        elliptic.canonical_height(P, 10, budget=20)


def test_exe_classify_values():
    alphas = {}
    for label, (X, Y) in (('P,O', (P, O)), ('O,P', (O, P)), ('O,O', (O, O)),
                          ('P,P', (P, P))):
        rep = elliptic.exe_classify(2, 3, X, Y, depth=6)
        assert rep['cross_check']['agrees']
        alphas[label] = (rep['alpha'], rep['label'])
    assert alphas == {'P,O': (4, 'a^2'), 'O,P': (9, 'b^2'),
                      'O,O': (1, '1'), 'P,P': (9, 'b^2')}


def test_exe_classify_logs_the_cm_assumption(caplog):
    caplog.set_level(logging.WARNING, logger='arithdyn.dynamics.elliptic')
    rep = elliptic.exe_classify(2, 3, P, O, depth=4)
    assert rep['non_cm_asserted']
    assert rep['citation'] == 'ExE'
    assert 'complex multiplication' in caplog.text


def test_exe_classify_arguments():
    with pytest.raises(InputError):
        elliptic.exe_classify(0, 3, P, O)
