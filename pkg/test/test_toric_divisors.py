# Copyright (C) 2026 The ArithDyn Development Team

from fractions import Fraction
import pytest
import arithdyn.util as util
from arithdyn.linalg.basic import InputError, HypothesisError, \
    CapacityError, BudgetError
from arithdyn.linalg.ratmat import ratMatrix
from arithdyn.toric.fan import fan
import arithdyn.toric.fan as fan_mod
from arithdyn.toric.toric_endo import latticeEndo
import arithdyn.toric.toric_divisors as td
from arithdyn.toric.toric_divisors import tDivisor

SWAP = [[0, 1], [1, 0]]
ROTATION = [[0, -1], [1, -1]]


def test_cartier_data_on_p2(p2):
    data = td.cartier_data(p2, tDivisor.ray(p2, 0))
    assert data == [(-1, 0), (0, 0), (-1, 1)]


def test_cartier_data_needs_simplicial_cones():
    f = fan(2, [(1, 0), (0, 1), (1, 1), (-1, 0)], [(0, 1, 2), (1, 3)])
    with pytest.raises(InputError):
        td.cartier_data(f, [1, 0, 0, 0])


def test_support_value(p2):
    d = tDivisor.ray(p2, 0)
    assert td.support_value(p2, d, (1, 0)) == -1
    assert td.support_value(p2, d, (0, 0)) == 0
    assert td.support_value(p2, d, (-1, -1)) == 0
    assert td.support_value(p2, d, (1, -1)) == -2
    assert td.support_value(p2, d, (Fraction(1, 2), 0)) == Fraction(-1, 2)


def test_support_value_outside_the_support(p2):
    half = fan(2, p2.rays, [(0, 1)])
    with pytest.raises(InputError):
        td.support_value(half, [1, 0, 0], (-1, 0))


def test_support_value_is_linear_on_principal_divisors(p2xp1):
    d = tDivisor.principal(p2xp1, (1, -2, 3))
    for v in util.random_lattice_points(30, 3, 4, seed=1):
        assert td.support_value(p2xp1, d, v) == -(v[0] - 2 * v[1] + 3 * v[2])


def test_divisor_arithmetic(p2):
    d0, d1 = tDivisor.ray(p2, 0), tDivisor.ray(p2, 1)
    assert (d0 + d1).coeffs == (1, 1, 0)
    assert (d0 - d0).is_zero()
    assert (2 * d0) == d0 + d0
    assert (d0 * Fraction(1, 2)).coeffs[0] == Fraction(1, 2)
    with pytest.raises(InputError):
        tDivisor(p2, [1, 0])


def test_pullback_divisor_under_scaling(p2):
    endo = latticeEndo(2 * ratMatrix.identity(2), p2)
    assert td.pullback_divisor(endo, tDivisor.ray(p2, 0)) == \
        2 * tDivisor.ray(p2, 0)


def test_class_group_of_p2(p2):
    cg = td.class_group(p2)
    assert cg.rank == 1
    assert cg.torsion == []
    assert cg.pivot_rays == (0, 1)
    assert cg.basis_labels() == ['D2']
    assert cg.coordinates(tDivisor.ray(p2, 0)) == (1,)
    assert cg.is_principal(tDivisor.principal(p2, (1, 2)))
    assert cg.divisor((3,)) == 3 * tDivisor.ray(p2, 2)


def test_class_group_of_p1xp1(p1xp1):
    cg = td.class_group(p1xp1)
    assert cg.section_rays == (1, 3)
    assert cg.basis_labels() == ['D1', 'D3']
    assert cg.coordinates(tDivisor.ray(p1xp1, 0)) == (1, 0)
    assert cg.coordinates(tDivisor.ray(p1xp1, 2)) == (0, 1)


def test_class_group_with_torsion():
    quotient = fan(2, [(2, -1), (-1, 2), (-1, -1)], [(0, 1), (1, 2), (0, 2)])
    cg = td.class_group(quotient)
    assert cg.rank == 1
    assert cg.torsion == [3]
    assert cg.to_json()['smith_diagonal'] == [1, 3]


def test_class_group_degenerate_span():
    line = fan(2, [(1, 0), (-1, 0)], [(0,), (1,)])
    with pytest.raises(InputError):
        td.class_group(line)


def test_nef_on_hirzebruch(hirzebruch2):
    flags = [td.is_nef(hirzebruch2, tDivisor.ray(hirzebruch2, i))
             for i in range(4)]
    assert flags == [True, False, True, True]


def test_nef_cone_rays(p2, p1xp1):
    assert td.nef_cone_rays(p2) == [(1,)]
    assert td.nef_cone_rays(p1xp1) == [(1, 0), (0, 1)]
    assert td.nef_inequalities(p2) == [(1,)]


def test_nef_cone_rays_bound_the_nef_divisors(hirzebruch2):
    cg = td.class_group(hirzebruch2)
    rays = td.nef_cone_rays(hirzebruch2)
    assert len(rays) == 2
    for r in rays:
        assert td.is_nef(hirzebruch2, cg.divisor(r))
    first, second = rays
    for inside, outside in ((first, second), (second, first)):
        pushed = [10 * a - b for a, b in zip(inside, outside)]
        assert not td.is_nef(hirzebruch2, cg.divisor(pushed))
    mid = [a + b for a, b in zip(first, second)]
    assert td.is_nef(hirzebruch2, cg.divisor(mid))


def test_nef_cone_rank_cap(monkeypatch, p2xp1):
    monkeypatch.setattr(util, 'MAX_NEF_RANK', 1)
    with pytest.raises(CapacityError):
        td.nef_cone_rays(p2xp1)


def test_pullback_matrix_diagonal(p1xp1):
    action = td.pullback_matrix(latticeEndo(ratMatrix.diag([2, 3]), p1xp1))
    assert action.matrix == ratMatrix.diag([2, 3])
    assert action.source == 'equivariant'
    assert action.warnings == []
    assert action.nef_flags[3] == (True, (0, 1))
    assert action.nef_flags[2] == (True, (1, 0))


def test_pullback_matrix_swap_and_scalar(p1xp1, p2xp1):
    action = td.pullback_matrix(latticeEndo(SWAP, p1xp1))
    assert action.matrix == ratMatrix.from_rows(SWAP)
    action = td.pullback_matrix(latticeEndo(3 * ratMatrix.identity(3),
                                            p2xp1))
    assert action.matrix == 3 * ratMatrix.identity(2)


def test_pullback_is_contravariant(p1xp1):
    diag = latticeEndo(ratMatrix.diag([2, 3]), p1xp1)
    swap = latticeEndo(SWAP, p1xp1)
    lhs = td.pullback_matrix(diag.compose(swap)).matrix
    rhs = td.pullback_matrix(swap).matrix * td.pullback_matrix(diag).matrix
    assert lhs == rhs


def test_pullback_composes_with_support_function(hirzebruch2):
    endo = latticeEndo(2 * ratMatrix.identity(2), hirzebruch2)
    d = tDivisor(hirzebruch2, [1, -2, 3, Fraction(1, 2)])
    pulled = td.pullback_divisor(endo, d)
    for v in util.random_lattice_points(40, 2, 5, seed=3):
        assert td.support_value(hirzebruch2, pulled, v) == \
            td.support_value(hirzebruch2, d, endo.apply(v))


def test_pullback_matrix_requires_compatibility(p2):
    with pytest.raises(HypothesisError) as err:
        td.pullback_matrix(latticeEndo(ratMatrix.diag([2, 3]), p2))
    assert err.value.citation == 'cone-preservation'


def test_potential_degrees_rational(p1xp1):
    action = td.pullback_matrix(latticeEndo(ratMatrix.diag([2, 3]), p1xp1))
    degrees = td.potential_arithmetic_degrees(action)
    assert [d['eigenvalue'] for d in degrees] == [3, 2]
    assert [d['modulus'] for d in degrees] == [3.0, 2.0]
    assert all(d['rational'] and d['nef_eigendivisor'] for d in degrees)
    assert degrees[0]['witness'] == (0, 1)


def test_potential_degrees_of_an_iterate(p1xp1):
    diag = latticeEndo(ratMatrix.diag([2, 3]), p1xp1)
    degrees = td.potential_arithmetic_degrees(td.pullback_matrix(
        diag.power(2)))
    assert [d['eigenvalue'] for d in degrees] == [9, 4]


def test_potential_degrees_of_a_large_scalar(p2xp1):
    endo = latticeEndo(1009 * ratMatrix.identity(3), p2xp1)
    degrees = td.potential_arithmetic_degrees(td.pullback_matrix(endo))
    assert [d['eigenvalue'] for d in degrees] == [1009]
    assert degrees[0]['rational']


def test_potential_degrees_irrational(p1xp1):
    action = td.linear_action(p1xp1, ratMatrix.from_rows([[0, 1], [2, 0]]))
    assert action.source == 'linear'
    assert action.nef_flags == {}
    degrees = td.potential_arithmetic_degrees(action)
    assert len(degrees) == 1
    assert degrees[0]['modulus'] == pytest.approx(2 ** 0.5)
    assert degrees[0]['rational'] is False
    assert degrees[0]['eigenvalue'] is None
    assert degrees[0]['nef_eigendivisor'] is None


def test_nef_eigendivisor_statuses(p1xp1):
    action = td.linear_action(p1xp1, ratMatrix.from_rows([[2, 0], [0, -3]]))
    assert td.nef_eigendivisor(action, 2) == (True, (1, 0))
    # the -3 eigenline is spanned by D3, which is nef
    assert td.nef_eigendivisor(action, -3) == (True, (0, 1))
    assert td.nef_eigendivisor(action, 5) == (None, None)
    assert td.nef_eigendivisor(action, 2 ** 0.5) == (None, None)
    anti = td.linear_action(p1xp1, ratMatrix.from_rows([[1, 1], [1, 1]]))
    assert td.nef_eigendivisor(anti, 2) == (True, (1, 1))
    assert td.nef_eigendivisor(anti, 0) == (False, None)


def test_linear_action_shape(p1xp1):
    with pytest.raises(InputError):
        td.linear_action(p1xp1, ratMatrix.identity(3))


def test_non_integral_linear_action_warns(p2):
    action = td.linear_action(p2, ratMatrix.from_rows([[Fraction(5, 2)]]))
    assert action.warnings == ["pullback matrix has non-integral entries"]


def test_classify_action(p2, p1xp1):
    scalar = td.classify_action(td.pullback_matrix(
        latticeEndo(2 * ratMatrix.identity(2), p2)))
    assert scalar['int_amplified']
    assert scalar['scalar'] == ['2', '1']
    assert scalar['polarized_power'] == 1
    diag = td.classify_action(td.pullback_matrix(
        latticeEndo(ratMatrix.diag([2, 3]), p1xp1)))
    assert diag['int_amplified']
    assert diag['scalar'] is None
    assert diag['polarized_power'] is None
    assert diag['verdict'] == 'undetermined'
    swap = td.classify_action(td.pullback_matrix(latticeEndo(SWAP, p1xp1)))
    assert not swap['int_amplified']
    assert swap['polarized_power'] is None


def test_realizability_on_p1xp1(p1xp1):
    endo = latticeEndo(ratMatrix.diag([2, 3]), p1xp1)
    rep = td.realizability_report_equivariant(endo, 10)
    assert rep['stabilizing_power'] == 1
    assert [w['eigenvalue'] for w in rep['witnesses']] == [2, 3]
    assert [w['point'] for w in rep['witnesses']] == [[[2, 1], [1, 1]],
                                                      [[1, 1], [2, 1]]]
    for w in rep['witnesses']:
        assert w['kind'] == 'numeric'
        assert w['error'] < 1e-3


def test_realizability_through_an_iterate(p2):
    endo = latticeEndo(2 * ratMatrix.from_rows(ROTATION), p2)
    rep = td.realizability_report_equivariant(endo, 4)
    assert rep['stabilizing_power'] == 3
    (w,) = rep['witnesses']
    assert w['eigenvalue'] == 8
    assert w['point'] == [[2, 2, 1]]
    assert w['alpha'] == pytest.approx(2.0)
    assert w['estimate'] == pytest.approx(2.0)


def test_realizability_symbolic(hirzebruch2):
    endo = latticeEndo(2 * ratMatrix.identity(2), hirzebruch2)
    rep = td.realizability_report_equivariant(endo)
    (w,) = rep['witnesses']
    assert w['kind'] == 'symbolic (asserted by theorem)'
    assert rep['citation'] == 'equivariantrealizability'


def test_realizability_on_a_product_factor(p1xp1):
    cube = fan_mod.product(p1xp1, fan_mod.projective_space_fan(1))
    endo = latticeEndo(ratMatrix.diag([2, 2, 5]), cube)
    rep = td.realizability_report_equivariant(endo, 5)
    factors = rep['decomposition']['factors']
    assert [fac['eigenvalue'] for fac in factors] == [2, 5]
    assert [fac['fan']['dim'] for fac in factors] == [2, 1]
    assert [len(fac['fan']['rays']) for fac in factors] == [4, 2]
    assert [w['eigenvalue'] for w in rep['witnesses']] == [2, 5]
    assert [w['components'] for w in rep['witnesses']] == [[1, 1], [1]]
    assert [w['point'] for w in rep['witnesses']] == [
        [[2, 1], [2, 1], [1, 1]], [[1, 1], [1, 1], [2, 1]]]
    for w in rep['witnesses']:
        assert w['kind'] == 'numeric'
        assert w['estimate'] == pytest.approx(w['alpha'])
        assert w['error'] < 1e-6


def test_realizability_budget(p1xp1):
    endo = latticeEndo(ratMatrix.diag([2, 3]), p1xp1)
    with pytest.raises(BudgetError) as err:
        td.realizability_report_equivariant(endo, 12, budget=50)
    assert err.value.partial is not None
    assert not err.value.partial.complete
