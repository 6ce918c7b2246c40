# Copyright (C) 2026 The ArithDyn Development Team

import pytest
from arithdyn.linalg.basic import InputError, HypothesisError
from arithdyn.linalg.ratmat import ratMatrix
import arithdyn.toric.toric_endo as toric_endo
from arithdyn.toric.toric_endo import latticeEndo

ROTATION = [[0, -1], [1, -1]]
SWAP = [[0, 1], [1, 0]]


def test_check_compatible(p1xp1, p2):
    assert toric_endo.check_compatible(ratMatrix.diag([2, 3]), p1xp1) == \
        (True, None)
    ok, witness = toric_endo.check_compatible(ratMatrix.diag([2, 3]), p2)
    assert not ok
    assert witness['cone'] == 1
    assert witness['images'] == [[0, 3], [-2, -3]]


def test_construction_errors(p2):
    with pytest.raises(HypothesisError) as err:
        latticeEndo(ratMatrix.diag([2, 3]), p2, check=True)
    assert err.value.citation == 'cone-preservation'
    with pytest.raises(InputError):
        latticeEndo([[1, 0], [0, 0]], p2)
    with pytest.raises(InputError):
        latticeEndo([[1, 0, 0], [0, 1, 0], [0, 0, 1]], p2)
    with pytest.raises(InputError):
        latticeEndo(ratMatrix.parse('1/2,0;0,1'), p2)


def test_ray_permutation_of_a_swap(p1xp1):
    endo = latticeEndo(SWAP, p1xp1)
    assert toric_endo.ray_permutation(endo) == ((2, 3, 0, 1), (1, 1, 1, 1))
    assert toric_endo.cycle_lengths((2, 3, 0, 1)) == [2, 2]
    assert toric_endo.stabilizing_power(endo) == 2


def test_ray_permutation_of_a_scaling(p1xp1):
    endo = latticeEndo(ratMatrix.diag([2, 3]), p1xp1)
    assert toric_endo.ray_permutation(endo) == ((0, 1, 2, 3), (2, 2, 3, 3))
    assert toric_endo.stabilizing_power(endo) == 1


def test_ray_permutation_requires_ray_to_ray(p1xp1):
    shear = latticeEndo([[1, 1], [0, 1]], p1xp1)
    with pytest.raises(HypothesisError) as err:
        toric_endo.ray_permutation(shear)
    assert err.value.citation == 'iterationlemma'


def test_rotation_of_p2(p2):
    endo = latticeEndo(2 * ratMatrix.from_rows(ROTATION), p2)
    assert toric_endo.ray_permutation(endo) == ((1, 2, 0), (2, 2, 2))
    assert toric_endo.stabilizing_power(endo) == 3
    dec = toric_endo.eigen_fan_decomposition(endo)
    assert dec.stabilizing_power == 3
    assert dec.eigenvalues() == [8]
    assert dec.lattice_index == 1


def test_decomposition_of_p1xp1(p1xp1):
    endo = latticeEndo(ratMatrix.diag([2, 3]), p1xp1)
    dec = toric_endo.eigen_fan_decomposition(endo)
    assert dec.eigenvalues() == [2, 3]
    assert [fac.ray_indices for fac in dec.factors] == [(0, 1), (2, 3)]
    assert [fac.basis for fac in dec.factors] == [[(1, 0)], [(0, 1)]]
    assert all(fac.fan.signature() == (1, 2, 2) for fac in dec.factors)
    assert dec.warnings == []
    assert dec.to_json()['factors'][1]['eigenvalue'] == 3


def test_decomposition_of_p2xp1(p2xp1):
    endo = latticeEndo(ratMatrix.diag([2, 2, 3]), p2xp1)
    dec = toric_endo.eigen_fan_decomposition(endo)
    assert dec.eigenvalues() == [2, 3]
    assert dec.factors[0].fan.signature() == (2, 3, 3)
    assert dec.factors[1].ray_indices == (3, 4)


def test_uniform_scaling_gives_one_factor(hirzebruch2):
    endo = latticeEndo(2 * ratMatrix.identity(2), hirzebruch2)
    dec = toric_endo.eigen_fan_decomposition(endo)
    assert dec.eigenvalues() == [2]
    assert dec.factors[0].ray_indices == (0, 1, 2, 3)


def test_decomposition_rejects_incompatible_maps(p2):
    with pytest.raises(HypothesisError):
        toric_endo.eigen_fan_decomposition(latticeEndo(ratMatrix.diag([2, 3]),
                                                       p2))


def test_is_simple(p2, p1xp1, hirzebruch2, p2xp1):
    assert toric_endo.is_simple(p2) == (True, None)
    assert toric_endo.is_simple(hirzebruch2) == (True, None)
    assert toric_endo.is_simple(p1xp1) == (False, ((0, 1), (2, 3)))
    assert toric_endo.is_simple(p2xp1) == (False, ((0, 1, 2), (3, 4)))


def test_split_fan_rejects_bad_groups(p1xp1):
    with pytest.raises(InputError):
        toric_endo.split_fan(p1xp1, [[0, 1], [2]])
    with pytest.raises(HypothesisError):
        toric_endo.split_fan(p1xp1, [[0, 2], [1, 3]])


def test_nonpolarized_witness(p1xp1, p2xp1):
    dec = toric_endo.split_fan(p1xp1, [[0, 1], [2, 3]])
    endo = toric_endo.nonpolarized_witness(dec, 2, 3)
    assert endo.matrix == ratMatrix.diag([2, 3])
    dec = toric_endo.split_fan(p2xp1, [[0, 1, 2], [3, 4]])
    endo = toric_endo.nonpolarized_witness(dec, 5, 2)
    assert endo.matrix == ratMatrix.diag([5, 5, 2])
    with pytest.raises(InputError):
        toric_endo.nonpolarized_witness(dec, 2, 2)


def test_simplicity_crosscheck(p1xp1, p2):
    endos = [latticeEndo(ratMatrix.diag([2, 3]), p1xp1),
             latticeEndo(SWAP, p1xp1)]
    out = toric_endo.simplicity_crosscheck(p1xp1, endos)
    assert not out['simple'] and out['consistent']
    assert [r['fixes_rays'] for r in out['endomorphisms']] == [True, False]
    out = toric_endo.simplicity_crosscheck(
        p2, [latticeEndo(3 * ratMatrix.identity(2), p2)])
    assert out['simple'] and out['consistent']


def test_compose_and_power(p1xp1):
    a = latticeEndo(ratMatrix.diag([2, 3]), p1xp1)
    b = latticeEndo(SWAP, p1xp1)
    assert a.compose(b).matrix == ratMatrix.from_rows([[0, 2], [3, 0]])
    assert b.power(2).matrix == ratMatrix.identity(2)
    assert a.apply((1, 1)) == (2, 3)
