# Copyright (C) 2026 The ArithDyn Development Team

import numpy as np
import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from arithdyn.linalg.basic import InputError
from arithdyn.linalg.ratmat import ratMatrix
from arithdyn.linalg import smith


def _check_snf(rows):
    m = ratMatrix.from_rows(rows)
    U, D, V = smith.smith_normal_form(m)
    assert U * m * V == D
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j:
                assert D[i, j] == 0
    nonzero = [x for x in diag if x != 0]
    assert all(x > 0 for x in nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    return D


def test_diagonal_example():
    D = _check_snf([[2, 0], [0, 3]])
    assert D == ratMatrix.diag([1, 6])
    assert smith.invariant_factors([[2, 0], [0, 3]]) == [1, 6]


def test_fan_ray_matrix():
    # rays of P^2; the class group is Z
    D = _check_snf([[1, 0], [0, 1], [-1, -1]])
    assert [D[i, i] for i in range(2)] == [1, 1]


def test_matches_sympy_on_random_matrices():
    state = np.random.RandomState(7)
    for _ in range(12):
        rows = state.randint(-6, 7, size=(3, 3)).tolist()
        if sympy.Matrix(rows).det() == 0:
            continue
        D = _check_snf(rows)
        theirs = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
        assert [abs(int(theirs[i, i])) for i in range(3)] == \
            [int(D[i, i]) for i in range(3)]


def test_rectangular_and_zero():
    _check_snf([[2, 4, 4], [-6, 6, 12]])
    D = _check_snf([[0, 0], [0, 0]])
    assert D == ratMatrix.zeros(2, 2)


def test_integer_kernel():
    basis = smith.integer_kernel([[1, 2, 3]])
    assert len(basis) == 2
    for v in basis:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    assert smith.lattice_index([basis, [(1, 2, 3)]], 3) == 14


def test_saturation_basis():
    assert smith.saturation_basis([(2, 0)], 2) == [(1, 0)]
    (v,) = smith.saturation_basis([(2, 2)], 2)
    assert v in ((1, 1), (-1, -1))
    assert smith.saturation_basis([], 3) == []


def test_quotient_map_kills_the_span():
    Q = smith.quotient_map([(1, 1)], 2)
    assert Q.shape == (1, 2)
    assert Q.apply((1, 1)) == (0,)
    assert smith.lattice_index([[(1, 1)], [(1, 0)]], 2) == 1
    assert abs(Q.apply((1, 0))[0]) == 1


def test_lattice_index():
    assert smith.lattice_index([[(1, 0)], [(0, 1)]], 2) == 1
    assert smith.lattice_index([[(1, 1)], [(1, -1)]], 2) == 2
    with pytest.raises(InputError):
        smith.lattice_index([[(1, 1)], [(2, 2)]], 2)
    with pytest.raises(InputError):
        smith.lattice_index([[(1, 1)]], 2)
