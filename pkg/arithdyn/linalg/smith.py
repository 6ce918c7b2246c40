# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains Smith normal forms of integer matrices and the lattice
operations built on them: integer kernels, saturations of sublattices,
indices of sublattices and quotient maps ``Z^n -> Z^n / (V cap Z^n)``.
"""

import logging
from arithdyn.linalg.basic import Error, InputError
from arithdyn.linalg.ratmat import ratMatrix

logger = logging.getLogger(__name__)

def _int_rows(m):
    if isinstance(m, ratMatrix):
        return m.as_int_rows()
    rows = [[int(x) for x in r] for r in m]
    return rows

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]

def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]

def _swap_cols(A, i, j):
    for r in A:
        r[i], r[j] = r[j], r[i]

def _add_row(A, target, source, q):
    """``row_target += q * row_source``"""
    A[target] = [x + q * y for x, y in zip(A[target], A[source])]

def _add_col(A, target, source, q):
    """``col_target += q * col_source``"""
    for r in A:
        r[target] += q * r[source]

def smith_normal_form(m):
    """
    Smith normal form ``U * m * V = D`` with ``D`` diagonal, each diagonal
    entry dividing the next, and ``U``, ``V`` unimodular.

    :param m: integer matrix
    :type m: :class:`~arithdyn.linalg.ratmat.ratMatrix` or list of lists
    :rtype: tuple of :class:`~arithdyn.linalg.ratmat.ratMatrix`
    :returns: (U, D, V)
    """
    original = _int_rows(m)
    A = [list(row) for row in original]
    r = len(A)
    c = len(A[0]) if r else (m.cols if isinstance(m, ratMatrix) else 0)
    U = _identity(r)
    V = _identity(c)
    t = 0
    while t < min(r, c):
        entries = [(abs(A[i][j]), i, j) for i in range(t, r)
                   for j in range(t, c) if A[i][j] != 0]
        if not entries:
            break
        _, i, j = min(entries)
        _swap_rows(A, t, i)
        _swap_rows(U, t, i)
        _swap_cols(A, t, j)
        _swap_cols(V, t, j)
        while True:
            for i in range(t + 1, r):
                q = A[i][t] // A[t][t]
                if q:
                    _add_row(A, i, t, -q)
                    _add_row(U, i, t, -q)
            rest = [i for i in range(t + 1, r) if A[i][t] != 0]
            if rest:
                i = min(rest, key=lambda k: abs(A[k][t]))
                _swap_rows(A, t, i)
                _swap_rows(U, t, i)
                continue
            for j in range(t + 1, c):
                q = A[t][j] // A[t][t]
                if q:
                    _add_col(A, j, t, -q)
                    _add_col(V, j, t, -q)
            rest = [j for j in range(t + 1, c) if A[t][j] != 0]
            if rest:
                j = min(rest, key=lambda k: abs(A[t][k]))
                _swap_cols(A, t, j)
                _swap_cols(V, t, j)
                continue
            bad = next((i for i in range(t + 1, r) for j in range(t + 1, c)
                        if A[i][j] % A[t][t] != 0), None)
            if bad is None:
                break
            # fold the offending row in; the next pass lowers the pivot
            _add_row(A, t, bad, 1)
            _add_row(U, t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    U, D, V = (ratMatrix.from_rows(U, cols=r), ratMatrix.from_rows(A, cols=c),
               ratMatrix.from_rows(V, cols=c))
    if U * ratMatrix.from_rows(original, cols=c) * V != D:
        raise Error("Smith normal form failed verification")
    return U, D, V

def invariant_factors(m):
    """
    :rtype: list of ints
    :returns: the nonzero diagonal entries of the Smith normal form
    """
    _, D, _ = smith_normal_form(m)
    return [int(D[i, i]) for i in range(min(D.rows, D.cols))
            if D[i, i] != 0]

def integer_kernel(m):
    """
    Lattice basis of ``{x in Z^cols : m x = 0}``.

    :rtype: list of tuples of ints
    """
    _, D, V = smith_normal_form(m)
    rank = len([i for i in range(min(D.rows, D.cols)) if D[i, i] != 0])
    return [tuple(int(x) for x in V.col(j)) for j in range(rank, V.cols)]

def _coordinate_support(vectors, n):
    support = sorted({i for v in vectors for i in range(n) if v[i] != 0})
    return support

def saturation_basis(vectors, n):
    """
    Lattice basis of ``span(vectors) cap Z^n``. When the span is a
    coordinate subspace the standard basis vectors are returned.

    :param vectors: integer vectors of length ``n``
    :param int n: ambient rank
    :rtype: list of tuples of ints
    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        return []
    A = ratMatrix.from_columns(vectors, rows=n)
    rank = A.rank()
    support = _coordinate_support(vectors, n)
    if len(support) == rank:
        return [tuple(int(i == s) for i in range(n)) for s in support]
    U, _, _ = smith_normal_form(A)
    Uinv = U.inverse()
    return [tuple(int(x) for x in Uinv.col(j)) for j in range(rank)]

def quotient_map(vectors, n):
    """
    Integer matrix ``Q`` of a surjection ``Z^n -> Z^(n-r)`` whose kernel is
    ``span(vectors) cap Z^n`` (``r`` the rank of the span).

    :rtype: :class:`~arithdyn.linalg.ratmat.ratMatrix`
    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        return ratMatrix.identity(n)
    A = ratMatrix.from_columns(vectors, rows=n)
    rank = A.rank()
    support = _coordinate_support(vectors, n)
    if len(support) == rank:
        rest = [i for i in range(n) if i not in support]
        return ratMatrix.from_rows([[int(i == j) for j in range(n)]
                                    for i in rest], cols=n)
    U, _, _ = smith_normal_form(A)
    return ratMatrix.from_rows([U.row(i) for i in range(rank, n)], cols=n)

def lattice_index(bases, n):
    """
    Index of the lattice spanned by the concatenated ``bases`` in ``Z^n``.

    :param bases: list of lists of integer vectors
    :param int n: ambient rank
    :rtype: int
    """
    columns = [v for basis in bases for v in basis]
    if len(columns) != n:
        raise InputError('lattice_index', "bases span {} vectors in rank {}"
                         .format(len(columns), n))
    if n == 0:
        return 1
    det = ratMatrix.from_columns(columns, rows=n).det()
    if det == 0:
        raise InputError('lattice_index', "bases are linearly dependent")
    return abs(int(det))
