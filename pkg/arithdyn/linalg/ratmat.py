# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains the exact rational linear algebra used by
:mod:`arithdyn`: the matrix class :class:`ratMatrix`, the polynomial class
:class:`ratPoly`, characteristic polynomials, rational eigenvalues with their
eigenspaces and numeric moduli of all (complex) eigenvalues.

Every entry is a :class:`~fractions.Fraction`. Rational roots come from an
exact factorization over ``Z`` with sympy; numpy only locates the remaining
irrational roots to give their moduli.
"""

import logging
import math
from fractions import Fraction
import numpy as np
import sympy
import arithdyn.util as util
from arithdyn.linalg.basic import pickleable, InputError, CapacityError

logger = logging.getLogger(__name__)

def _rref(rows, ncols):
    """
    Reduced row echelon form of a list of rows of Fractions.

    :rtype: tuple
    :returns: (reduced rows, list of pivot columns)
    """
    R = [list(r) for r in rows]
    pivots = []
    lead = 0
    for c in range(ncols):
        pivot = None
        for i in range(lead, len(R)):
            if R[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        R[lead], R[pivot] = R[pivot], R[lead]
        inv = 1 / R[lead][c]
        R[lead] = [x * inv for x in R[lead]]
        for i in range(len(R)):
            if i != lead and R[i][c] != 0:
                factor = R[i][c]
                R[i] = [x - factor * y for x, y in zip(R[i], R[lead])]
        pivots.append(c)
        lead += 1
        if lead == len(R):
            break
    return R, pivots

class ratMatrix(pickleable):
    """
    An immutable ``rows`` x ``cols`` matrix of exact rationals.
    """
    def __init__(self, rows, cols, entries):
        """
        Initalization

        :param int rows: number of rows
        :param int cols: number of columns
        :param entries: row major sequence of ``rows*cols`` rationals
        """
        if rows < 0 or cols < 0:
            raise InputError('shape', "negative matrix dimension")
        if rows > util.MAX_DIM or cols > util.MAX_DIM:
            raise CapacityError("matrix of shape {}x{} exceeds the dimension"
                                " cap {}".format(rows, cols, util.MAX_DIM))
        entries = tuple(util.to_fraction(x) for x in entries)
        if len(entries) != rows * cols:
            raise InputError('entries', "expected {} entries, got {}".format(
                rows * cols, len(entries)))
        #: int, number of rows
        self.rows = rows
        #: int, number of columns
        self.cols = cols
        #: tuple of :class:`~fractions.Fraction`, row major entries
        self.entries = entries
        super(ratMatrix, self).__init__()

    @classmethod
    def from_rows(cls, rows, cols=None):
        """
        :param rows: list of rows (each a sequence of rationals)
        :param int cols: column count, needed only when ``rows`` is empty
        :rtype: :class:`ratMatrix`
        """
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise InputError('rows', "ragged matrix rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns, rows=None):
        """
        :param columns: list of column vectors
        :rtype: :class:`ratMatrix`
        """
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)],
                             cols=len(columns))

    @classmethod
    def identity(cls, n):
        """
        :rtype: :class:`ratMatrix`
        """
        return cls(n, n, [1 if i == j else 0 for i in range(n)
                          for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        """
        :rtype: :class:`ratMatrix`
        """
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, values):
        """
        :param values: diagonal entries
        :rtype: :class:`ratMatrix`
        """
        values = list(values)
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n)
                          for j in range(n)])

    @classmethod
    def parse(cls, text):
        """
        Parse the inline form ``"a,b;c,d"`` (rows separated by ``;``).

        :param string text: inline matrix
        :rtype: :class:`ratMatrix`
        """
        text = text.strip()
        if not text:
            raise InputError(text, "empty matrix")
        rows = [[util.to_fraction(x) for x in r.split(',')]
                for r in text.split(';')]
        return cls.from_rows(rows)

    @classmethod
    def from_json(cls, obj):
        """
        Read ``{"rows", "cols", "entries": [["num","den"], ...]}``; nested
        rows of numbers or strings are also accepted.

        :rtype: :class:`ratMatrix`
        """
        if isinstance(obj, str):
            return cls.parse(obj)
        if isinstance(obj, list):
            return cls.from_rows([[util.to_fraction(x) for x in r]
                                  for r in obj])
        if not isinstance(obj, dict) or 'entries' not in obj:
            raise InputError('matrix', "expected an object with 'entries'")
        entries = obj['entries']
        if entries and isinstance(entries[0], list) and 'rows' not in obj:
            return cls.from_rows([[util.to_fraction(x) for x in r]
                                  for r in entries])
        try:
            rows, cols = int(obj['rows']), int(obj['cols'])
        except (KeyError, TypeError, ValueError):
            raise InputError('matrix', "'rows' and 'cols' must be integers")
        return cls(rows, cols, [util.to_fraction(x) for x in entries])

    def to_json(self):
        """
        :rtype: dict
        :returns: the JSON form with exact ``["num","den"]`` entries
        """
        return {'rows': self.rows, 'cols': self.cols,
                'entries': [util.frac_to_json(x) for x in self.entries]}

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        """
        :rtype: tuple
        """
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        """
        :rtype: tuple
        """
        return tuple(self.entries[i * self.cols + j]
                     for i in range(self.rows))

    def tolist(self):
        """
        :rtype: list of lists
        """
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_integer(self):
        """
        :rtype: bool
        :returns: True if every entry is an integer
        """
        return all(x.denominator == 1 for x in self.entries)

    def is_symmetric(self):
        return self.is_square() and self == self.transpose()

    def as_int_rows(self):
        """
        :rtype: list of lists of ints
        """
        if not self.is_integer():
            raise InputError('matrix', "integer entries required")
        return [[int(x) for x in self.row(i)] for i in range(self.rows)]

    def to_float(self):
        """
        :rtype: :class:`~numpy.ndarray`
        """
        return np.array([[float(x) for x in self.row(i)]
                         for i in range(self.rows)]).reshape(self.rows,
                                                             self.cols)

    def _check_square(self, what):
        if not self.is_square():
            raise InputError(what, "matrix of shape {}x{} is not square"
                             .format(self.rows, self.cols))

    def __eq__(self, other):
        if not isinstance(other, ratMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "ratMatrix({})".format(
            [[util.frac_str(x) for x in r] for r in self.tolist()])

    def __add__(self, other):
        if self.shape != other.shape:
            raise InputError('+', "shape mismatch")
        return ratMatrix(self.rows, self.cols,
                         [x + y for x, y in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise InputError('-', "shape mismatch")
        return ratMatrix(self.rows, self.cols,
                         [x - y for x, y in zip(self.entries, other.entries)])

    def __neg__(self):
        return ratMatrix(self.rows, self.cols, [-x for x in self.entries])

    def __mul__(self, other):
        if isinstance(other, ratMatrix):
            if self.cols != other.rows:
                raise InputError('*', "cannot multiply {}x{} by {}x{}".format(
                    self.rows, self.cols, other.rows, other.cols))
            cols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum((a * b for a, b in zip(r, c)), Fraction(0))
                           for c in cols)
            return ratMatrix(self.rows, other.cols, out)
        scalar = util.to_fraction(other)
        return ratMatrix(self.rows, self.cols,
                         [scalar * x for x in self.entries])

    def __rmul__(self, other):
        scalar = util.to_fraction(other)
        return ratMatrix(self.rows, self.cols,
                         [scalar * x for x in self.entries])

    def __pow__(self, k):
        self._check_square('**')
        if k < 0:
            return self.inverse() ** (-k)
        result = ratMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def transpose(self):
        """
        :rtype: :class:`ratMatrix`
        """
        return ratMatrix(self.cols, self.rows,
                         [x for j in range(self.cols) for x in self.col(j)])

    def apply(self, v):
        """
        :param v: vector of length ``cols``
        :rtype: tuple of :class:`~fractions.Fraction`
        :returns: ``self * v``
        """
        v = [util.to_fraction(x) for x in v]
        if len(v) != self.cols:
            raise InputError('apply', "vector length {} does not match {}"
                             " columns".format(len(v), self.cols))
        return tuple(sum((a * b for a, b in zip(self.row(i), v)),
                         Fraction(0)) for i in range(self.rows))

    def trace(self):
        self._check_square('trace')
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def rref(self):
        """
        :rtype: tuple
        :returns: (reduced :class:`ratMatrix`, list of pivot columns)
        """
        R, pivots = _rref([self.row(i) for i in range(self.rows)], self.cols)
        return ratMatrix.from_rows(R, cols=self.cols), pivots

    def rank(self):
        """
        :rtype: int
        """
        return len(_rref([self.row(i) for i in range(self.rows)],
                         self.cols)[1])

    def kernel(self):
        """
        Basis of the right kernel, one vector per free column.

        :rtype: list of tuples of :class:`~fractions.Fraction`
        """
        R, pivots = _rref([self.row(i) for i in range(self.rows)], self.cols)
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -R[i][f]
            basis.append(tuple(v))
        return basis

    def det(self):
        """
        :rtype: :class:`~fractions.Fraction`
        """
        self._check_square('det')
        A = [list(self.row(i)) for i in range(self.rows)]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            pivot = next((i for i in range(c, n) if A[i][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                A[c], A[pivot] = A[pivot], A[c]
                det = -det
            det *= A[c][c]
            for i in range(c + 1, n):
                if A[i][c] != 0:
                    factor = A[i][c] / A[c][c]
                    A[i] = [x - factor * y for x, y in zip(A[i], A[c])]
        return det

    def inverse(self):
        """
        :rtype: :class:`ratMatrix`
        """
        self._check_square('inverse')
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)]
               for i in range(n)]
        R, pivots = _rref(aug, 2 * n)
        if pivots[:n] != list(range(n)):
            raise InputError('inverse', "matrix is singular")
        return ratMatrix.from_rows([r[n:] for r in R])

    def solve_any(self, b):
        """
        A particular solution of ``self * x = b``.

        :param b: right hand side
        :rtype: tuple or None
        :returns: a solution (free variables set to 0) or None when the
            system is inconsistent
        """
        b = [util.to_fraction(x) for x in b]
        aug = [list(self.row(i)) + [b[i]] for i in range(self.rows)]
        R, pivots = _rref(aug, self.cols + 1)
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for i, p in enumerate(pivots):
            x[p] = R[i][self.cols]
        return tuple(x)

    def solve(self, b):
        """
        The unique solution of ``self * x = b`` for nonsingular square
        ``self``.

        :rtype: tuple of :class:`~fractions.Fraction`
        """
        self._check_square('solve')
        if self.rank() != self.rows:
            raise InputError('solve', "matrix is singular")
        return self.solve_any(b)

class ratPoly(pickleable):
    """
    A polynomial with rational coefficients, stored in ascending degree.
    """
    def __init__(self, coeffs):
        """
        Initalization

        :param coeffs: coefficients, constant term first
        """
        coeffs = [util.to_fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        #: tuple of :class:`~fractions.Fraction`, ascending coefficients
        self.coeffs = tuple(coeffs)
        super(ratPoly, self).__init__()

    @property
    def degree(self):
        """
        Degree, -1 for the zero polynomial.
        """
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, ratPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return ratPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ratPoly(out)

    def divide_linear(self, root):
        """
        Synthetic division by ``x - root``.

        :rtype: tuple
        :returns: (quotient :class:`ratPoly`, remainder)
        """
        root = util.to_fraction(root)
        if self.degree < 1:
            return ratPoly([]), self(root) if self.coeffs else Fraction(0)
        quotient = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * root + c
            quotient.append(acc)
        remainder = quotient.pop()
        return ratPoly(list(reversed(quotient))), remainder

    def integer_coeffs(self):
        """
        Primitive integer multiple with positive leading coefficient.

        :rtype: list of ints
        """
        if not self.coeffs:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = util.vector_gcd(ints)
        ints = [x // g for x in ints]
        if ints[-1] < 0:
            ints = [-x for x in ints]
        return ints

    def numeric_roots(self, tol=None, max_iter=None):
        """
        All complex roots, from the eigenvalues of the companion matrix and
        polished by Newton's method.

        :param float tol: step size at which polishing stops
        :param int max_iter: cap on polishing steps per root
        :rtype: list of complex
        """
        tol = util.TOL if tol is None else tol
        max_iter = util.MAX_ITER if max_iter is None else max_iter
        if self.degree < 1:
            return []
        lead = self.coeffs[-1]
        try:
            monic = [float(c / lead) for c in self.coeffs]
        except OverflowError:
            raise CapacityError("polynomial coefficients exceed the floating"
                                " point range")
        roots = np.roots(monic[::-1])
        dmonic = [k * c for k, c in enumerate(monic)][1:]
        polished = []
        for z in roots:
            z = complex(z)
            for _ in range(max_iter):
                p = _horner(monic, z)
                dp = _horner(dmonic, z)
                if dp == 0:
                    break
                step = p / dp
                if not np.isfinite(step.real) or not np.isfinite(step.imag):
                    break
                if abs(step) > 1e-3 * max(1.0, abs(z)):
                    # Newton is unreliable this far out; keep the estimate
                    break
                z = z - step
                if abs(step) <= tol * max(1.0, abs(z)):
                    break
            polished.append(z)
        return polished

    def to_json(self):
        return [util.frac_to_json(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            a = abs(c)
            body = '' if (a == 1 and k > 0) else util.frac_str(a)
            if k == 1:
                body += 'x'
            elif k > 1:
                body += 'x^{}'.format(k)
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            out += ' {} {}'.format(sign, body)
        return out

def _horner(coeffs, z):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc

def char_poly(m):
    """
    Characteristic polynomial ``det(xI - m)`` by the Faddeev-LeVerrier
    recursion, exact over the rationals.

    :param m: square matrix
    :type m: :class:`ratMatrix`
    :rtype: :class:`ratPoly`
    :returns: monic polynomial of degree ``n``
    """
    m._check_square('char_poly')
    n = m.rows
    A = m.tolist()
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        AM = _mat_mul(A, M)
        for i in range(n):
            AM[i][i] += c[n - k + 1]
        M = AM
        AM = _mat_mul(A, M)
        c[n - k] = -sum((AM[i][i] for i in range(n)), Fraction(0)) / k
    return ratPoly(c)

def _mat_mul(A, B):
    n = len(A)
    cols = list(zip(*B)) if B else []
    return [[sum((a * b for a, b in zip(A[i], col)), Fraction(0))
             for col in cols] for i in range(n)]

#: :class:`sympy.Symbol` used to hand polynomials to sympy
_X = sympy.Symbol('x')

def rational_roots(poly):
    """
    Distinct rational roots of ``poly``, in decreasing order.

    The integer scaled polynomial is factored exactly over ``Z``; the roots
    are read off its linear factors, so repeated and large roots are found
    whatever the size of the coefficients.

    :type poly: :class:`ratPoly`
    :rtype: list of :class:`~fractions.Fraction`
    """
    if poly.degree < 1:
        return []
    ints = poly.integer_coeffs()
    spoly = sympy.Poly(list(reversed(ints)), _X, domain=sympy.ZZ)
    roots = set()
    for factor, _ in spoly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = factor.all_coeffs()
            roots.add(Fraction(-int(b), int(a)))
    return sorted(roots, reverse=True)

class eigenReport(pickleable):
    """
    Rational eigenvalues of a square matrix with multiplicities and exact
    eigenspaces, plus the numeric moduli of all eigenvalues.
    """
    def __init__(self, dim, rational_eigenvalues, residual, numeric_moduli,
                 tolerance):
        #: int, size of the matrix
        self.dim = dim
        #: list of (value, algebraic multiplicity, eigenspace basis)
        self.rational_eigenvalues = rational_eigenvalues
        #: :class:`ratPoly`, factor of the characteristic polynomial without
        #: rational roots
        self.residual = residual
        #: list of floats, moduli of all eigenvalues in decreasing order
        self.numeric_moduli = numeric_moduli
        #: float, tolerance attached to the numeric moduli
        self.tolerance = tolerance
        super(eigenReport, self).__init__()

    @property
    def residual_degree(self):
        return max(self.residual.degree, 0)

    @property
    def has_irrational_part(self):
        return self.residual.degree > 0

    @property
    def spectral_radius(self):
        return self.numeric_moduli[0] if self.numeric_moduli else 0.0

    def eigenvalues(self):
        """
        :rtype: list of :class:`~fractions.Fraction`
        :returns: distinct rational eigenvalues, decreasing
        """
        return [lam for lam, _, _ in self.rational_eigenvalues]

    def multiplicity(self, lam):
        for value, mult, _ in self.rational_eigenvalues:
            if value == lam:
                return mult
        return 0

    def eigenspace(self, lam):
        """
        :rtype: list of tuples
        :returns: basis of the eigenspace of ``lam`` (empty if ``lam`` is
            not an eigenvalue)
        """
        for value, _, basis in self.rational_eigenvalues:
            if value == lam:
                return basis
        return []

    def to_json(self):
        return {
            'rational_eigenvalues': [
                {'value': util.frac_to_json(lam), 'multiplicity': mult,
                 'eigenspace': [[util.frac_to_json(x) for x in v]
                                for v in basis]}
                for lam, mult, basis in self.rational_eigenvalues],
            'has_irrational_part': self.has_irrational_part,
            'residual_degree': self.residual_degree,
            'numeric_moduli': self.numeric_moduli,
            'tolerance': self.tolerance}

def rational_eigen(m, tol=None, max_iter=None):
    """
    Exact rational eigenvalues and eigenspaces of ``m``.

    :param m: square matrix
    :type m: :class:`ratMatrix`
    :param float tol: numeric root tolerance
    :param int max_iter: cap on root polishing iterations
    :rtype: :class:`eigenReport`
    """
    tol = util.TOL if tol is None else tol
    cp = char_poly(m)
    residual = cp
    found = []
    for lam in rational_roots(cp):
        mult = 0
        while residual.degree > 0:
            quotient, rem = residual.divide_linear(lam)
            if rem != 0:
                break
            residual = quotient
            mult += 1
        shifted = m - lam * ratMatrix.identity(m.rows)
        found.append((lam, mult, shifted.kernel()))
    moduli = []
    for lam, mult, _ in found:
        moduli.extend([abs(float(lam))] * mult)
    moduli.extend(abs(z) for z in residual.numeric_roots(tol, max_iter))
    moduli.sort(reverse=True)
    report = eigenReport(m.rows, found, residual, moduli, tol)
    logger.debug("eigen: %d rational eigenvalue(s), residual degree %d",
                 len(found), report.residual_degree)
    return report

def spectral_radius(m, tol=None):
    """
    Largest modulus of an eigenvalue of ``m``; exact (as a float) when every
    eigenvalue is rational.

    :type m: :class:`ratMatrix`
    :rtype: float
    """
    return rational_eigen(m, tol).spectral_radius

def is_diagonalizable_rational(m):
    """
    :type m: :class:`ratMatrix`
    :rtype: bool
    :returns: True iff the rational eigenspaces span the whole space
    """
    report = rational_eigen(m)
    return sum(len(b) for _, _, b in report.rational_eigenvalues) == m.rows
