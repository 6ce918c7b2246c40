# Copyright (C) 2026 The ArithDyn Development Team

"""
This module contains a set of simple classes for use by

* :mod:`arithdyn.linalg.ratmat`
* :mod:`arithdyn.toric.fan`
* :mod:`arithdyn.toric.toric_endo`
* :mod:`arithdyn.dynamics.heights`
* :mod:`arithdyn.run_framework.cli`

namely the :class:`pickleable` base class, the (optional) MPI communicator
``comm`` and the exceptions raised by :mod:`arithdyn`. Every exception knows
the exit code the command line program returns for it.
"""

class comm_for_no_mpi4py(object):
    """
    A set of stand ins for when mpi4py is not installed
    """
    def __init__(self):
        pass

    def Get_size(self):
        """
        :rtype: int
        :returns: 1
        """
        return 1

    def Get_rank(self):
        """
        :rtype: int
        :returns: 0
        """
        return 0

    def allgather(self, val):
        """
        :param object val: object to allgather
        :rtype: list
        :returns: ``[val]``
        """
        return [val]

try:
    from mpi4py import MPI
    comm = MPI.COMM_WORLD
except ImportError:
    comm = comm_for_no_mpi4py()

class pickleable(object):
    """
    Class that makes objects easily pickleable via a dict
    """
    def __init__(self):
        super(pickleable, self).__init__()

    def __getstate__(self):
        """
        :rtype: dict
        :returns: ``self.__dict__.copy()``
        """
        odict = self.__dict__.copy()
        return odict

    def __setstate__(self, dict):
        """
        :param dict: dict to update

        ``self.__dict__.update(dict)``
        """
        self.__dict__.update(dict)

class Error(Exception):
    """
    Base class for exceptions in :mod:`arithdyn`.

    :param string msg: explanation of the error
    """
    #: int, exit code of :program:`arithdyn` for this kind of error
    exit_code = 1

    def __init__(self, msg):
        super(Error, self).__init__(msg)
        self.msg = msg

    def to_json(self):
        """
        :rtype: dict
        :returns: machine readable description of this error
        """
        return {'type': type(self).__name__, 'message': str(self.msg),
                'exit_code': self.exit_code}

class InputError(Error):
    """
    Exception raised for errors in the input.

    :param string expr: input expression in which the error occurred
    :param string msg: explanation of the error
    """
    exit_code = 2

    def __init__(self, expr, msg):
        super(InputError, self).__init__(msg)
        self.expr = expr

    def __str__(self):
        if self.expr:
            return "{}: {}".format(self.expr, self.msg)
        return str(self.msg)

    def to_json(self):
        odict = super(InputError, self).to_json()
        odict['message'] = str(self)
        return odict

class HypothesisError(InputError):
    """
    Exception raised when the input lies outside the hypotheses of the result
    a computation relies on.

    :param string expr: input expression in which the error occurred
    :param string msg: explanation of the error
    :param string citation: tag of the result whose hypothesis failed
    """
    def __init__(self, expr, msg, citation):
        super(HypothesisError, self).__init__(expr, msg)
        self.citation = citation

    def to_json(self):
        odict = super(HypothesisError, self).to_json()
        odict['citation'] = self.citation
        return odict

class CapacityError(Error):
    """
    Exception raised when a computation exceeds one of the configured caps
    (dimension, ray count, Picard rank, depth).
    """
    exit_code = 3

class BudgetError(CapacityError):
    """
    Exception raised when an iteration exceeds the digit budget.

    :param string msg: explanation of the error
    :param partial: the partial result computed before the abort
    """
    def __init__(self, msg, partial=None):
        super(BudgetError, self).__init__(msg)
        self.partial = partial

    def to_json(self):
        odict = super(BudgetError, self).to_json()
        if self.partial is not None and hasattr(self.partial, 'to_json'):
            odict['partial'] = self.partial.to_json()
        return odict
