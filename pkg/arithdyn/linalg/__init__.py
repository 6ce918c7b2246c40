# Copyright (C) 2026 The ArithDyn Development Team

"""
This subpackage contains

*   the module :mod:`~arithdyn.linalg.basic` with the class
    :class:`~arithdyn.linalg.basic.pickleable`, the (optional) MPI
    communicator and the exception hierarchy used throughout
    :mod:`arithdyn`;
*   the module :mod:`~arithdyn.linalg.ratmat` exact rational matrices,
    characteristic polynomials and eigen reports;
*   the module :mod:`~arithdyn.linalg.smith` Smith normal forms and lattice
    saturation;
*   the module :mod:`~arithdyn.linalg.cones` exact feasibility, cone
    membership and extreme rays of polyhedral cones.

"""
__all__ = ["basic", "ratmat", "smith", "cones"]
