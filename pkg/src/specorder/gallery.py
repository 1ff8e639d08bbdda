"""Bundled counterexample instances.

Three small families that exercise the boundaries of the order: projection
pairs whose candidate infimum fails to commute, equal-mass planar measures
ordered by CDF but not on lower sets, and a one-parameter family ordered in
distribution at exactly one parameter value. Tests and the `examples` CLI
command replay these against frozen expected values.
"""

from __future__ import annotations

import numpy as np

from .measures import AtomicMeasure
from .spectral import CommutingTuple, validate_tuple

# expected meet components and their commutator defect for the projection pair
MEET_FIRST = np.diag([0.0, 1.0, 0.0])
MEET_SECOND = np.full((3, 3), 1.0 / 3.0)
MEET_COMMUTATOR_DEFECT = 2.0 / 3.0


def projection_pair_no_infimum() -> tuple[CommutingTuple, CommutingTuple]:
    """Two commuting projection pairs on C^3 with a non-commuting meet candidate.

    Componentwise the range intersections are spanned by e2 and by (1,1,1),
    whose projections do not commute: no commuting pair of projections can be
    the infimum by taking meets coordinatewise.
    """
    a1 = np.diag([1.0, 1.0, 0.0])
    a2 = np.array([[0.5, 0.5, 0.0],
                   [0.5, 0.5, 0.0],
                   [0.0, 0.0, 1.0]])
    b1 = np.diag([0.0, 1.0, 1.0])
    b2 = np.array([[1.0, 0.0, 0.0],
                   [0.0, 0.5, 0.5],
                   [0.0, 0.5, 0.5]])
    return validate_tuple([a1, a2]), validate_tuple([b1, b2])


def crossed_dirac_pair() -> tuple[AtomicMeasure, AtomicMeasure]:
    """Unit masses at {(0,0), (1,1)} vs {(0,1), (1,0)}.

    The second measure's CDF never exceeds the first's, yet on the lower set
    generated by {(0,1), (1,0)} the masses are 2 vs 1: orthant CDF dominance
    does not control all lower sets in dimension two.
    """
    mu1 = AtomicMeasure.from_atoms(np.array([[0.0, 0.0], [1.0, 1.0]]),
                                   np.array([1.0, 1.0]))
    mu2 = AtomicMeasure.from_atoms(np.array([[0.0, 1.0], [1.0, 0.0]]),
                                   np.array([1.0, 1.0]))
    return mu1, mu2


def crossed_dirac_diagonal_pair() -> tuple[CommutingTuple, CommutingTuple]:
    """The crossed Dirac pattern embedded as diagonal pairs on C^2.

    Vector states of these tuples reproduce the scalar measures, but the
    projection-valued distribution order fails in both directions: CDF
    dominance of the scalar shadows does not lift to operators.
    """
    a = validate_tuple([np.diag([0.0, 1.0]), np.diag([0.0, 1.0])])
    b = validate_tuple([np.diag([0.0, 1.0]), np.diag([1.0, 0.0])])
    return a, b


def axis_shift_family(theta: float) -> tuple[CommutingTuple, CommutingTuple]:
    """A fixed pair against a theta-parametrized one, comparable iff theta = 2.

    Both second components share eigenvectors exactly at theta = 2; away from
    it the eigenbases tilt and the distribution order breaks, while monomial
    Loewner inequalities can keep holding to large powers (first failure at
    exponent 13 for theta = 3).
    """
    a = validate_tuple([np.zeros((2, 2)), np.array([[2.0, 1.0], [1.0, 2.0]])])
    b = validate_tuple([np.eye(2), np.array([[3.0, 1.0], [1.0, 1.0 + theta]])])
    return a, b
