"""Interaction matrices and distinction counts.

The interaction matrix I has one row per test case and one column per
solution; I[i, j] = 1 iff solution j solves test i.  A test *distinguishes*
the ordered solution pair (k, l) when it is solved by k but not by l; the
mirrored notion holds for solutions over ordered test pairs.  Distinction
counts measure how much information an individual contributes about the
opposing population.
"""

import numpy as np

from .ca import CaConfig, batch_interact

AXIS_TESTS = "tests"
AXIS_SOLUTIONS = "solutions"


def _check_matrix(I) -> np.ndarray:
    I = np.asarray(I)
    if I.ndim != 2 or I.shape[0] < 1 or I.shape[1] < 1:
        raise ValueError(f"interaction matrix must be 2-d and non-empty, got shape {I.shape}")
    if not np.isin(I, (0, 1)).all():
        raise ValueError("interaction matrix entries must be 0 or 1")
    return I.astype(np.uint8, copy=False)


def _check_axis(axis: str):
    if axis not in (AXIS_TESTS, AXIS_SOLUTIONS):
        raise ValueError(f"axis must be '{AXIS_TESTS}' or '{AXIS_SOLUTIONS}', got {axis!r}")


def build_interaction_matrix(tests: np.ndarray, solutions: np.ndarray,
                             config: CaConfig) -> np.ndarray:
    """All-against-all outcomes: (n_tests, m_solutions) uint8 matrix.

    The evolutionary interaction budget of one such evaluation is
    interaction_count(result) = n * m.
    """
    tests = np.atleast_2d(np.asarray(tests, dtype=np.uint8))
    solutions = np.atleast_2d(np.asarray(solutions, dtype=np.uint8))
    if tests.shape[0] < 1 or solutions.shape[0] < 1:
        raise ValueError("both populations must be non-empty")
    return batch_interact(solutions, tests, config)


def interaction_count(I: np.ndarray) -> int:
    """Number of interactions charged for building this matrix."""
    I = np.asarray(I)
    return int(I.shape[0] * I.shape[1])


def distinction_counts(I: np.ndarray, axis: str = AXIS_TESTS) -> np.ndarray:
    """Distinctions made by each test (or each solution).

    For a test row with r solved entries out of m, the number of ordered
    solution pairs it separates is r * (m - r); likewise per column over
    ordered test pairs.  Equals the brute-force count over all pairs.
    """
    I = _check_matrix(I)
    _check_axis(axis)
    n, m = I.shape
    if axis == AXIS_TESTS:
        row = I.sum(axis=1, dtype=np.int64)
        return row * (m - row)
    col = I.sum(axis=0, dtype=np.int64)
    return col * (n - col)


def _pair_counts_tests(I: np.ndarray) -> np.ndarray:
    """A[k, l] = number of tests solved by solution k but not by l."""
    F = I.astype(np.float64)
    return F.T @ (1.0 - F)


def _pair_counts_solutions(I: np.ndarray) -> np.ndarray:
    """B[p, q] = number of solutions that solve test p but not test q."""
    F = I.astype(np.float64)
    return F @ (1.0 - F).T


def weighted_distinction_counts(I: np.ndarray, axis: str = AXIS_TESTS) -> np.ndarray:
    """Distinction counts where each ordered pair's credit totals one.

    A distinction made by c individuals carries weight 1/c, so rarely made
    distinctions count for more.  Pairs distinguished by nobody get weight
    1 to keep the arithmetic finite; their contribution is zero anyway
    because no individual makes them.
    """
    I = _check_matrix(I)
    _check_axis(axis)
    F = I.astype(np.float64)
    G = 1.0 - F
    if axis == AXIS_TESTS:
        counts = _pair_counts_tests(I)
        weights = np.where(counts > 0, 1.0 / np.where(counts > 0, counts, 1.0), 1.0)
        return np.einsum("ik,kl,il->i", F, weights, G)
    counts = _pair_counts_solutions(I)
    weights = np.where(counts > 0, 1.0 / np.where(counts > 0, counts, 1.0), 1.0)
    return np.einsum("pj,pq,qj->j", F, weights, G)
