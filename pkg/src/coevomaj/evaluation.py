"""Subjective fitness assignment for both populations.

Four methods, all mapping an interaction matrix to per-individual fitness
in [0, 1] (higher is better on both sides):

* AS - average score: fraction of opponents beaten (solutions) or
  resisted (tests).
* WS - weighted score: like AS, but each opponent's contribution is
  weighted by the normalized inverse of its own raw score.
* AI - average informativeness: a fixed linear blend of the min-max
  normalized distinction count with the average score.
* WI - weighted informativeness: AI with distinction counts replaced by
  their rarity-weighted variant.
"""

from dataclasses import dataclass, field

import numpy as np

from .interaction import (
    AXIS_SOLUTIONS,
    AXIS_TESTS,
    _check_matrix,
    distinction_counts,
    weighted_distinction_counts,
)

METHODS = ("AS", "WS", "AI", "WI")


@dataclass(frozen=True)
class BlendWeights:
    """Linear blend of distinction and score terms in AI/WI."""

    distinction: float = 0.3
    score: float = 0.7

    def __post_init__(self):
        if self.distinction < 0 or self.score < 0:
            raise ValueError("blend weights must be nonnegative")
        if abs(self.distinction + self.score - 1.0) > 1e-12:
            raise ValueError(
                f"blend weights must sum to 1, got {self.distinction} + {self.score}"
            )


@dataclass(frozen=True)
class FitnessAssignment:
    """Per-individual subjective fitness for both populations."""

    test_fitness: np.ndarray
    solution_fitness: np.ndarray
    method: str


def eval_average_score(I: np.ndarray) -> FitnessAssignment:
    """Solutions: fraction of tests solved.  Tests: fraction of solutions failed."""
    I = _check_matrix(I)
    n, m = I.shape
    test_fitness = 1.0 - I.sum(axis=1, dtype=np.int64) / m
    solution_fitness = I.sum(axis=0, dtype=np.int64) / n
    return FitnessAssignment(test_fitness, solution_fitness, "AS")


def eval_weighted_score(I: np.ndarray) -> FitnessAssignment:
    """Average score with opponents weighted by normalized inverse raw score.

    Raw weights are 1/(row sum) for tests and 1/(column sum) for solutions,
    with zero sums mapped to weight 1, then normalized to sum to one per
    population.
    """
    I = _check_matrix(I)
    F = I.astype(np.float64)
    row = I.sum(axis=1, dtype=np.int64)
    col = I.sum(axis=0, dtype=np.int64)
    w_tests = np.where(row > 0, 1.0 / np.where(row > 0, row, 1), 1.0)
    w_sols = np.where(col > 0, 1.0 / np.where(col > 0, col, 1), 1.0)
    w_tests = w_tests / w_tests.sum()
    w_sols = w_sols / w_sols.sum()
    test_fitness = 1.0 - F @ w_sols
    solution_fitness = F.T @ w_tests
    return FitnessAssignment(test_fitness, solution_fitness, "WS")


def normalize_minmax(values: np.ndarray) -> np.ndarray:
    """Rescale to [0, 1]; a constant vector maps to all zeros."""
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0:
        raise ValueError("cannot normalize an empty vector")
    lo, hi = values.min(), values.max()
    if hi == lo:
        return np.zeros_like(values)
    return (values - lo) / (hi - lo)


def eval_informativeness(I: np.ndarray, weighted: bool = False,
                         blend: BlendWeights = BlendWeights()) -> FitnessAssignment:
    """Blend of normalized distinction score and average score, both sides."""
    I = _check_matrix(I)
    counts = weighted_distinction_counts if weighted else distinction_counts
    d_tests = normalize_minmax(counts(I, AXIS_TESTS))
    d_sols = normalize_minmax(counts(I, AXIS_SOLUTIONS))
    base = eval_average_score(I)
    return FitnessAssignment(
        blend.distinction * d_tests + blend.score * base.test_fitness,
        blend.distinction * d_sols + blend.score * base.solution_fitness,
        "WI" if weighted else "AI",
    )


def evaluate(I: np.ndarray, method: str,
             blend: BlendWeights = BlendWeights()) -> FitnessAssignment:
    """Dispatch on the method label (one of AS, WS, AI, WI)."""
    if method == "AS":
        return eval_average_score(I)
    if method == "WS":
        return eval_weighted_score(I)
    if method == "AI":
        return eval_informativeness(I, weighted=False, blend=blend)
    if method == "WI":
        return eval_informativeness(I, weighted=True, blend=blend)
    raise ValueError(f"unknown evaluation method {method!r}; expected one of {METHODS}")
