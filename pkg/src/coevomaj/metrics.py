"""Objective measurements: exhaustive fitness, OFC, per-generation records.

Objective fitness is the fraction of *all* possible ICs a rule classifies
correctly; it is exact ground truth, independent of any population.  The
objective fitness correlation (OFC) is the Pearson correlation between a
population's subjective fitness and its objective fitness, a measure of
how accurate an evaluation method is.  Objective measurements are taken
out-of-band and never count toward the evolutionary interaction budget.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .ca import CaConfig, rule_success_table, unpack_states

ENUMERATION_CAP = 24


@dataclass(frozen=True)
class GenerationRecord:
    """Measurements for one generation of one run."""

    generation: int
    interactions_cum: int
    best_objective: float
    mean_objective: float
    ofc: float
    ofc_degenerate: bool


class OfcResult(NamedTuple):
    value: float
    degenerate: bool


def enumerate_all_tests(n_cells: int, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """All 2**n ICs as rows, in lexicographic (= state index) order."""
    if n_cells > cap:
        raise ValueError(f"n_cells={n_cells} exceeds enumeration cap {cap}")
    return unpack_states(np.arange(1 << n_cells), n_cells)


def objective_fitness(solutions: np.ndarray, config: CaConfig,
                      cap: int = ENUMERATION_CAP) -> np.ndarray:
    """Fraction of all 2**n ICs each rule classifies correctly."""
    if config.n_cells > cap:
        raise ValueError(f"n_cells={config.n_cells} exceeds enumeration cap {cap}")
    return rule_success_table(solutions, config).mean(axis=1)


def ofc(subjective: np.ndarray, objective: np.ndarray) -> OfcResult:
    """Pearson correlation of subjective vs objective fitness.

    If either vector is constant the correlation is undefined; the result
    is reported as 0.0 with the degenerate flag set so downstream averages
    can exclude it.  Identical vectors short-circuit to exactly 1.0 (the
    mathematical value) rather than round-tripping through sqrt.
    """
    x = np.asarray(subjective, dtype=np.float64)
    y = np.asarray(objective, dtype=np.float64)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValueError(f"fitness vectors must be 1-d and equal length, "
                         f"got {x.shape} vs {y.shape}")
    if x.shape[0] < 2:
        raise ValueError("correlation needs at least 2 individuals")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    if sxx == 0.0 or syy == 0.0:
        return OfcResult(0.0, True)
    if np.array_equal(x, y):
        return OfcResult(1.0, False)
    r = float(dx @ dy) / math.sqrt(sxx * syy)
    return OfcResult(max(-1.0, min(1.0, r)), False)


def make_generation_record(generation: int, interactions_cum: int,
                           subjective_solution_fitness: np.ndarray,
                           objective: np.ndarray) -> GenerationRecord:
    corr = ofc(subjective_solution_fitness, objective)
    return GenerationRecord(
        generation=generation,
        interactions_cum=interactions_cum,
        best_objective=float(objective.max()),
        mean_objective=float(objective.mean()),
        ofc=corr.value,
        ofc_degenerate=corr.degenerate,
    )
