"""One-dimensional binary cellular automaton for the majority task.

A *solution* is a CA rule table over radius-r neighborhoods; a *test case*
is an initial condition (IC) on a circular lattice of odd length.  A rule
solves an IC iff the lattice reaches the homogeneous state of the IC's
strict bit majority within a bounded number of synchronous updates.

Lattices and rule tables are numpy uint8 arrays of 0/1 values.  Cell 0 is
the leftmost cell; a neighborhood is read left to right with the leftmost
neighbor (offset -r) as the most significant bit of the rule-table index.
State integers pack lattice bits the same way (cell 0 = MSB), so
lexicographic order of bit vectors equals numeric order of state indices.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


@dataclass(frozen=True)
class CaConfig:
    """Problem-size parameters for one interaction.

    ``max_steps=None`` defaults to ``2 * n_cells``, which is ample for the
    small lattices this harness targets and is exposed so sensitivity to
    the iteration bound can be tested.
    """

    n_cells: int
    radius: int = 2
    max_steps: int | None = None

    def __post_init__(self):
        if self.n_cells % 2 == 0:
            raise ValueError(f"n_cells must be odd, got {self.n_cells}")
        if self.radius < 0:
            raise ValueError(f"radius must be >= 0, got {self.radius}")
        if self.n_cells < 2 * self.radius + 1:
            raise ValueError(
                f"n_cells={self.n_cells} smaller than neighborhood width "
                f"{2 * self.radius + 1}"
            )
        if self.max_steps is None:
            object.__setattr__(self, "max_steps", 2 * self.n_cells)
        if self.max_steps < 1:
            raise ValueError(f"max_steps must be >= 1, got {self.max_steps}")

    @property
    def rule_len(self) -> int:
        return 1 << (2 * self.radius + 1)

    @property
    def num_states(self) -> int:
        return 1 << self.n_cells


def _as_bits(a, length, what):
    a = np.asarray(a, dtype=np.uint8)
    if a.ndim != 1 or a.shape[0] != length:
        raise ValueError(f"{what} must be a 1-d bit vector of length {length}, "
                         f"got shape {a.shape}")
    return a


def majority_bit(ic: np.ndarray) -> int:
    """Strict majority bit of an odd-length IC."""
    ic = np.asarray(ic)
    return int(int(ic.sum()) * 2 > ic.shape[0])


def ca_step(lattice: np.ndarray, rule: np.ndarray, radius: int) -> np.ndarray:
    """One synchronous update of a circular lattice; input is unmodified."""
    lattice = np.asarray(lattice, dtype=np.uint8)
    rule = np.asarray(rule, dtype=np.uint8)
    width = 2 * radius + 1
    if rule.shape != (1 << width,):
        raise ValueError(f"rule length {rule.shape} does not match radius {radius}")
    if lattice.shape[0] < width:
        raise ValueError(f"lattice of length {lattice.shape[0]} shorter than "
                         f"neighborhood width {width}")
    idx = np.zeros(lattice.shape[0], dtype=np.int32)
    for k in range(width):
        # np.roll(lattice, radius - k)[i] == lattice[(i - radius + k) % n]
        idx += np.roll(lattice, radius - k).astype(np.int32) << (width - 1 - k)
    return rule[idx]


def interact(rule: np.ndarray, ic: np.ndarray, config: CaConfig) -> int:
    """1 iff the rule drives the IC to its homogeneous majority state.

    The lattice must *reach* the all-majority-bit state at some step
    t in 1..max_steps; the initial state itself does not count.  Iteration
    stops early at any fixed point (a pure speed cut: dynamics are
    deterministic, so a fixed point short of the target can never leave).
    """
    rule = _as_bits(rule, config.rule_len, "rule")
    ic = _as_bits(ic, config.n_cells, "ic")
    target = np.full(config.n_cells, majority_bit(ic), dtype=np.uint8)
    prev = ic
    for _ in range(config.max_steps):
        cur = ca_step(prev, rule, config.radius)
        if np.array_equal(cur, target):
            return 1
        if np.array_equal(cur, prev):
            return 0
        prev = cur
    return 0


def pack_lattices(lattices: np.ndarray) -> np.ndarray:
    """Bit vectors (rows) -> state integers, cell 0 as MSB."""
    lattices = np.atleast_2d(np.asarray(lattices, dtype=np.uint8))
    n = lattices.shape[1]
    weights = (1 << (n - 1 - np.arange(n))).astype(np.int64)
    return lattices.astype(np.int64) @ weights


def unpack_states(states: np.ndarray, n_cells: int) -> np.ndarray:
    """State integers -> bit-vector rows (inverse of pack_lattices)."""
    states = np.asarray(states, dtype=np.int64)
    shifts = (n_cells - 1 - np.arange(n_cells))[None, :]
    return ((states[:, None] >> shifts) & 1).astype(np.uint8)


@lru_cache(maxsize=8)
def _state_tables(n_cells: int, radius: int):
    """Per-(n, r) lookup tables over the full state space.

    Returns (nbhd, target): nbhd[s, i] is the rule-table index of cell i's
    neighborhood in state s; target[s] is the state index of the
    homogeneous lattice matching s's majority bit.
    """
    n_states = 1 << n_cells
    width = 2 * radius + 1
    bits = unpack_states(np.arange(n_states), n_cells)
    cols = np.arange(n_cells)
    nbhd = np.zeros((n_states, n_cells), dtype=np.int32)
    for k in range(width):
        nbhd += bits[:, (cols - radius + k) % n_cells].astype(np.int32) << (width - 1 - k)
    ones = bits.sum(axis=1, dtype=np.int64)
    target = np.where(ones * 2 > n_cells, n_states - 1, 0).astype(np.int32)
    return nbhd, target


def rule_success_table(rules: np.ndarray, config: CaConfig) -> np.ndarray:
    """Outcomes of every rule against every possible IC.

    rules: (m, rule_len) bit matrix.  Returns a (m, 2**n_cells) uint8 table
    whose [j, s] entry equals interact(rules[j], unpack(s), config).  Each
    rule's trajectory is advanced through a precomputed state-transition
    map, so the cost per step is one gather over the state space instead of
    a fresh lattice simulation per (rule, IC) pair.
    """
    rules = np.atleast_2d(np.asarray(rules, dtype=np.uint8))
    if rules.shape[1] != config.rule_len:
        raise ValueError(f"rules have length {rules.shape[1]}, "
                         f"expected {config.rule_len}")
    nbhd, target = _state_tables(config.n_cells, config.radius)
    m = rules.shape[0]
    n_states = config.num_states
    trans = np.zeros((m, n_states), dtype=np.int32)
    for i in range(config.n_cells):
        trans += rules[:, nbhd[:, i]].astype(np.int32) << (config.n_cells - 1 - i)
    cur = np.broadcast_to(np.arange(n_states, dtype=np.int32), (m, n_states)).copy()
    success = np.zeros((m, n_states), dtype=bool)
    for _ in range(config.max_steps):
        prev = cur
        cur = np.take_along_axis(trans, cur, axis=1)
        success |= cur == target[None, :]
        if np.array_equal(cur, prev):
            break
    return success.astype(np.uint8)


# Beyond this many lattice states the full-table route is not worth its
# memory; fall back to simulating only the requested ICs.
_TABLE_STATE_LIMIT = 1 << 16


def batch_interact(rules: np.ndarray, ics: np.ndarray, config: CaConfig) -> np.ndarray:
    """Outcome matrix with rows = ICs and columns = rules.

    Semantically identical to calling interact() for every (IC, rule) pair;
    vectorized for population-scale use.
    """
    rules = np.atleast_2d(np.asarray(rules, dtype=np.uint8))
    ics = np.atleast_2d(np.asarray(ics, dtype=np.uint8))
    if ics.shape[1] != config.n_cells:
        raise ValueError(f"ICs have length {ics.shape[1]}, expected {config.n_cells}")
    if config.num_states <= _TABLE_STATE_LIMIT:
        table = rule_success_table(rules, config)
        return table[:, pack_lattices(ics)].T.copy()
    return _batch_interact_direct(rules, ics, config)


def _batch_interact_direct(rules, ics, config):
    """Direct (rule, IC) lattice simulation; no 2**n state table."""
    m, n = rules.shape[0], ics.shape[0]
    n_cells, width = config.n_cells, 2 * config.radius + 1
    maj = (ics.sum(axis=1, dtype=np.int64) * 2 > n_cells).astype(np.uint8)
    state = np.broadcast_to(ics[None, :, :], (m, n, n_cells)).copy()
    success = np.zeros((m, n), dtype=bool)
    rows = np.arange(m)[:, None, None]
    for _ in range(config.max_steps):
        idx = np.zeros((m, n, n_cells), dtype=np.int32)
        for k in range(width):
            idx += np.roll(state, config.radius - k, axis=2).astype(np.int32) << (width - 1 - k)
        new_state = rules[rows, idx]
        success |= (new_state == maj[None, :, None]).all(axis=2)
        if np.array_equal(new_state, state):
            break
        state = new_state
    return success.T.astype(np.uint8)
