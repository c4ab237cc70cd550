"""Seeded synthetic transactions with independent Bernoulli items.

The stream is NumPy's PCG64 bit generator seeded through ``SeedSequence(seed)``.
Each raw 64-bit output ``x`` becomes the uniform double ``(x >> 11) * 2**-53``.
Items ``1..m`` consume one uniform each, in ascending order, and item ``i`` is
included when its draw is below ``density``. A transaction that comes out
empty is thrown away and drawn again from the next ``m`` uniforms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import TransactionDb

_INV_2_53 = 1.0 / (1 << 53)


@dataclass(frozen=True)
class GenConfig:
    num_transactions: int
    universe_size: int = 7
    density: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.num_transactions < 0:
            raise ValueError("num_transactions must be non-negative")
        if self.universe_size < 1:
            raise ValueError("universe_size must be >= 1")
        if not 0.0 < self.density < 1.0:
            raise ValueError("density must lie strictly between 0 and 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def uniform_stream(seed: int) -> np.random.PCG64:
    return np.random.PCG64(np.random.SeedSequence(seed))


def _uniforms(bitgen: np.random.PCG64, size: int) -> np.ndarray:
    raw = bitgen.random_raw(size)
    return (raw >> np.uint64(11)).astype(np.float64) * _INV_2_53


def generate(config: GenConfig) -> TransactionDb:
    n, m, d = config.num_transactions, config.universe_size, config.density
    bitgen = uniform_stream(config.seed)
    items = np.arange(1, m + 1)
    rows: list[np.ndarray] = []
    have = 0
    while have < n:
        # over-draw to absorb re-drawn empty rows; P(empty) = (1-d)**m
        batch = max(64, int((n - have) / max(1e-9, 1 - (1 - d) ** m) * 1.05) + 16)
        block = _uniforms(bitgen, batch * m).reshape(batch, m) < d
        block = block[block.any(axis=1)]
        rows.append(block[: n - have])
        have += len(rows[-1])
    # unused tail draws of the last block are simply discarded
    mask = np.concatenate(rows) if rows else np.zeros((0, m), dtype=bool)
    txs = tuple(tuple(int(i) for i in items[row]) for row in mask)
    return TransactionDb(m, txs)


def generate_reference(config: GenConfig) -> TransactionDb:
    """Draw-by-draw version of :func:`generate`, kept for cross-checking the batched path."""
    bitgen = uniform_stream(config.seed)
    txs = []
    m, d = config.universe_size, config.density
    while len(txs) < config.num_transactions:
        t = tuple(i for i in range(1, m + 1) if _uniforms(bitgen, 1)[0] < d)
        if t:
            txs.append(t)
    return TransactionDb(m, tuple(txs))
