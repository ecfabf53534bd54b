"""Seeded G(n,p) sampling and host-graph augmentation.

Reproducibility contract: every sample is a pure function of (n, p, seed).
Streams for trials/classes/rounds are derived from a master seed with a
splitmix64-style mixer owned by this module, so derivation never depends on
library internals. The bit generator behind the uniforms is numpy's
counter-based Philox, seeded with the derived 64-bit value; its name is
exported as RNG_NAME so experiment records can pin it.
"""

from __future__ import annotations

import numpy as np

from .errors import InputError
from .graph import Graph, union

__all__ = ["RNG_NAME", "derive_seed", "rng_from", "sample_gnp", "augment"]

RNG_NAME = "philox"

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(x: int) -> int:
    """splitmix64 finalizer."""
    x = (x + _GOLDEN) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def derive_seed(master: int, *stream: int) -> int:
    """Stable 64-bit seed for a substream of a master seed.

    Identical (master, stream indices) always yield the identical seed, on
    any platform, in any execution order.
    """
    x = _mix(master & _MASK64)
    for part in stream:
        x = _mix(x ^ ((part & _MASK64) * _GOLDEN & _MASK64))
    return x


def rng_from(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed & _MASK64))


# Pair (u,v), u<v, at canonical position: row u-1 owns columns u+1..n, rows
# concatenated in increasing u. One uniform is drawn per position.


def _rows_from_bool_matrix(adj: np.ndarray) -> tuple[int, ...]:
    packed = np.packbits(adj, axis=1, bitorder="little")
    return tuple(int.from_bytes(packed[i].tobytes(), "little") for i in range(len(adj)))


def _sample_canonical(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    m = n * (n - 1) // 2
    hits = rng.random(m) < p
    adj = np.zeros((n, n), dtype=bool)
    off = 0
    for i in range(n - 1):
        width = n - 1 - i
        adj[i, i + 1 :] = hits[off : off + width]
        off += width
    adj |= adj.T
    return adj


def _sample_skip(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Geometric skip sampling: jump between successful pair positions.

    Draws its own stream; seed-stable but intentionally not variate-for-
    variate identical to the canonical path.
    """
    m = n * (n - 1) // 2
    adj = np.zeros((n, n), dtype=bool)
    if p <= 0.0:
        return adj
    # offsets[i] = first linear position of row i
    widths = np.arange(n - 1, 0, -1)
    offsets = np.concatenate(([0], np.cumsum(widths)))
    pos = -1
    hit_positions = []
    while True:
        pos += int(rng.geometric(p))
        if pos >= m:
            break
        hit_positions.append(pos)
    if hit_positions:
        hp = np.asarray(hit_positions)
        row = np.searchsorted(offsets, hp, side="right") - 1
        col = row + 1 + (hp - offsets[row])
        adj[row, col] = True
        adj |= adj.T
    return adj


def sample_gnp(n: int, p: float, seed: int, method: str = "canonical") -> Graph:
    """Sample G(n,p): each of the C(n,2) vertex pairs becomes an edge
    independently with probability p. Deterministic given (n, p, seed).

    method="canonical" draws one uniform per pair in (u<v) order;
    method="skip" uses geometric skip sampling (faster for small p, its own
    equally-valid stream).
    """
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0,1], got {p}")
    if method not in ("canonical", "skip"):
        raise InputError(f"unknown sampling method {method!r}")
    if p == 0.0:
        return Graph(n, (0,) * n)
    if p == 1.0:
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << i) for i in range(n)))
    rng = rng_from(seed)
    if method == "canonical":
        adj = _sample_canonical(n, p, rng)
    else:
        adj = _sample_skip(n, p, rng)
    return Graph(n, _rows_from_bool_matrix(adj))


def augment(host: Graph, p: float, seed: int, method: str = "canonical") -> Graph:
    """Union of a deterministic host graph with an independent G(n,p) sample
    on the same vertex set."""
    return union(host, sample_gnp(host.n, p, seed, method=method))
