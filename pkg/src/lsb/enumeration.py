"""Exhaustive max-rank scans over F_p^n.

Elements are visited in lexicographic coordinate order, keeping only the
canonical projective representative of each line (first nonzero coordinate
equal to 1) plus the zero vector.  Rank is invariant under nonzero scaling,
so this covers every element.  Work splits into disjoint index blocks; the
reduction keeps the largest rank and the smallest index attaining it, so the
result does not depend on how the blocks were scheduled.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import UnsupportedMethod
from .exactlin import GradedDim, batch_rank

ORACLE_CAP = 10 ** 7
CHUNK = 1 << 14
PARALLEL_THRESHOLD = 1 << 16


def projective_block(n: int, p: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray]:
    """(indices, coordinates) of canonical representatives with lex index in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % p
    nz = digits != 0
    has = nz.any(axis=1)
    lead = digits[np.arange(len(idx)), np.argmax(nz, axis=1)] if n else np.zeros(len(idx), dtype=np.int64)
    keep = ~has | (lead == 1)
    return idx[keep], digits[keep]


def all_block(n: int, p: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


class AdjointMaps:
    """x -> matrix of y -> [x, y] restricted to the columns ``right`` (or all of L).

    The structure tensor is contracted with ``right`` once, so each batch is a
    single matrix product.
    """

    def __init__(self, sc: np.ndarray, p: int, right: np.ndarray | None = None):
        sc = np.asarray(sc, dtype=np.int64)
        self.p = p
        self.n_in, self.n_out = sc.shape[0], sc.shape[2]
        if right is not None:
            sc = np.einsum("ijk,aj->iak", sc, np.asarray(right, dtype=np.int64)) % p
        self.cols = sc.shape[1]
        self._flat = np.ascontiguousarray(sc.reshape(self.n_in, self.cols * self.n_out))

    def __call__(self, X: np.ndarray) -> np.ndarray:
        out = (np.asarray(X, dtype=np.int64) @ self._flat) % self.p
        return out.reshape(len(X), self.cols, self.n_out).transpose(0, 2, 1)


@dataclass
class ScanResult:
    total: int
    witness_index: int
    witness: tuple
    pairs: set = field(default_factory=set)
    maximizers: list | None = None


def _pair_ranks(mats: np.ndarray, split: int, p: int) -> list[GradedDim]:
    ev = batch_rank(mats[:, :split, :], p) if split else np.zeros(len(mats), dtype=np.int64)
    od = batch_rank(mats[:, split:, :], p) if mats.shape[1] > split else np.zeros(len(mats), dtype=np.int64)
    return [GradedDim(int(a), int(b)) for a, b in zip(ev, od)]


def _scan_range(maps, n: int, p: int, split: int, start: int, stop: int, collect: bool,
                projective: bool = True) -> ScanResult | None:
    best: ScanResult | None = None
    for s in range(start, stop, CHUNK):
        e = min(stop, s + CHUNK)
        if projective:
            idx, X = projective_block(n, p, s, e)
        else:
            X = all_block(n, p, s, e)
            idx = np.arange(s, e, dtype=np.int64)
        if not len(idx):
            continue
        mats = maps(X)
        r = batch_rank(mats, p)
        top = int(r.max())
        if best is not None and top < best.total:
            continue
        sel = np.nonzero(r == top)[0]
        pairs = set(_pair_ranks(mats[sel], split, p))
        maxers = [tuple(int(c) for c in X[t]) for t in sel] if collect else None
        if best is None or top > best.total:
            best = ScanResult(top, int(idx[sel[0]]), tuple(int(c) for c in X[sel[0]]), pairs, maxers)
        else:
            best.pairs |= pairs
            if collect:
                best.maximizers.extend(maxers)
    return best


def _merge(results: list[ScanResult | None]) -> ScanResult:
    results = [r for r in results if r is not None]
    top = max(r.total for r in results)
    winners = sorted((r for r in results if r.total == top), key=lambda r: r.witness_index)
    out = ScanResult(top, winners[0].witness_index, winners[0].witness, set(),
                     [] if winners[0].maximizers is not None else None)
    for r in winners:
        out.pairs |= r.pairs
        if out.maximizers is not None:
            out.maximizers.extend(r.maximizers)
    return out


def default_jobs() -> int:
    return os.cpu_count() or 1


def max_rank_scan(maps, n: int, p: int, split: int, *, collect: bool = False, jobs: int = 1,
                  cap: int = ORACLE_CAP, projective: bool = True) -> ScanResult:
    """Maximum rank of ``maps(x)`` over F_p^n with witness, maximizer pairs and optionally all maximizers."""
    size = p ** n
    if size > cap:
        raise UnsupportedMethod(f"enumeration of {p}^{n} = {size} elements exceeds the cap {cap}")
    if jobs <= 1 or size < PARALLEL_THRESHOLD:
        return _merge([_scan_range(maps, n, p, split, 0, size, collect, projective)])
    bounds = np.linspace(0, size, jobs + 1, dtype=np.int64)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futs = [pool.submit(_scan_range, maps, n, p, split, int(a), int(b), collect, projective)
                for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        return _merge([f.result() for f in futs])


def iter_ranks(maps, n: int, p: int, *, projective: bool = True, cap: int = ORACLE_CAP):
    """Yield ``(coords, ranks)`` chunks over all (representative) elements of F_p^n."""
    size = p ** n
    if size > cap:
        raise UnsupportedMethod(f"enumeration of {p}^{n} = {size} elements exceeds the cap {cap}")
    for s in range(0, size, CHUNK):
        e = min(size, s + CHUNK)
        X = projective_block(n, p, s, e)[1] if projective else all_block(n, p, s, e)
        if len(X):
            yield X, batch_rank(maps(X), p)
