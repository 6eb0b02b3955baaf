"""Seeded corpus of random two-step nilpotent superalgebras."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exactlin import F5, Field, GradedDim
from .superalg import LieSuperAlgebra, random_two_step


@dataclass(frozen=True)
class CorpusConfig:
    size: int = 200
    field: Field = F5
    max_base: GradedDim = GradedDim(3, 3)
    max_center: GradedDim = GradedDim(3, 3)
    max_total: int = 6
    first_seed: int = 0


def shapes(cfg: CorpusConfig) -> list[tuple[GradedDim, GradedDim]]:
    """Admissible (base, center) dimension splits: nonempty base and center, total capped."""
    out = []
    for b0 in range(cfg.max_base.even + 1):
        for b1 in range(cfg.max_base.odd + 1):
            for c0 in range(cfg.max_center.even + 1):
                for c1 in range(cfg.max_center.odd + 1):
                    if b0 + b1 >= 2 and c0 + c1 >= 1 and b0 + b1 + c0 + c1 <= cfg.max_total:
                        out.append((GradedDim(b0, b1), GradedDim(c0, c1)))
    return out


def corpus_member(seed: int, cfg: CorpusConfig = CorpusConfig()) -> LieSuperAlgebra:
    base, center = random.Random(f"shape-{seed}").choice(shapes(cfg))
    return random_two_step(seed, base, center, cfg.field)


def corpus(cfg: CorpusConfig = CorpusConfig()) -> list[tuple[int, LieSuperAlgebra]]:
    return [(s, corpus_member(s, cfg)) for s in range(cfg.first_seed, cfg.first_seed + cfg.size)]
