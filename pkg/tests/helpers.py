"""Shared test utilities: cached ideals, random configs, independent oracles."""

from __future__ import annotations

from functools import lru_cache
from random import Random

from skychow.chowring import total_presentation
from skychow.oracle import GradedIdeal
from skychow.proximity import ProximityConfig, validate_config


@lru_cache(maxsize=None)
def cached_total_ideal(n: int, s: int) -> GradedIdeal:
    """The total-basis ideal for (n, s); proximity plays no role in it."""
    cfg = ProximityConfig(n=n, s=s)
    pres = total_presentation(cfg)
    return GradedIdeal(s + 1, pres.relations, n + 1)


def random_config(rng: Random, n: int, s: int) -> ProximityConfig:
    """Uniform-ish random valid configuration for fixed (n, s)."""
    prox = set()
    for j in range(2, s + 1):
        k = rng.randint(0, min(j - 1, n))
        for i in rng.sample(range(1, j), k):
            prox.add((j, i))
    return validate_config(ProximityConfig(n=n, s=s, prox=frozenset(prox)))


def dag_path_counts(config: ProximityConfig, j: int, i: int) -> int:
    """Number of proximity chains j -> ... -> i, counted by brute force."""
    if j == i:
        return 1
    total = 0
    for t in config.proximity_targets(j):
        if t >= i:
            total += dag_path_counts(config, t, i)
    return total
