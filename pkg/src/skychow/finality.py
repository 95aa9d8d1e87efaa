"""Two independent deciders for finality of an exceptional divisor.

The combinatorial one reads the proximity relation: a divisor is final
when no later point is proximate to it.  The ring-theoretic one never
looks at proximity; it finds the divisors meeting E_i by multiplying
strict classes and then tests the two intersection-product conditions
that characterize finality.  The two provably agree, and the test suite
checks that exhaustively on small cases; a disagreement would mean an
implementation bug, not a mathematical surprise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chowring import ChowElement, degree_integral, from_divisor
from .proximity import (
    ProximityConfig,
    hyperplane,
    strict_exceptional,
    validate_config,
)


@lru_cache(maxsize=None)
def _strict_classes(config):
    # index 0 unused; entry i is the canonical form of the i-th strict class
    classes = [None]
    for i in range(1, config.s + 1):
        classes.append(from_divisor(config, strict_exceptional(config, i)))
    return tuple(classes)


def final_by_proximity(config: ProximityConfig, i: int) -> bool:
    """No later point proximate to the i-th: the divisor survives unchanged."""
    validate_config(config)
    if not 1 <= i <= config.s:
        raise ValueError("divisor index %d out of range 1..%d" % (i, config.s))
    return not config.proximate_points(i)


def intersecting_indices(config: ProximityConfig, i: int) -> set:
    """Indices j != i whose strict class has nonzero product with the i-th.

    Computed in the ring, not from proximity; on iterated blow-ups the two
    can differ (a satellite point can separate two earlier divisors).
    """
    validate_config(config)
    if not 1 <= i <= config.s:
        raise ValueError("divisor index %d out of range 1..%d" % (i, config.s))
    e = _strict_classes(config)
    out = set()
    for j in range(1, config.s + 1):
        if j != i and not (e[i] * e[j]).is_zero():
            out.add(j)
    return out


def _chow_conditions(config, i):
    """(final?, witness) from the intersection-product characterization."""
    n = config.n
    e = _strict_classes(config)
    h = from_divisor(config, hyperplane(config))
    hn = h**n
    ei_pows = [ChowElement.one(config.n, config.s)]
    for _ in range(n):
        ei_pows.append(ei_pows[-1] * e[i])
    ein = ei_pows[n]
    for j in sorted(intersecting_indices(config, i)):
        ej_pows = [ChowElement.one(config.n, config.s)]
        for _ in range(n):
            ej_pows.append(ej_pows[-1] * e[j])
        # condition (11): e_j^(n-1) * e_i must be the point class
        lhs = ej_pows[n - 1] * e[i]
        if lhs != hn:
            return (
                False,
                "condition (11) fails for j=%d: integral %d, expected 1"
                % (j, degree_integral(lhs)),
            )
        # condition (10): e_i^n == (-1)^r e_i^(n-r) e_j^r for every r
        for r in range(1, n):
            rhs = ei_pows[n - r] * ej_pows[r] * ((-1) ** r)
            if ein != rhs:
                return (
                    False,
                    "condition (10) fails for j=%d at r=%d: integral %d, expected %d"
                    % (j, r, degree_integral(rhs), degree_integral(ein)),
                )
    return True, None


def final_by_chow(config: ProximityConfig, i: int) -> bool:
    """Finality decided purely from intersection products."""
    validate_config(config)
    if not 1 <= i <= config.s:
        raise ValueError("divisor index %d out of range 1..%d" % (i, config.s))
    ok, _ = _chow_conditions(config, i)
    return ok


@dataclass(frozen=True)
class DivisorFinality:
    index: int
    final_proximity: bool
    final_chow: bool
    witness: str | None

    @property
    def agree(self):
        return self.final_proximity == self.final_chow


@dataclass(frozen=True)
class FinalityReport:
    config: ProximityConfig
    divisors: tuple

    @property
    def all_agree(self):
        return all(d.agree for d in self.divisors)

    def to_json_dict(self):
        return {
            "divisors": [
                {
                    "i": d.index,
                    "final_proximity": d.final_proximity,
                    "final_chow": d.final_chow,
                    "witness": d.witness,
                }
                for d in self.divisors
            ]
        }


def finality_report(config: ProximityConfig) -> FinalityReport:
    """Both deciders on every divisor, with a witness for each chow failure."""
    validate_config(config)
    entries = []
    for i in range(1, config.s + 1):
        by_prox = not config.proximate_points(i)
        by_chow, witness = _chow_conditions(config, i)
        entries.append(DivisorFinality(i, by_prox, by_chow, witness))
    return FinalityReport(config, tuple(entries))
