"""Proximity data for a sequence of point blow-ups.

A configuration records the ambient dimension n, the number of blown-up
points s, and which later centers are proximate to which earlier ones,
i.e. lie on the strict transform of that earlier exceptional divisor.
From it we build the lower unitriangular change-of-basis matrices between
the total transform and strict transform bases of the degree-1 classes,
and convert divisor coordinate vectors both ways.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

IntMatrix = tuple[tuple[int, ...], ...]


class InvalidConfigError(ValueError):
    """A proximity configuration violates a structural invariant."""


@dataclass(frozen=True)
class ProximityConfig:
    """Blow-up sequence data: s points in P^n plus the proximity relation.

    ``prox`` holds pairs (j, i) with j > i meaning the j-th center is
    proximate to the i-th.  ``strict_snc_check`` keeps the validation rule
    that no point is proximate to more than n earlier ones; turn it off to
    experiment with degenerate configurations.
    """

    n: int
    s: int
    prox: frozenset = frozenset()
    strict_snc_check: bool = True

    def __post_init__(self):
        object.__setattr__(
            self, "prox", frozenset((int(j), int(i)) for j, i in self.prox)
        )

    def proximate_points(self, i: int) -> list[int]:
        """Indices j with the j-th point proximate to the i-th (all j > i)."""
        return sorted(j for j, t in self.prox if t == i)

    def proximity_targets(self, j: int) -> list[int]:
        """Indices i that the j-th point is proximate to (all i < j)."""
        return sorted(i for p, i in self.prox if p == j)


def validate_config(config: ProximityConfig) -> ProximityConfig:
    """Return the config unchanged, or raise InvalidConfigError naming the bad invariant."""
    if not isinstance(config.n, int) or config.n < 2:
        raise InvalidConfigError(
            "ambient dimension must be an integer >= 2, got %r" % (config.n,)
        )
    if not isinstance(config.s, int) or config.s < 1:
        raise InvalidConfigError(
            "number of points must be an integer >= 1, got %r" % (config.s,)
        )
    for j, i in sorted(config.prox):
        if not (1 <= i < j <= config.s):
            raise InvalidConfigError(
                "proximity pair (%r, %r) must satisfy 1 <= i < j <= s = %d"
                % (j, i, config.s)
            )
    if config.strict_snc_check:
        for j in range(2, config.s + 1):
            targets = config.proximity_targets(j)
            if len(targets) > config.n:
                raise InvalidConfigError(
                    "point %d is proximate to %d points, more than the ambient dimension %d"
                    % (j, len(targets), config.n)
                )
    return config


def change_of_basis(config: ProximityConfig, k: int) -> IntMatrix:
    """k x k lower unitriangular matrix with entry (j, i) = -1 when j is proximate to i.

    Rows and columns are indexed by the exceptional classes of the first k
    points; multiplying a strict-basis coordinate vector by it (see
    strict_to_total) rewrites the class in the total transform basis.
    """
    if not 1 <= k <= config.s:
        raise ValueError("k must be in 1..%d, got %d" % (config.s, k))
    rows = []
    for j in range(1, k + 1):
        row = [0] * k
        row[j - 1] = 1
        for i in config.proximity_targets(j):
            row[i - 1] = -1
        rows.append(tuple(row))
    return tuple(rows)


def augmented_change_of_basis(config: ProximityConfig, k: int) -> IntMatrix:
    """(k+1) x (k+1) version with a leading 1 for the hyperplane class."""
    inner = change_of_basis(config, k)
    rows = [tuple([1] + [0] * k)]
    for r in inner:
        rows.append(tuple([0] + list(r)))
    return tuple(rows)


def invert_unitriangular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a lower unitriangular integer matrix.

    Forward substitution only, so every entry of the result is an integer.
    Raises ValueError if the input is not lower unitriangular.
    """
    k = len(m)
    for r, row in enumerate(m):
        if len(row) != k:
            raise ValueError("matrix is not square")
        if row[r] != 1:
            raise ValueError("diagonal entry at %d is %r, expected 1" % (r, row[r]))
        if any(row[c] for c in range(r + 1, k)):
            raise ValueError("nonzero entry above the diagonal in row %d" % r)
    inv: list[list[int]] = []
    for r in range(k):
        row = [0] * k
        row[r] = 1
        for c in range(r):
            f = m[r][c]
            if f:
                prev = inv[c]
                for t in range(c + 1):
                    row[t] -= f * prev[t]
        inv.append(row)
    return tuple(tuple(r) for r in inv)


@dataclass(frozen=True)
class DivisorVector:
    """Coordinates of a degree-1 class in a tagged basis.

    Index 0 is the hyperplane class; index i >= 1 is the class of the i-th
    exceptional divisor, total transforms under the "total" tag and strict
    transforms under "strict".
    """

    basis: str
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.basis not in ("total", "strict"):
            raise ValueError("basis must be 'total' or 'strict', got %r" % self.basis)
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def total(cls, coords) -> "DivisorVector":
        return cls("total", tuple(coords))

    @classmethod
    def strict(cls, coords) -> "DivisorVector":
        return cls("strict", tuple(coords))


def _matvec(m: IntMatrix, v) -> tuple[int, ...]:
    return tuple(sum(row[c] * v[c] for c in range(len(v))) for row in m)


def _check_length(config: ProximityConfig, v: DivisorVector) -> None:
    if len(v.coords) != config.s + 1:
        raise ValueError(
            "coordinate vector has length %d, expected s + 1 = %d"
            % (len(v.coords), config.s + 1)
        )


def strict_to_total(config: ProximityConfig, v: DivisorVector) -> DivisorVector:
    if v.basis != "strict":
        raise ValueError("expected a strict-basis vector, got basis %r" % v.basis)
    _check_length(config, v)
    b = augmented_change_of_basis(config, config.s)
    return DivisorVector("total", _matvec(b, v.coords))


def total_to_strict(config: ProximityConfig, v: DivisorVector) -> DivisorVector:
    if v.basis != "total":
        raise ValueError("expected a total-basis vector, got basis %r" % v.basis)
    _check_length(config, v)
    binv = invert_unitriangular(augmented_change_of_basis(config, config.s))
    return DivisorVector("strict", _matvec(binv, v.coords))


def hyperplane(config: ProximityConfig) -> DivisorVector:
    return DivisorVector("total", (1,) + (0,) * config.s)


def total_exceptional(config: ProximityConfig, i: int) -> DivisorVector:
    if not 1 <= i <= config.s:
        raise ValueError("exceptional index %d out of range 1..%d" % (i, config.s))
    return DivisorVector("total", tuple(1 if t == i else 0 for t in range(config.s + 1)))


def strict_exceptional(config: ProximityConfig, i: int) -> DivisorVector:
    if not 1 <= i <= config.s:
        raise ValueError("exceptional index %d out of range 1..%d" % (i, config.s))
    return DivisorVector("strict", tuple(1 if t == i else 0 for t in range(config.s + 1)))


def enumerate_proximity_configs(n: int, s: int):
    """Yield every valid configuration for the given (n, s), in a fixed order.

    For each point j the predecessors it is proximate to form an arbitrary
    subset of {1..j-1} of size at most n; the product of these independent
    choices is exactly the valid set.
    """
    per_point = []
    for j in range(2, s + 1):
        choices = []
        for size in range(0, min(j - 1, n) + 1):
            choices.extend(combinations(range(1, j), size))
        per_point.append([(j, c) for c in choices])
    for combo in product(*per_point):
        prox = frozenset((j, i) for j, chosen in combo for i in chosen)
        yield ProximityConfig(n=n, s=s, prox=prox)
