"""Brute-force graded quotient arithmetic over the integers.

This module is the independent check on the rewrite engine: it never looks
at proximity data or canonical forms, only at a list of homogeneous
generators.  Each graded slice of the ideal is materialized as an integer
row lattice (generator times complementary monomial), kept in reduced row
echelon form over Z, i.e. column-style Hermite normal form.  Membership,
canonical coset representatives, quotient ranks, torsion and minimal
generator counts all come out of that lattice by exact arithmetic.

Columns are monomials of the slice's degree listed largest-first in the
global graded lex order, so the pivots eat the large monomials and the
surviving representatives are supported on the small ones.
"""

from __future__ import annotations

import threading
from bisect import bisect_left
from dataclasses import dataclass
from math import gcd

from .poly import Polynomial, monomial_key, monomials_of_degree


def _xgcd(a, b):
    """(x, y, g) with a*x + b*y == g == gcd(a, b), g > 0 for nonzero input."""
    x0, y0, r0 = 1, 0, a
    x1, y1, r1 = 0, 1, b
    while r1:
        q = r0 // r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
        r0, r1 = r1, r0 - q * r1
    if r0 < 0:
        return -x0, -y0, -r0
    return x0, y0, r0


class HermiteLattice:
    """A sublattice of Z^width held in row echelon form with positive pivots.

    Rows are added one at a time; above-pivot reduction is deferred until a
    query needs the fully reduced (Hermite) form.  All mutation happens
    through add_row, queries never mutate.
    """

    __slots__ = ("width", "rows", "pivot_cols", "_reduced")

    def __init__(self, width):
        self.width = width
        self.rows = []
        self.pivot_cols = []
        self._reduced = True

    @property
    def rank(self):
        return len(self.rows)

    def pivot_values(self):
        return [row[c] for row, c in zip(self.rows, self.pivot_cols)]

    def copy(self):
        other = HermiteLattice(self.width)
        other.rows = [row[:] for row in self.rows]
        other.pivot_cols = list(self.pivot_cols)
        other._reduced = self._reduced
        return other

    def add_row(self, vec):
        """Fold a vector into the lattice; True if the rank grew."""
        vec = list(vec)
        if len(vec) != self.width:
            raise ValueError("row has length %d, expected %d" % (len(vec), self.width))
        rows, pcols = self.rows, self.pivot_cols
        for j in range(self.width):
            vj = vec[j]
            if not vj:
                continue
            pos = bisect_left(pcols, j)
            if pos < len(pcols) and pcols[pos] == j:
                row = rows[pos]
                a = row[j]
                if vj % a == 0:
                    q = vj // a
                    for t in range(j, self.width):
                        vec[t] -= q * row[t]
                else:
                    x, y, g = _xgcd(a, vj)
                    ag, bg = a // g, vj // g
                    for t in range(j, self.width):
                        rt, vt = row[t], vec[t]
                        row[t] = x * rt + y * vt
                        vec[t] = ag * vt - bg * rt
                    self._reduced = False
            else:
                if vj < 0:
                    vec = [-c for c in vec]
                rows.insert(pos, vec)
                pcols.insert(pos, j)
                self._reduced = False
                return True
        return False

    def _ensure_reduced(self):
        # Back-substitution: make every entry above a pivot lie in [0, pivot).
        if self._reduced:
            return
        rows, pcols = self.rows, self.pivot_cols
        r = len(rows)
        for k in range(r - 2, -1, -1):
            rk = rows[k]
            for m in range(k + 1, r):
                jm = pcols[m]
                piv = rows[m][jm]
                q = rk[jm] // piv
                if q:
                    rm = rows[m]
                    for t in range(jm, self.width):
                        rk[t] -= q * rm[t]
        self._reduced = True

    def reduce_vector(self, vec):
        """Canonical coset representative of vec modulo the lattice."""
        if len(vec) != self.width:
            raise ValueError("vector has length %d, expected %d" % (len(vec), self.width))
        self._ensure_reduced()
        v = list(vec)
        for row, j in zip(self.rows, self.pivot_cols):
            if v[j]:
                q = v[j] // row[j]
                if q:
                    for t in range(j, self.width):
                        v[t] -= q * row[t]
        return v

    def contains(self, vec):
        return not any(self.reduce_vector(vec))

    def elementary_divisors(self):
        """Smith normal form divisors of the row matrix (rank many, positive)."""
        if all(p == 1 for p in self.pivot_values()):
            # unit pivots: the rows extend to a basis of Z^width
            return [1] * self.rank
        return _smith_divisors([row[:] for row in self.rows], self.width)


def _smith_divisors(m, ncols):
    nr = len(m)
    divisors = []
    k = 0
    while k < nr and k < ncols:
        best = None
        for i in range(k, nr):
            row = m[i]
            for j in range(k, ncols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i0, j0 = best
        m[k], m[i0] = m[i0], m[k]
        if j0 != k:
            for row in m:
                row[k], row[j0] = row[j0], row[k]
        done = False
        while not done:
            done = True
            piv = m[k][k]
            for i in range(k + 1, nr):
                v = m[i][k]
                if v:
                    q = v // piv
                    if q:
                        mi, mk = m[i], m[k]
                        for t in range(k, ncols):
                            mi[t] -= q * mk[t]
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        done = False
                        piv = m[k][k]
            for j in range(k + 1, ncols):
                v = m[k][j]
                if v:
                    q = v // piv
                    if q:
                        for row in m:
                            row[j] -= q * row[k]
                    if m[k][j]:
                        for row in m:
                            row[k], row[j] = row[j], row[k]
                        done = False
                        piv = m[k][k]
        divisors.append(abs(m[k][k]))
        k += 1
    # enforce the divisibility chain d_1 | d_2 | ...
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            a, b = divisors[i], divisors[j]
            if b % a:
                g = gcd(a, b)
                divisors[i], divisors[j] = g, a * b // g
    return divisors


@dataclass(frozen=True)
class GradedPiece:
    """One degree slice: its monomials (largest first) and the ideal lattice."""

    degree: int
    monomials: tuple
    index: dict
    lattice: HermiteLattice

    def vector_of(self, p):
        v = [0] * len(self.monomials)
        for exps, coef in p.terms.items():
            pos = self.index.get(exps)
            if pos is None:
                raise ValueError(
                    "monomial %r does not have degree %d" % (exps, self.degree)
                )
            v[pos] = coef
        return v

    def polynomial_of(self, vec, nvars):
        terms = {}
        for pos, coef in enumerate(vec):
            if coef:
                terms[self.monomials[pos]] = coef
        return Polynomial(nvars, terms)


@dataclass(frozen=True)
class QuotientSlice:
    """Free rank and torsion divisors (each > 1) of one graded quotient slice."""

    degree: int
    rank: int
    torsion: tuple

    @property
    def torsion_free(self):
        return not self.torsion


class GradedIdeal:
    """A homogeneous ideal of Z[v_0..v_{nvars-1}] with slices built on demand.

    Generators must be homogeneous under the (optionally weighted) grading
    and of degree at most max_degree; slices above max_degree are not
    materialized and querying them raises.  Slice construction is guarded
    by a lock so concurrent readers share one build.
    """

    def __init__(self, nvars, generators, max_degree, weights=None):
        if weights is None:
            weights = (1,) * nvars
        weights = tuple(int(w) for w in weights)
        if len(weights) != nvars or any(w < 1 for w in weights):
            raise ValueError("weights must be %d positive integers" % nvars)
        gens = []
        for g in generators:
            if g.nvars != nvars:
                raise ValueError("generator has %d variables, expected %d" % (g.nvars, nvars))
            if g.is_zero():
                continue
            d = g.homogeneous_degree(weights)
            if d > max_degree:
                raise ValueError(
                    "generator of degree %d exceeds max_degree %d" % (d, max_degree)
                )
            gens.append(g)
        self.nvars = nvars
        self.generators = tuple(gens)
        self.max_degree = int(max_degree)
        self.weights = weights
        self._pieces = {}
        self._lock = threading.Lock()

    def _build_piece(self, d, proper_multiples_only):
        monos = monomials_of_degree(self.nvars, d, self.weights)
        index = {m: i for i, m in enumerate(monos)}
        lat = HermiteLattice(len(monos))
        piece = GradedPiece(d, tuple(monos), index, lat)
        low = 1 if proper_multiples_only else 0
        for g in self.generators:
            dg = g.homogeneous_degree(self.weights)
            r = d - dg
            if r < low:
                continue
            for m in monomials_of_degree(self.nvars, r, self.weights):
                shifted = Polynomial(
                    self.nvars,
                    {
                        tuple(a + b for a, b in zip(exps, m)): coef
                        for exps, coef in g.terms.items()
                    },
                )
                lat.add_row(piece.vector_of(shifted))
        return piece

    def piece(self, d, proper_multiples_only=False):
        if not 0 <= d <= self.max_degree:
            raise ValueError(
                "degree %d outside the materialized range 0..%d" % (d, self.max_degree)
            )
        key = (d, proper_multiples_only)
        with self._lock:
            piece = self._pieces.get(key)
            if piece is None:
                piece = self._build_piece(d, proper_multiples_only)
                self._pieces[key] = piece
        return piece


def membership(ideal: GradedIdeal, p: Polynomial) -> bool:
    """Exact test p in ideal, for homogeneous p of degree <= max_degree."""
    if p.is_zero():
        return True
    d = p.homogeneous_degree(ideal.weights)
    piece = ideal.piece(d)
    return piece.lattice.contains(piece.vector_of(p))


def reduce(ideal: GradedIdeal, p: Polynomial) -> Polynomial:
    """Canonical coset representative of p modulo the ideal's slice lattice.

    Representatives are unique per coset, so reduce(p) == reduce(q) exactly
    when p - q lies in the ideal's degree slice.
    """
    if p.is_zero():
        return Polynomial.zero(ideal.nvars)
    d = p.homogeneous_degree(ideal.weights)
    piece = ideal.piece(d)
    residue = piece.lattice.reduce_vector(piece.vector_of(p))
    return piece.polynomial_of(residue, ideal.nvars)


def quotient_structure(ideal: GradedIdeal, d: int) -> QuotientSlice:
    """Free rank plus torsion divisors of (degree-d forms)/(ideal slice)."""
    piece = ideal.piece(d)
    rank = len(piece.monomials) - piece.lattice.rank
    torsion = tuple(e for e in piece.lattice.elementary_divisors() if e != 1)
    return QuotientSlice(d, rank, torsion)


def quotient_rank(ideal: GradedIdeal, d: int) -> int:
    return quotient_structure(ideal, d).rank


def rational_membership(ideal: GradedIdeal, p: Polynomial) -> bool:
    """True when some nonzero integer multiple of p lies in the ideal slice."""
    if p.is_zero():
        return True
    d = p.homogeneous_degree(ideal.weights)
    piece = ideal.piece(d)
    probe = piece.lattice.copy()
    return not probe.add_row(piece.vector_of(p))


def minimal_generator_count(ideal: GradedIdeal) -> dict:
    """Degrees and counts of a minimal homogeneous generating set.

    In degree d the count is rank(I_d) - rank((m*I)_d) with m the irrelevant
    ideal; nothing new can appear above the top generator degree, so the
    scan stops there.  Only degrees with a nonzero count are reported.
    """
    if not ideal.generators:
        return {}
    top = max(g.homogeneous_degree(ideal.weights) for g in ideal.generators)
    if top > ideal.max_degree - 1:
        raise ValueError(
            "minimal generator counts need max_degree >= top generator degree + 1"
        )
    counts = {}
    for d in range(0, top + 1):
        full = ideal.piece(d).lattice.rank
        proper = ideal.piece(d, proper_multiples_only=True).lattice.rank
        if full - proper:
            counts[d] = full - proper
    return counts
