"""Exact linear algebra over the fraction field Q(i)(v).

Dense matrices are plain lists of lists of RationalFunction and stay small
(weight modules); the sparse solver below is what the Schur-algebra scans
use for rank computation and expansion in the distinguished basis.  All
elimination is exact; pivots are chosen among the lowest-complexity entries
to keep expression swell down.
"""

from __future__ import annotations

from qschur.coeff import RF_ONE, RF_ZERO, RationalFunction

Matrix = list[list[RationalFunction]]


def zeros(m: int, n: int) -> Matrix:
    return [[RF_ZERO] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = RF_ONE
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c: RationalFunction) -> Matrix:
    return [[x * c for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m, k = len(a), len(b)
    n = len(b[0]) if b else 0
    out = zeros(m, n)
    for i in range(m):
        row_a = a[i]
        row_out = list(out[i])
        for t in range(k):
            c = row_a[t]
            if c.is_zero():
                continue
            row_b = b[t]
            for j in range(n):
                x = row_b[j]
                if not x.is_zero():
                    row_out[j] = row_out[j] + c * x
        out[i] = row_out
    return out


def mat_pow(a: Matrix, n: int) -> Matrix:
    out = identity(len(a))
    for _ in range(n):
        out = mat_mul(out, a)
    return out


def mat_vec(a: Matrix, v: list[RationalFunction]) -> list[RationalFunction]:
    out = []
    for row in a:
        s = RF_ZERO
        for c, x in zip(row, v):
            if not c.is_zero() and not x.is_zero():
                s = s + c * x
        out.append(s)
    return out


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def span_closure(mats: list[Matrix], seeds: list[list[RationalFunction]]) -> int:
    """Dimension of the smallest subspace containing the seeds and invariant
    under all the given matrices."""
    dim = len(seeds[0])
    basis: list[tuple[int, list[RationalFunction]]] = []  # (pivot index, vector)

    def insert(vec: list[RationalFunction]) -> bool:
        vec = list(vec)
        for piv, bvec in basis:
            c = vec[piv]
            if not c.is_zero():
                f = c / bvec[piv]
                for j in range(dim):
                    if not bvec[j].is_zero():
                        vec[j] = vec[j] - f * bvec[j]
        for j in range(dim):
            if not vec[j].is_zero():
                basis.append((j, vec))
                return True
        return False

    frontier = [v for v in seeds if insert(v)]
    while frontier:
        new_frontier = []
        for v in frontier:
            for a in mats:
                w = mat_vec(a, v)
                if insert(w):
                    new_frontier.append(w)
        frontier = new_frontier
    return len(basis)


class NotInSpan(ValueError):
    """A vector failed to reduce to zero against a spanning set."""


class ExactSolver:
    """Incremental exact row reduction for sparse vectors over Q(i)(v).

    Vectors are dicts keyed by arbitrary comparable keys.  Each accepted
    vector is remembered together with its expression in the original inputs,
    so members of the span can be expanded back in input coordinates.
    """

    def __init__(self):
        self._rows: list[tuple[object, dict, dict]] = []  # (pivot, vec, combo)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @staticmethod
    def _axpy(target: dict, source: dict, factor: RationalFunction) -> None:
        for k, x in source.items():
            val = factor * x
            prev = target.get(k)
            tot = val if prev is None else prev + val
            if tot.is_zero():
                target.pop(k, None)
            else:
                target[k] = tot

    def _reduce(self, vec: dict, combo: dict) -> None:
        for pivot, rvec, rcombo in self._rows:
            c = vec.get(pivot)
            if c is None or c.is_zero():
                continue
            factor = -(c / rvec[pivot])
            self._axpy(vec, rvec, factor)
            self._axpy(combo, rcombo, factor)

    def add(self, tag, vec: dict) -> bool:
        """Insert a vector; returns False when it was already in the span."""
        vec = {k: c for k, c in vec.items() if not c.is_zero()}
        combo = {tag: RF_ONE}
        self._reduce(vec, combo)
        if not vec:
            return False
        pivot = min(vec, key=lambda k: (vec[k].complexity(), k))
        # keep rows fully reduced so a single forward pass expands exactly
        for _, rvec, rcombo in self._rows:
            c = rvec.get(pivot)
            if c is None or c.is_zero():
                continue
            factor = -(c / vec[pivot])
            self._axpy(rvec, vec, factor)
            self._axpy(rcombo, combo, factor)
        self._rows.append((pivot, vec, combo))
        return True

    def expand(self, vec: dict) -> dict:
        """Coefficients of ``vec`` over the input tags; raises NotInSpan."""
        vec = {k: c for k, c in vec.items() if not c.is_zero()}
        combo: dict = {}
        self._reduce(vec, combo)
        if vec:
            raise NotInSpan(f"vector has nonzero residual on {sorted(vec)[:4]}")
        return {t: -c for t, c in combo.items() if not c.is_zero()}

    def contains(self, vec: dict) -> bool:
        try:
            self.expand(vec)
            return True
        except NotInSpan:
            return False
