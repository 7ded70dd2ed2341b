"""Exact integer linear algebra: lattices, membership, kernels, determinants.

A lattice is kept as a row-echelon integer basis (positive pivots in
strictly increasing columns, entries above each pivot reduced into
``[0, pivot)``) together with, for each basis row, the coefficients
expressing it over the originally supplied generators.  That recipe
bookkeeping is what lets :meth:`IntegerLattice.solve` return an exact
integer combination of the *original* generators, which downstream code
replays as a certified move sequence.

Everything here is plain Python integer arithmetic; no floating point.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def _pivot(row: Sequence[int]) -> int | None:
    for j, v in enumerate(row):
        if v:
            return j
    return None


class IntegerLattice:
    """Sublattice of Z^dim spanned by the supplied generator vectors."""

    def __init__(self, dim: int, generators: Iterable[Sequence[int]] = ()) -> None:
        self.dim = dim
        self.generators = []
        self.rows = []
        self.recipes = []
        for g in generators:
            self.add(g)

    def add(self, vec: Sequence[int]) -> None:
        if len(vec) != self.dim:
            raise ValueError(f"vector of length {len(vec)} in a lattice of dimension {self.dim}")
        self.generators.append([int(v) for v in vec])
        row = [int(v) for v in vec]
        recipe = [0] * len(self.generators)
        recipe[-1] = 1
        for stored in self.recipes:
            stored.append(0)
        self._reduce_in(row, recipe)
        self._normalize()

    def _reduce_in(self, row: list[int], recipe: list[int]) -> None:
        k = 0
        while True:
            j = _pivot(row)
            if j is None:
                return
            while k < len(self.rows):
                pj = _pivot(self.rows[k])
                if pj is not None and pj >= j:
                    break
                k += 1
            if k == len(self.rows) or _pivot(self.rows[k]) > j:
                if row[j] < 0:
                    row[:] = [-v for v in row]
                    recipe[:] = [-v for v in recipe]
                self.rows.insert(k, row)
                self.recipes.insert(k, recipe)
                return
            # same pivot column: one euclidean step, possibly swapping
            other, other_recipe = self.rows[k], self.recipes[k]
            q = row[j] // other[j]
            for idx in range(self.dim):
                row[idx] -= q * other[idx]
            for idx in range(len(recipe)):
                recipe[idx] -= q * other_recipe[idx]
            if row[j]:
                self.rows[k], self.recipes[k] = row, recipe
                row, recipe = other, other_recipe

    def _normalize(self) -> None:
        for k in range(len(self.rows) - 1, -1, -1):
            j = _pivot(self.rows[k])
            p = self.rows[k][j]
            for r in range(k):
                q = self.rows[r][j] // p
                if q:
                    for idx in range(self.dim):
                        self.rows[r][idx] -= q * self.rows[k][idx]
                    for idx in range(len(self.recipes[r])):
                        self.recipes[r][idx] -= q * self.recipes[k][idx]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[int]) -> tuple[Vector, list[int]]:
        """Canonical coset representative and the subtracted row multiples."""
        if len(vec) != self.dim:
            raise ValueError(f"vector of length {len(vec)} in a lattice of dimension {self.dim}")
        out = [int(v) for v in vec]
        used = [0] * len(self.rows)
        for k, row in enumerate(self.rows):
            j = _pivot(row)
            q = out[j] // row[j]
            if q:
                used[k] = q
                for idx in range(self.dim):
                    out[idx] -= q * row[idx]
        return tuple(out), used

    def canonical(self, vec: Sequence[int]) -> Vector:
        return self.reduce(vec)[0]

    def __contains__(self, vec: Sequence[int]) -> bool:
        return not any(self.reduce(vec)[0])

    def solve(self, vec: Sequence[int]) -> list[int] | None:
        """Integer coefficients over the original generators, or None."""
        reduced, used = self.reduce(vec)
        if any(reduced):
            return None
        coeffs = [0] * len(self.generators)
        for k, q in enumerate(used):
            if q:
                for idx, r in enumerate(self.recipes[k]):
                    coeffs[idx] += q * r
        return coeffs


def kernel_basis(rows: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Basis of the left kernel: all c with sum_k c_k rows[k] = 0."""
    count = len(rows)
    aug = [list(map(int, rows[k])) + [1 if j == k else 0 for j in range(count)] for k in range(count)]
    # echelon-reduce on the first `dim` columns only
    reduced: list[list[int]] = []
    for row in aug:
        while True:
            j = _pivot(row[:dim])
            if j is None:
                break
            placed = False
            for other in reduced:
                oj = _pivot(other[:dim])
                if oj == j:
                    q = row[j] // other[j]
                    for idx in range(len(row)):
                        row[idx] -= q * other[idx]
                    if row[j]:
                        other[:], row[:] = row[:], other[:]
                    placed = True
                    break
            if not placed:
                reduced.append(row)
                break
    kernel = [tuple(row[dim:]) for row in aug if _pivot(row[:dim]) is None]
    return kernel


def exact_determinant(matrix) -> int:
    """Fraction-free (Bareiss) determinant over the integers."""
    m = [[int(v) for v in row] for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    if any(len(row) != size for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def gcd_all(values: Iterable[int]) -> int:
    out = 0
    for v in values:
        out = gcd(out, abs(int(v)))
    return out
