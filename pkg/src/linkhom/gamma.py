"""The faithful linear representation of the homotopy braid group.

A braid on n strands acts on the reduced free group RF_n; reading each
generator image through the commutator normal form linearises the action
into an integer matrix indexed by the basic-commutator basis.  The matrix
of a braid ``b`` has, as its column for the basis element ``alpha``, the
exponent vector of the action of ``b`` on the commutator word of
``alpha``.  Columns are images, so matrices compose in braid order:
``gamma(a b) = gamma(a) @ gamma(b)``.

Two roads to the generator matrices exist and are kept strictly apart so
they can check each other:

* the definitional route (:func:`generator_matrix`): act on each basis
  commutator word, then take the normal form; this is what
  :func:`gamma_matrix` is built from;
* the closed form (:func:`gamma_generator_closed_form`): a seven-way case
  split on where i and i+1 sit inside the index sequence, including the
  signed sum over reversed subsequences when i leads and i+1 follows.

Equality of the two on every basis element is an acceptance requirement,
not an implementation detail.

Matrices are int64 with an exact-arithmetic escalation to Python integers
whenever a product could approach the int64 range, so all results are
exact regardless of word length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .braids import BraidWord, BraidError, permutation_of
from .reduced_free import (
    BasicCommutator,
    CommutatorBasis,
    RankError,
    artin_act,
    commutator_word,
    enumerate_basic_commutators,
    rfg_normal_form,
)

_INT64_SAFE = 2**62


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.max(np.abs(a)))


def _safe_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact matrix product: int64 while provably safe, Python ints beyond."""
    if a.dtype == object or b.dtype == object:
        return a.astype(object) @ b.astype(object)
    inner = a.shape[1] if a.ndim == 2 else a.shape[0]
    if _max_abs(a) * _max_abs(b) * max(inner, 1) >= _INT64_SAFE:
        return a.astype(object) @ b.astype(object)
    return a @ b


@dataclass(frozen=True)
class GammaMatrix:
    """Integer matrix of the representation in a fixed commutator basis."""

    basis: CommutatorBasis
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = len(self.basis)
        if self.matrix.shape != (m, m):
            raise RankError(f"matrix shape {self.matrix.shape} does not match basis size {m}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GammaMatrix)
            and self.basis.rank == other.basis.rank
            and self.basis.order == other.basis.order
            and bool(np.array_equal(self.matrix, other.matrix))
        )

    def entry(self, row: BasicCommutator, col: BasicCommutator) -> int:
        return int(self.matrix[self.basis.index_of(row), self.basis.index_of(col)])

    def column(self, col: BasicCommutator) -> dict[BasicCommutator, int]:
        j = self.basis.index_of(col)
        return {
            self.basis.elements[r]: int(v)
            for r, v in enumerate(self.matrix[:, j])
            if v != 0
        }

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.matrix, np.eye(len(self.basis), dtype=self.matrix.dtype)))

    def as_map(self) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
        """Entries keyed by (row sequence, column sequence): order-free form."""
        out = {}
        rows, cols = np.nonzero(self.matrix)
        for r, c in zip(rows, cols):
            key = (self.basis.elements[r].sequence, self.basis.elements[c].sequence)
            out[key] = int(self.matrix[r, c])
        return out

    def to_json(self) -> dict:
        return {
            "basis_order": [a.key() for a in self.basis.elements],
            "rows": [[int(v) for v in row] for row in self.matrix],
        }


def _definitional_column(b: BraidWord, alpha: BasicCommutator, basis: CommutatorBasis) -> list[int]:
    image = artin_act(b, commutator_word(basis.rank, alpha.sequence))
    return list(rfg_normal_form(image, basis).values)


@lru_cache(maxsize=None)
def generator_matrix(n: int, i: int, sign: int, order: str = "weight-lex") -> np.ndarray:
    """Definitional matrix of sigma_i^{sign} on n strands (cached, read-only).

    Both signs are computed from the action itself; the pair is checked to
    multiply to the identity, which pins the inverse action formulas.
    """
    if not 1 <= i <= n - 1:
        raise BraidError(f"generator index {i} out of range for {n} strands")
    basis = enumerate_basic_commutators(n, order)
    word = BraidWord(n, ((i, sign),))
    m = len(basis)
    mat = np.zeros((m, m), dtype=np.int64)
    for c, alpha in enumerate(basis.elements):
        mat[:, c] = _definitional_column(word, alpha, basis)
    mat.flags.writeable = False
    if sign == -1:
        plus = generator_matrix(n, i, 1, order)
        assert np.array_equal(plus @ mat, np.eye(m, dtype=np.int64)), (
            "inverse generator matrix is not the matrix inverse"
        )
    return mat


def gamma_matrix(b: BraidWord, basis: CommutatorBasis | None = None) -> GammaMatrix:
    """Matrix of a braid word: product of the generator matrices in word order."""
    if basis is None:
        basis = enumerate_basic_commutators(b.strands)
    if basis.rank != b.strands:
        raise RankError(f"rank mismatch: braid {b.strands}, basis {basis.rank}")
    out = np.eye(len(basis), dtype=np.int64)
    for i, sign in b.letters:
        out = _safe_matmul(out, generator_matrix(b.strands, i, sign, basis.order))
    return GammaMatrix(basis, out)


def gamma_matrix_definitional(b: BraidWord, basis: CommutatorBasis | None = None) -> GammaMatrix:
    """Matrix computed column by column from the action of the whole word.

    Exponentially slower than :func:`gamma_matrix` on long words; kept as an
    independent oracle for the homomorphism property.
    """
    if basis is None:
        basis = enumerate_basic_commutators(b.strands)
    if basis.rank != b.strands:
        raise RankError(f"rank mismatch: braid {b.strands}, basis {basis.rank}")
    m = len(basis)
    mat = np.zeros((m, m), dtype=np.int64)
    for c, alpha in enumerate(basis.elements):
        mat[:, c] = _definitional_column(b, alpha, basis)
    return GammaMatrix(basis, mat)


def gamma_apply(b: BraidWord, vector: np.ndarray, basis: CommutatorBasis) -> np.ndarray:
    """gamma(b) @ vector without forming the product matrix (exact)."""
    if basis.rank != b.strands:
        raise RankError(f"rank mismatch: braid {b.strands}, basis {basis.rank}")
    vec = np.asarray(vector)
    dim = len(basis)
    for i, sign in reversed(b.letters):
        mat = generator_matrix(b.strands, i, sign, basis.order)
        if vec.dtype == object or _max_abs(mat) * _max_abs(vec) * dim >= _INT64_SAFE:
            vec = mat.astype(object) @ vec.astype(object)
        else:
            vec = mat @ vec
    return vec


def braid_equal_lh(a: BraidWord, b: BraidWord) -> bool:
    """Link-homotopy equality of braids, decided by the faithful representation."""
    if a.strands != b.strands:
        raise BraidError(f"strand count mismatch: {a.strands} != {b.strands}")
    return gamma_matrix(a) == gamma_matrix(b)


# ---------------------------------------------------------------------------
# Closed-form generator images.


def gamma_generator_closed_form(
    i: int, alpha: BasicCommutator, n: int
) -> dict[BasicCommutator, int]:
    """Image of a basis element under sigma_i as a signed commutator sum.

    Case split on the positions of i and i+1 in the sequence; exactly one
    case applies.  With I, J, K denoting (possibly empty, for I only where
    stated nonempty) subsequences avoiding i and i+1:

      (a) (I)           -> (I)                 neither index occurs
      (b) (J,i,K)       -> (J,i+1,K)           only i occurs
      (c) (i+1,K)       -> (i,K) + (i,i+1,K)   only i+1 occurs, leading
      (d) (I,i+1,K)     -> (I,i,K) + (I,i,i+1,K) - (I,i+1,i,K)
      (e) (I,i,J,i+1,K) -> (I,i+1,J,i,K)       both occur, i first of the two
      (f) (I,i+1,J,i,K) -> (I,i,J,i+1,K)       both occur, i+1 first of the two
      (g) (i,J,i+1,K)   -> sum over subsequences J' of J of
                           (-1)^{|J'|+1} (i, reverse(J'), i+1, J-J', K)
    """
    if not 1 <= i <= n - 1:
        raise BraidError(f"generator index {i} out of range for {n} strands")
    seq = alpha.sequence
    if seq and max(seq) > n:
        raise RankError(f"commutator {seq} out of range for rank {n}")
    pos_i = seq.index(i) if i in seq else None
    pos_i1 = seq.index(i + 1) if i + 1 in seq else None

    if pos_i is None and pos_i1 is None:  # (a)
        return {alpha: 1}

    if pos_i is not None and pos_i1 is None:  # (b)
        out = seq[:pos_i] + (i + 1,) + seq[pos_i + 1 :]
        return {BasicCommutator(out): 1}

    if pos_i is None and pos_i1 is not None:
        head, tail = seq[:pos_i1], seq[pos_i1 + 1 :]
        if pos_i1 == 0:  # (c)
            return {
                BasicCommutator((i,) + tail): 1,
                BasicCommutator((i, i + 1) + tail): 1,
            }
        return {  # (d)
            BasicCommutator(head + (i,) + tail): 1,
            BasicCommutator(head + (i, i + 1) + tail): 1,
            BasicCommutator(head + (i + 1, i) + tail): -1,
        }

    assert pos_i is not None and pos_i1 is not None
    if pos_i1 < pos_i or pos_i > 0:  # (f) and (e): swap i and i+1
        swapped = list(seq)
        swapped[pos_i], swapped[pos_i1] = i + 1, i
        return {BasicCommutator(tuple(swapped)): 1}

    # (g): i leads, i+1 occurs later.
    middle = seq[1:pos_i1]
    tail = seq[pos_i1 + 1 :]
    out: dict[BasicCommutator, int] = {}
    for size in range(len(middle) + 1):
        for picked in itertools.combinations(range(len(middle)), size):
            chosen = tuple(middle[p] for p in picked)
            rest = tuple(middle[p] for p in range(len(middle)) if p not in picked)
            target = BasicCommutator(
                (i,) + tuple(reversed(chosen)) + (i + 1,) + rest + tail
            )
            sign = 1 if size % 2 else -1
            out[target] = out.get(target, 0) + sign
    return out


def closed_form_generator_matrix(n: int, i: int, order: str = "weight-lex") -> np.ndarray:
    """Matrix of sigma_i assembled from the closed form (oracle route)."""
    basis = enumerate_basic_commutators(n, order)
    m = len(basis)
    mat = np.zeros((m, m), dtype=np.int64)
    for c, alpha in enumerate(basis.elements):
        for target, coeff in gamma_generator_closed_form(i, alpha, n).items():
            mat[basis.index_of(target), c] += coeff
    return mat


# ---------------------------------------------------------------------------
# Structural verification.


@dataclass
class StructureReport:
    """Outcome of the shape checks on a braid's matrix."""

    pure: bool
    block_triangular: bool
    permutation_block_ok: bool
    pair_block_ok: bool
    diagonal_blocks_identity: bool | None
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def structure_report(m: GammaMatrix, b: BraidWord) -> StructureReport:
    """Verify block triangularity by weight and the two leading diagonal blocks.

    The weight-1 diagonal block must permute the basis like the braid's
    permutation; the weight-2 block must act on index pairs by the same
    permutation, with a sign when the images need reordering.  When the
    braid is pure every diagonal block must be the identity.
    """
    basis = m.basis
    q = permutation_of(b)
    violations: list[str] = []

    weights = [alpha.weight for alpha in basis.elements]
    triangular = True
    for r in range(len(basis)):
        for c in range(len(basis)):
            if m.matrix[r, c] != 0 and weights[r] < weights[c]:
                triangular = False
                violations.append(
                    f"entry ({basis.elements[r]}, {basis.elements[c]}) above the diagonal blocks"
                )

    perm_ok = True
    for c in basis.weight_range(1):
        col = basis.elements[c]
        expect = BasicCommutator((q(col.sequence[0]),))
        for r in basis.weight_range(1):
            want = 1 if basis.elements[r] == expect else 0
            if m.matrix[r, c] != want:
                perm_ok = False
                violations.append(f"weight-1 block at column {col} differs from the permutation")
                break

    pair_ok = True
    for c in basis.weight_range(2):
        col = basis.elements[c]
        k, j = col.sequence
        qk, qj = q(k), q(j)
        expect = BasicCommutator((qk, qj)) if qk < qj else BasicCommutator((qj, qk))
        expect_sign = 1 if qk < qj else -1
        for r in basis.weight_range(2):
            want = expect_sign if basis.elements[r] == expect else 0
            if m.matrix[r, c] != want:
                pair_ok = False
                violations.append(f"weight-2 block at column {col} differs from the signed pair action")
                break

    pure = q.is_identity()
    diag_identity: bool | None = None
    if pure:
        diag_identity = True
        for weight in range(1, basis.rank + 1):
            rng = basis.weight_range(weight)
            for r in rng:
                for c in rng:
                    want = 1 if r == c else 0
                    if m.matrix[r, c] != want:
                        diag_identity = False
                        violations.append(f"weight-{weight} diagonal block is not the identity")
                        break
                if diag_identity is False:
                    break
            if diag_identity is False:
                break

    return StructureReport(
        pure=pure,
        block_triangular=triangular,
        permutation_block_ok=perm_ok,
        pair_block_ok=pair_ok,
        diagonal_blocks_identity=diag_identity,
        violations=violations,
    )


def diagonal_block(m: GammaMatrix, weight: int) -> np.ndarray:
    rng = m.basis.weight_range(weight)
    return m.matrix[rng.start : rng.stop, rng.start : rng.stop]
