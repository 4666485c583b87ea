"""Exact linear algebra over the prime field F_p.

Matrices are tuples of row tuples with entries in 0..p-1; vectors are plain
tuples.  Everything here is tiny and allocation-happy by design: the ambient
vector spaces never exceed rank 5 or so.
"""

from __future__ import annotations

import itertools
from typing import Iterator


def identity_matrix(r: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def transpose(m: tuple) -> tuple:
    if not m or not m[0]:
        return ()
    return tuple(zip(*m))


def mat_vec(m: tuple, v: tuple, p: int) -> tuple:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) % p for row in m)


def mat_mul(a: tuple, b: tuple, p: int) -> tuple:
    cols = len(b[0]) if b else 0
    return tuple(
        tuple(sum(arow[k] * b[k][j] for k in range(len(b))) % p for j in range(cols))
        for arow in a
    )


def mat_rank(m: tuple, p: int) -> int:
    rows = [list(r) for r in m]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rref(m: tuple, p: int) -> tuple[tuple, tuple]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in m]
    ncols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col]
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return tuple(tuple(r) for r in rows[:rank]), tuple(pivots)


def kernel_basis(m: tuple, p: int, ncols: int) -> list[tuple]:
    """Deterministic basis of the right kernel of m (echelon-derived)."""
    reduced, pivots = rref(m, p)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = [0] * ncols
        v[j] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-reduced[i][j]) % p
        basis.append(tuple(v))
    return basis


def mat_inverse(m: tuple, p: int) -> tuple:
    r = len(m)
    aug = [list(m[i]) + [1 if j == i else 0 for j in range(r)] for i in range(r)]
    reduced, pivots = rref(tuple(tuple(row) for row in aug), p)
    if pivots[:r] != tuple(range(r)):
        raise ValueError("matrix is singular over F_%d" % p)
    return tuple(tuple(row[r:]) for row in reduced[:r])


def matrix_order(m: tuple, p: int) -> int:
    ident = identity_matrix(len(m))
    acc, k = m, 1
    while acc != ident:
        acc = mat_mul(acc, m, p)
        k += 1
        if k > p ** (len(m) ** 2):
            raise ValueError("matrix is not invertible")
    return k


def enumerate_vectors(r: int, p: int) -> Iterator[tuple]:
    """All vectors of F_p^r in lexicographic order."""
    return itertools.product(range(p), repeat=r)


def enumerate_injective_matrices(rows: int, cols: int, p: int) -> Iterator[tuple]:
    """All full-column-rank rows x cols matrices, columns chosen in lex order."""
    if cols == 0:
        yield tuple(() for _ in range(rows))
        return
    if cols > rows:
        return

    def extend(chosen):
        if len(chosen) == cols:
            yield tuple(tuple(col[i] for col in chosen) for i in range(rows))
            return
        for v in enumerate_vectors(rows, p):
            if mat_rank(tuple(chosen) + (v,), p) == len(chosen) + 1:
                yield from extend(chosen + [v])

    yield from extend([])


def enumerate_subspaces(ambient: int, dim: int, p: int) -> Iterator[tuple]:
    """All dim-dimensional subspaces of F_p^ambient as canonical RREF row bases."""
    if dim == 0:
        yield ()
        return
    for pivots in itertools.combinations(range(ambient), dim):
        free_pos = [
            (i, j)
            for i in range(dim)
            for j in range(pivots[i] + 1, ambient)
            if j not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_pos)):
            rows = [[0] * ambient for _ in range(dim)]
            for i in range(dim):
                rows[i][pivots[i]] = 1
            for (i, j), v in zip(free_pos, values):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def in_span(vectors: list[tuple], target: tuple, p: int) -> bool:
    if not vectors:
        return all(x % p == 0 for x in target)
    m = tuple(vectors)
    return mat_rank(m, p) == mat_rank(m + (target,), p)
