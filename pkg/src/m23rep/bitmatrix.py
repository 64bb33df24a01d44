"""Square GF(2) matrices as row bitsets, plus group-level machinery.

A matrix is a tuple of row integers where bit j of row i is entry (i, j).
The text form is one line per row with the entry (i, j) character at
column j, matching the visual layout of a printed matrix.

Group machinery: exact element order, breadth-first closure of a matrix
group with a 121-bit deduplication key, invariance of a vector set, and
subspace spinning for irreducibility certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class BitMatrix:
    """A dim x dim matrix over GF(2); rows[i] bit j is entry (i, j)."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        width = len(self.rows)
        if any(not 0 <= r < (1 << width) for r in self.rows):
            raise ValueError(f"row bits out of range for a {width}x{width} matrix")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def column(self, j: int) -> int:
        """Column j as a bitset (bit i = entry (i, j))."""
        out = 0
        for i, row in enumerate(self.rows):
            out |= (row >> j & 1) << i
        return out

    @classmethod
    def from_columns(cls, columns: Sequence[int]) -> BitMatrix:
        dim = len(columns)
        rows = [0] * dim
        for j, col in enumerate(columns):
            for i in range(dim):
                rows[i] |= (col >> i & 1) << j
        return cls(tuple(rows))

    @classmethod
    def from_text(cls, text: str) -> BitMatrix:
        lines = [ln.strip() for ln in text.strip().splitlines()]
        dim = len(lines)
        rows = []
        for ln in lines:
            if len(ln) != dim or set(ln) - {"0", "1"}:
                raise ValueError(f"bad matrix line {ln!r}: expected {dim} binary characters")
            rows.append(int(ln[::-1], 2))
        return cls(tuple(rows))

    def to_text(self) -> str:
        return "\n".join(
            "".join(str(self.entry(i, j)) for j in range(self.dim)) for i in range(self.dim)
        )

    def __mul__(self, other: BitMatrix) -> BitMatrix:
        return mat_mul(self, other)


def identity(dim: int) -> BitMatrix:
    return BitMatrix(tuple(1 << i for i in range(dim)))


def mat_mul(m: BitMatrix, n: BitMatrix) -> BitMatrix:
    if m.dim != n.dim:
        raise ValueError(f"dimension mismatch: {m.dim} vs {n.dim}")
    nrows = n.rows
    out = []
    for r in m.rows:
        acc = 0
        while r:
            low = r & -r
            acc ^= nrows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return BitMatrix(tuple(out))


def mat_vec(m: BitMatrix, v: int) -> int:
    """Image of the coordinate bitset v (bit j = coordinate j)."""
    out = 0
    for i, row in enumerate(m.rows):
        out |= ((row & v).bit_count() & 1) << i
    return out


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix(tuple(m.column(j) for j in range(m.dim)))


def rank(vectors: Iterable[int]) -> int:
    """GF(2) rank of a collection of bitset vectors."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def mat_inverse(m: BitMatrix) -> BitMatrix:
    """Inverse by Gauss-Jordan elimination; raises on singular input."""
    dim = m.dim
    left = list(m.rows)
    right = [1 << i for i in range(dim)]
    for col in range(dim):
        pivot = next((r for r in range(col, dim) if left[r] >> col & 1), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        left[col], left[pivot] = left[pivot], left[col]
        right[col], right[pivot] = right[pivot], right[col]
        for r in range(dim):
            if r != col and left[r] >> col & 1:
                left[r] ^= left[col]
                right[r] ^= right[col]
    return BitMatrix(tuple(right))


def element_order(m: BitMatrix, cap: int = 10_000) -> int | None:
    """Least k >= 1 with m^k = identity, or None if the cap is exceeded."""
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    ident = identity(m.dim)
    if rank(m.rows) != m.dim:
        raise ValueError("matrix is singular: no finite multiplicative order")
    acc = m
    for k in range(1, cap + 1):
        if acc == ident:
            return k
        acc = mat_mul(acc, m)
    return None


@dataclass(frozen=True)
class ClosureResult:
    """Outcome of a breadth-first matrix-group enumeration."""

    element_count: int
    frontier_generations: int
    cap_hit: bool
    generation_sizes: tuple[int, ...]


_PACK_ROWS = 11  # the 121-bit key packs 11 rows of 11 bits into two words


def _pack_keys(rows: np.ndarray) -> np.ndarray:
    """Pack (k, 11) uint16 row arrays into 16-byte keys (121 bits used)."""
    r = rows.astype(np.uint64)
    lo = r[:, 0]
    for i in range(1, 5):
        lo = lo | r[:, i] << np.uint64(11 * i)
    lo = lo | (r[:, 5] & np.uint64(0x1FF)) << np.uint64(55)
    hi = r[:, 5] >> np.uint64(9)
    for i in range(6, 11):
        hi = hi | r[:, i] << np.uint64(2 + 11 * (i - 6))
    packed = np.empty((len(r), 2), dtype=np.uint64)
    packed[:, 0] = lo
    packed[:, 1] = hi
    return np.frombuffer(packed.tobytes(), dtype="S16")


def bfs_closure(
    generators: Sequence[BitMatrix],
    cap: int = 12_000_000,
    progress: Callable[[int, int], None] | None = None,
) -> ClosureResult:
    """Enumerate the group generated by right-multiplication, exactly.

    Starts from the identity and closes breadth-first, deduplicating with a
    canonical two-word key per matrix.  When the cap is exceeded the count
    so far is returned with cap_hit set instead of an exact order.
    """
    if not generators:
        raise ValueError("need at least one generator")
    dim = generators[0].dim
    if any(g.dim != dim for g in generators):
        raise ValueError("generators have mixed dimensions")
    if dim > _PACK_ROWS:
        raise ValueError(f"closure keys support dimension up to {_PACK_ROWS}, got {dim}")
    for g in generators:
        if rank(g.rows) != dim:
            raise ValueError("generators must be invertible")

    def padded(m: BitMatrix) -> list[int]:
        return list(m.rows) + [0] * (_PACK_ROWS - dim)

    tables = [
        np.array([_right_mul_row(v, g) for v in range(1 << dim)], dtype=np.uint16)
        for g in generators
    ]
    ident = np.array([padded(identity(dim))], dtype=np.uint16)
    seen: set[bytes] = set(_pack_keys(ident).tolist())
    frontier = ident
    total = 1
    generations = 0
    sizes = [1]
    cap_hit = False
    while len(frontier) and not cap_hit:
        candidates = np.concatenate([t[frontier] for t in tables])
        keys = _pack_keys(candidates)
        uniq, first_index = np.unique(keys, return_index=True)
        fresh = [i for i, key in enumerate(uniq.tolist()) if key not in seen]
        if not fresh:
            break
        seen.update(uniq[fresh].tolist())
        frontier = candidates[first_index[fresh]]
        total += len(fresh)
        generations += 1
        sizes.append(len(fresh))
        if progress is not None:
            progress(generations, total)
        if total > cap:
            cap_hit = True
    return ClosureResult(total, generations, cap_hit, tuple(sizes))


def _right_mul_row(v: int, m: BitMatrix) -> int:
    """The row bitset v * m (row vector times matrix)."""
    out = 0
    while v:
        low = v & -v
        out ^= m.rows[low.bit_length() - 1]
        v ^= low
    return out


def preserves_set(m: BitMatrix, vectors: Iterable[int]) -> bool:
    """True if m maps every vector of the set back into the set."""
    vecs = frozenset(vectors)
    return all(mat_vec(m, v) in vecs for v in vecs)


@lru_cache(maxsize=None)
def _vector_action_tables(generators: tuple[BitMatrix, ...]) -> tuple[tuple[int, ...], ...]:
    """For each generator, table[v] = m * v for every coordinate bitset v."""
    out = []
    for g in generators:
        cols = [g.column(j) for j in range(g.dim)]
        table = [0] * (1 << g.dim)
        for v in range(1, 1 << g.dim):
            low = v & -v
            table[v] = table[v ^ low] ^ cols[low.bit_length() - 1]
        out.append(tuple(table))
    return tuple(out)


def spin(v: int, generators: Sequence[BitMatrix]) -> int:
    """Dimension of the smallest generator-invariant subspace containing v."""
    if v == 0:
        raise ValueError("cannot spin the zero vector")
    gens = tuple(generators)
    tables = _vector_action_tables(gens)
    dim = gens[0].dim
    basis: list[int] = []

    def insert(w: int) -> int:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
        return w

    worklist = [insert(v)]
    while worklist and len(basis) < dim:
        u = worklist.pop()
        for table in tables:
            w = insert(table[u])
            if w:
                worklist.append(w)
    return len(basis)


def min_faithful_dimension(subgroup_order: int) -> int:
    """Least i with 2^i = 1 mod subgroup_order: the smallest GF(2)-dimension
    whose general linear group has room for an element of that order."""
    if subgroup_order < 2 or subgroup_order % 2 == 0:
        raise ValueError(f"need an odd order >= 3, got {subgroup_order}")
    acc = 2 % subgroup_order
    i = 1
    while acc != 1:
        acc = acc * 2 % subgroup_order
        i += 1
    return i
