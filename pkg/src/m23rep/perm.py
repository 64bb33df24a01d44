"""Permutations of 1..N: cycle notation, composition, orbits, exact group order.

Points are 1-indexed throughout.  The canonical cycle form sorts cycles by
their smallest moved point, rotates each to start at that point, omits
fixed points, and prints the identity as "()".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of 1..N stored as the tuple of images of 1, 2, ..., N."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"images are not a bijection of 1..{n}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (p * q)(i) = p(q(i))."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def inverse(self) -> Permutation:
        out = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            out[j - 1] = i
        return Permutation(tuple(out))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    @property
    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles of length >= 2, in canonical order."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            p = self(start)
            while p != start:
                cyc.append(p)
                seen[p - 1] = True
                p = self(p)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycs)


def identity(degree: int) -> Permutation:
    return Permutation(tuple(range(1, degree + 1)))


def full_cycle(degree: int) -> Permutation:
    """The cycle (1,2,...,degree) sending each point to its successor."""
    return Permutation(tuple(range(2, degree + 1)) + (1,))


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint parenthesized cycles; unmentioned points stay fixed.

    Errors (stray characters, out-of-range or repeated points, unclosed
    cycles) are reported with their character position.
    """
    images = list(range(degree + 1))  # slot 0 unused
    used: set[int] = set()
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    skip_ws()
    while pos < n:
        if text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos}")
        pos += 1
        cycle: list[int] = []
        skip_ws()
        while pos < n and text[pos] != ")":
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos == start:
                raise ValueError(f"expected a point number at position {start}")
            point = int(text[start:pos])
            if not 1 <= point <= degree:
                raise ValueError(f"point {point} out of range 1..{degree} at position {start}")
            if point in used:
                raise ValueError(f"point {point} repeated at position {start}")
            used.add(point)
            cycle.append(point)
            skip_ws()
            if pos < n and text[pos] == ",":
                pos += 1
                skip_ws()
            elif pos < n and text[pos] != ")":
                raise ValueError(f"expected ',' or ')' at position {pos}")
        if pos >= n:
            raise ValueError(f"unclosed cycle at position {n}")
        pos += 1
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
        skip_ws()
    return Permutation(tuple(images[1:]))


def orbit(points: Iterable[int], generators: Sequence[Permutation]) -> frozenset[int]:
    """Closure of a point set under all generators."""
    out = set(points)
    frontier = list(out)
    while frontier:
        p = frontier.pop()
        for g in generators:
            q = g(p)
            if q not in out:
                out.add(q)
                frontier.append(q)
    return frozenset(out)


class StrongGeneratingData:
    """A base, stabilizer-chain transversals, and the resulting group order."""

    def __init__(
        self,
        base: tuple[int, ...],
        transversals: tuple[dict[int, Permutation], ...],
        order: int,
    ):
        self.base = base
        self.transversals = transversals
        self.order = order
        check = 1
        for t in transversals:
            check *= len(t)
        if check != order:
            raise ValueError(f"transversal sizes give order {check}, stored {order}")


class _Chain:
    """Deterministic stabilizer-chain construction.

    Level l stabilizes base[:l].  Generators first attached at level m fix
    base[:m], so the generating set effective at level l is everything
    attached at levels >= l.  _complete(l) establishes that level l's orbit
    is closed and every Schreier generator there sifts to the identity
    through the deeper levels, recursively keeping those levels complete.
    """

    def __init__(self, degree: int, generators: Sequence[tuple[int, ...]]):
        self.degree = degree
        self.ident = tuple(range(1, degree + 1))
        self.base: list[int] = []
        self.attached: list[list[tuple[int, ...]]] = []
        self.trans: list[dict[int, tuple[int, ...]]] = []
        gens = [g for g in generators if g != self.ident]
        if gens:
            self._new_level(gens[0])
            self.attached[0] = gens
            self._complete(0)

    @staticmethod
    def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(p[x - 1] for x in q)

    @staticmethod
    def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * len(p)
        for i, j in enumerate(p, start=1):
            out[j - 1] = i
        return tuple(out)

    def _new_level(self, mover: tuple[int, ...]) -> None:
        point = next(i for i, img in enumerate(mover, start=1) if img != i)
        self.base.append(point)
        self.attached.append([])
        self.trans.append({point: self.ident})

    def _effective(self, level: int) -> list[tuple[int, ...]]:
        return [g for lvl in range(level, len(self.base)) for g in self.attached[lvl]]

    def _orbit(self, level: int) -> None:
        gens = self._effective(level)
        point = self.base[level]
        trans = {point: self.ident}
        queue = [point]
        while queue:
            a = queue.pop()
            rep = trans[a]
            for g in gens:
                b = g[a - 1]
                if b not in trans:
                    trans[b] = self._mul(g, rep)
                    queue.append(b)
        self.trans[level] = trans

    def _sift(self, level: int, p: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
        """Strip p through levels >= level; returns (residue, level reached)."""
        for lvl in range(level, len(self.base)):
            b = p[self.base[lvl] - 1]
            rep = self.trans[lvl].get(b)
            if rep is None:
                return p, lvl
            p = self._mul(self._inv(rep), p)
        return p, len(self.base)

    def _complete(self, level: int) -> None:
        self._orbit(level)
        while True:
            added = False
            gens = self._effective(level)
            for a, rep in list(self.trans[level].items()):
                for g in gens:
                    target = self.trans[level][g[a - 1]]
                    schreier = self._mul(self._inv(target), self._mul(g, rep))
                    if schreier == self.ident:
                        continue
                    residue, reached = self._sift(level + 1, schreier)
                    if residue == self.ident:
                        continue
                    # the residue fixes base[:level+1]; attach it at the
                    # first deeper level whose base point it moves
                    if reached == len(self.base):
                        attach_at = len(self.base)
                        for lvl in range(level + 1, len(self.base)):
                            if residue[self.base[lvl] - 1] != self.base[lvl]:
                                attach_at = lvl
                                break
                        if attach_at == len(self.base):
                            self._new_level(residue)
                    else:
                        attach_at = reached
                    self.attached[attach_at].append(residue)
                    for lvl in range(attach_at, level, -1):
                        self._complete(lvl)
                    added = True
                if added:
                    break
            if not added:
                return
            self._orbit(level)


def schreier_sims(generators: Sequence[Permutation]) -> StrongGeneratingData:
    """Deterministic stabilizer chain for the group the generators produce."""
    if not generators:
        raise ValueError("need at least one generator")
    degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators have mixed degrees")
    chain = _Chain(degree, [g.images for g in generators])
    order = 1
    transversals = []
    for t in chain.trans:
        order *= len(t)
        transversals.append({b: Permutation(p) for b, p in sorted(t.items())})
    return StrongGeneratingData(tuple(chain.base), tuple(transversals), order)


def group_order(generators: Sequence[Permutation]) -> int:
    """Exact order of the generated permutation group."""
    return schreier_sims(generators).order
