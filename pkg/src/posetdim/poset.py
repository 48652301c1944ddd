"""Finite posets on the elements ``0..n-1`` with a dense strict-order matrix.

Labeling conventions used by the constructors:

* ``boolean_lattice(k)``: element ``i`` is the subset whose bit-mask is ``i``.
* ``standard_example(m)``: ``a_1..a_m`` are ``0..m-1``, ``b_1..b_m`` are ``m..2m-1``.
* ``lex_product(P, Q)``: the pair ``(p, q)`` is element ``p * |Q| + q``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

# Largest poset any constructor will build. Module-level so callers can raise it.
SIZE_CAP = 2**20


class PosetError(ValueError):
    """Invalid input to a poset constructor."""


class CycleError(PosetError):
    pass


def _check_size(n: int) -> None:
    if n > SIZE_CAP:
        raise PosetError(f"poset of size {n} exceeds the size cap {SIZE_CAP}")


def _masks_to_matrix(n: int, up: Sequence[int]) -> np.ndarray:
    lt = np.zeros((n, n), dtype=bool)
    for x, mask in enumerate(up):
        while mask:
            low = mask & -mask
            lt[x, low.bit_length() - 1] = True
            mask ^= low
    return lt


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Poset:
    """Immutable finite poset.

    ``lt[x, y]`` is True iff ``x < y``. The constructor validates the three
    order axioms unless ``check=False`` is passed by a trusted builder.
    """

    __slots__ = ("n", "lt", "__dict__")

    def __init__(self, lt, check: bool = True):
        lt = np.array(lt, dtype=bool, copy=True)
        if lt.ndim != 2 or lt.shape[0] != lt.shape[1]:
            raise PosetError("relation must be a square matrix")
        n = lt.shape[0]
        _check_size(n)
        if check:
            if lt.diagonal().any():
                raise PosetError("relation is not irreflexive")
            if (lt & lt.T).any():
                raise PosetError("relation is not antisymmetric")
            if n and ((lt @ lt) & ~lt).any():
                raise PosetError("relation is not transitive")
        lt.setflags(write=False)
        self.n = n
        self.lt = lt

    @classmethod
    def _from_up_masks(cls, up: Sequence[int]) -> "Poset":
        return cls(_masks_to_matrix(len(up), up), check=False)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.lt, other.lt))

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self.lt).tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, relations={self.relation_count})"

    @cached_property
    def up(self) -> list[int]:
        """``up[x]``: bit-mask of the elements strictly above ``x``."""
        return [_row_mask(row) for row in self.lt]

    @cached_property
    def down(self) -> list[int]:
        """``down[x]``: bit-mask of the elements strictly below ``x``."""
        return [_row_mask(col) for col in self.lt.T]

    @cached_property
    def relation_count(self) -> int:
        return int(self.lt.sum())

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def less(self, x: int, y: int) -> bool:
        return bool(self.lt[x, y])

    def comparable(self, x: int, y: int) -> bool:
        return bool(self.lt[x, y] or self.lt[y, x])

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs ``(x, y)`` (``y`` covers ``x``), ascending lexicographic."""
        up, down = self.up, self.down
        return [(x, y) for x in range(self.n) for y in bits(up[x]) if not (up[x] & down[y])]

    def is_chain(self) -> bool:
        return self.relation_count == self.n * (self.n - 1) // 2

    def dual(self) -> "Poset":
        return Poset(self.lt.T, check=False)


def _row_mask(row: np.ndarray) -> int:
    if not row.size:
        return 0
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def from_cover_relations(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Poset generated by ``covers`` (pairs ``x < y``) under transitive closure."""
    _check_size(n)
    succ = [0] * n
    indeg = [0] * n
    for x, y in covers:
        if not (0 <= x < n and 0 <= y < n):
            raise PosetError(f"cover ({x}, {y}) out of range for {n} elements")
        if x == y:
            raise CycleError(f"reflexive cover ({x}, {x})")
        if not (succ[x] >> y) & 1:
            succ[x] |= 1 << y
            indeg[y] += 1
    # Kahn order, then closure in reverse topological order
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for w in bits(succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != n:
        raise CycleError("cover relations contain a cycle")
    up = [0] * n
    for v in reversed(order):
        acc = succ[v]
        for w in bits(succ[v]):
            acc |= up[w]
        up[v] = acc
    return Poset._from_up_masks(up)


def chain(k: int) -> Poset:
    _check_size(k)
    return Poset(np.triu(np.ones((k, k), dtype=bool), 1), check=False)


def antichain(k: int) -> Poset:
    _check_size(k)
    return Poset(np.zeros((k, k), dtype=bool), check=False)


def boolean_lattice(k: int) -> Poset:
    """Subsets of a ``k``-set ordered by inclusion, labeled by bit-mask."""
    if k < 0:
        raise PosetError("k must be non-negative")
    if k > 62 or (1 << k) > SIZE_CAP:
        raise PosetError(f"boolean lattice B_{k} exceeds the size cap {SIZE_CAP}")
    idx = np.arange(1 << k)
    subset = (idx[:, None] & idx[None, :]) == idx[:, None]
    return Poset(subset & (idx[:, None] != idx[None, :]), check=False)


def standard_example(m: int) -> Poset:
    """The standard example S_m: ``a_i < b_j`` iff ``i != j``."""
    if m < 2:
        raise PosetError("standard example requires m >= 2")
    _check_size(2 * m)
    lt = np.zeros((2 * m, 2 * m), dtype=bool)
    lt[:m, m:] = ~np.eye(m, dtype=bool)
    return Poset(lt, check=False)


def disjoint_union(*posets: Poset) -> Poset:
    n = sum(p.n for p in posets)
    _check_size(n)
    lt = np.zeros((n, n), dtype=bool)
    offset = 0
    for p in posets:
        lt[offset:offset + p.n, offset:offset + p.n] = p.lt
        offset += p.n
    return Poset(lt, check=False)


def lex_product(p: Poset, q: Poset) -> Poset:
    """Lexicographic product: compare first coordinates, break ties on the second."""
    _check_size(p.n * q.n)
    block = np.kron(p.lt, np.ones((q.n, q.n), dtype=bool))
    inner = np.kron(np.eye(p.n, dtype=bool), q.lt)
    return Poset(block | inner, check=False)


def lex_power(p: Poset, k: int) -> Poset:
    """``P^k`` on tuples; tuple ``(t_1..t_k)`` is element ``sum t_i |P|^(k-i)``."""
    if k < 1:
        raise PosetError("lex_power requires k >= 1")
    _check_size(p.n ** k)
    out = p
    for _ in range(k - 1):
        out = lex_product(out, p)
    return out


def induced(p: Poset, subset: Iterable[int]) -> Poset:
    """Subposet on ``sorted(subset)``; new element ``i`` is the ``i``-th smallest member."""
    members = sorted(subset)
    if len(set(members)) != len(members):
        raise PosetError("subset contains duplicates")
    if members and (members[0] < 0 or members[-1] >= p.n):
        raise PosetError("subset member out of range")
    idx = np.asarray(members, dtype=np.intp)
    return Poset(p.lt[np.ix_(idx, idx)], check=False)


def random_poset(n: int, density: float, seed: int) -> Poset:
    """Seeded random poset: relabel ``0..n-1`` by a random permutation, keep each
    forward pair with probability ``density``, then close transitively."""
    if not 0.0 <= density <= 1.0:
        raise PosetError("density must lie in [0, 1]")
    _check_size(n)
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    keep = np.triu(rng.random((n, n)) < density, 1)
    rel = np.zeros((n, n), dtype=bool)
    rel[np.ix_(perm, perm)] = keep
    xs, ys = np.nonzero(rel)
    return from_cover_relations(n, zip(xs.tolist(), ys.tolist()))
