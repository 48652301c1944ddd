"""Height, width, Dilworth chain covers and the sqrt(d n) extraction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .poset import Poset, bits


@dataclass(frozen=True)
class AntichainCertificate:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ChainFamily:
    """Disjoint chains, each listed bottom to top."""

    chains: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.chains)


@dataclass(frozen=True)
class ExtractionResult:
    subset: tuple[int, ...]
    kind: str  # "antichain" or "chain-union"
    guarantee: float
    guarantee_int: int
    chains: Optional[ChainFamily] = None


def ceil_sqrt(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def height(p: Poset) -> tuple[int, tuple[int, ...]]:
    """Size of a longest chain together with one such chain, bottom to top."""
    if p.n == 0:
        return 0, ()
    down = p.down
    order = sorted(range(p.n), key=lambda v: bin(down[v]).count("1"))
    length = [1] * p.n
    prev = [-1] * p.n
    for v in order:
        for z in bits(down[v]):
            if length[z] + 1 > length[v]:
                length[v] = length[z] + 1
                prev[v] = z
    top = max(range(p.n), key=lambda v: (length[v], -v))
    witness = []
    while top != -1:
        witness.append(top)
        top = prev[top]
    return len(witness), tuple(reversed(witness))


def _matching(p: Poset) -> np.ndarray:
    graph = csr_matrix(p.lt.astype(np.int8))
    return maximum_bipartite_matching(graph, perm_type="column")


def min_chain_cover(p: Poset) -> ChainFamily:
    """Partition into ``width(p)`` chains via a maximum matching on ``x < y`` pairs."""
    if p.n == 0:
        return ChainFamily(())
    nxt = _matching(p)
    has_pred = np.zeros(p.n, dtype=bool)
    has_pred[nxt[nxt >= 0]] = True
    chains = []
    for start in range(p.n):
        if has_pred[start]:
            continue
        c = [start]
        while nxt[c[-1]] >= 0:
            c.append(int(nxt[c[-1]]))
        chains.append(tuple(c))
    return ChainFamily(tuple(chains))


def max_antichain(p: Poset) -> AntichainCertificate:
    """Maximum antichain from the vertex cover complement of the same matching."""
    if p.n == 0:
        return AntichainCertificate(())
    nxt = _matching(p)
    mate_of_col = np.full(p.n, -1)
    for x, y in enumerate(nxt):
        if y >= 0:
            mate_of_col[y] = x
    up = p.up
    # alternating reachability from unmatched left vertices
    left_seen = 0
    right_seen = 0
    stack = [x for x in range(p.n) if nxt[x] < 0]
    for x in stack:
        left_seen |= 1 << x
    while stack:
        x = stack.pop()
        for y in bits(up[x] & ~right_seen):
            right_seen |= 1 << y
            z = int(mate_of_col[y])
            if z >= 0 and not (left_seen >> z) & 1:
                left_seen |= 1 << z
                stack.append(z)
    members = tuple(bits(left_seen & ~right_seen))
    return AntichainCertificate(members)


def width(p: Poset) -> int:
    return max_antichain(p).size


def goodwillie_subposet(p: Poset, d: int) -> ExtractionResult:
    """Subset of size at least ceil(sqrt(d n)) whose induced dimension is at most ``d``.

    Returns a maximum antichain when ``width**2 >= d n``, otherwise the union of
    the ``d`` largest chains of a minimum chain cover.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if p.n < 1:
        raise ValueError("poset must be non-empty")
    dn = d * p.n
    guarantee = math.sqrt(dn)
    anti = max_antichain(p)
    if anti.size * anti.size >= dn:
        return ExtractionResult(anti.members, "antichain", guarantee, ceil_sqrt(dn))
    cover = min_chain_cover(p)
    ranked = sorted(cover.chains, key=lambda c: (-len(c), min(c)))[:d]
    subset = tuple(sorted(x for c in ranked for x in c))
    return ExtractionResult(subset, "chain-union", guarantee, ceil_sqrt(dn), ChainFamily(tuple(ranked)))
