"""Exact ex*(P, D_{d+1}): the largest induced subposet of dimension at most d.

The solver exploits two facts about the hereditary property "dim <= d":

* If ``P`` is a lexicographic sum of posets ``M_q`` over a quotient ``Q`` (the
  ``M_q`` are modules of ``P``), an induced subposet is again such a sum and its
  dimension is the maximum of the quotient's and the blocks' dimensions. Hence
  ``ex*(P) = max over dim<=d subsets R of Q of sum_{q in R} ex*(M_q)``. The
  solver recurses through the modular decomposition and solves a weighted
  problem on each quotient.
* On a quotient without proper modules it runs a weighted Russian-doll search:
  elements are ordered by increasing incomparability degree and the optimum of
  every suffix is computed from the back, each suffix optimum bounding the
  searches for the longer ones.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .dimension import (
    BudgetExceeded,
    Realizer,
    dim_at_most_mask,
    realizer_mask,
    verify_realizer,
)
from .invariants import max_antichain, min_chain_cover
from .poset import Poset, induced, lex_power, bits

DEFAULT_BUDGET = 10**7


class _Exhausted(Exception):
    pass


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class ExtremalResult:
    value: int
    witness: tuple[int, ...]
    certificate: Realizer  # realizer of induced(P, witness)
    exact: bool
    d: int
    stats: SearchStats = field(compare=False)


@dataclass(frozen=True)
class Theorem1Report:
    base: ExtremalResult
    lhs: ExtremalResult
    rhs: int
    holds: bool


class _Solver:
    def __init__(self, p: Poset, d: int, budget: int, decompose: bool = True):
        self.p = p
        self.d = d
        self.up = p.up
        self.down = p.down
        self.budget = budget
        self.calls = 0
        self.decompose = decompose
        self.memo: dict[int, bool] = {}

    # -- oracle ---------------------------------------------------------------

    def ok(self, mask: int) -> bool:
        self.calls += 1
        if self.calls > self.budget:
            raise _Exhausted
        hit = self.memo.get(mask)
        if hit is None:
            try:
                hit = dim_at_most_mask(mask, self.up, self.down, self.d)
            except BudgetExceeded:
                raise _Exhausted from None
            self.memo[mask] = hit
        return hit

    def extensions(self, mask: int) -> list[list[int]]:
        exts = realizer_mask(mask, self.up, self.down, self.d)
        if exts is None:
            raise AssertionError("internal error: witness lost its realizer")
        return exts

    # -- modular decomposition ------------------------------------------------

    def _components(self, elems: list[int], mask: int, comparable: bool) -> list[int]:
        up, down = self.up, self.down
        left = mask
        parts = []
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for x in bits(frontier):
                    rel = up[x] | down[x]
                    nxt |= (rel if comparable else ~rel) & mask
                frontier = nxt & ~comp
                comp |= frontier
            parts.append(comp)
            left &= ~comp
        return parts

    def _is_module(self, m: int, mask: int) -> bool:
        up, down = self.up, self.down
        for z in bits(mask & ~m):
            above, below = up[z] & m, down[z] & m
            if not ((above == m and not below) or (below == m and not above) or not (above | below)):
                return False
        return True

    def _module_closure(self, m: int, mask: int) -> int:
        up, down = self.up, self.down
        while m != mask:
            split = 0
            for z in bits(mask & ~m):
                above, below = up[z] & m, down[z] & m
                if not ((above == m and not below) or (below == m and not above) or not (above | below)):
                    split |= 1 << z
            if not split:
                break
            m |= split
        return m

    def partition(self, elems: list[int], mask: int) -> Optional[list[int]]:
        """Maximal strong modules of ``mask``, or None if all are singletons."""
        for comparable in (True, False):
            parts = self._components(elems, mask, comparable)
            if len(parts) > 1:
                return parts
        parent = {x: x for x in elems}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, x in enumerate(elems):
            for y in elems[i + 1:]:
                if find(x) == find(y):
                    continue
                m = self._module_closure((1 << x) | (1 << y), mask)
                if m != mask:
                    root = find(x)
                    for z in bits(m):
                        parent[find(z)] = root
        groups: dict[int, int] = {}
        for x in elems:
            groups[find(x)] = groups.get(find(x), 0) | (1 << x)
        parts = sorted(groups.values(), key=lambda m: m & -m)
        if len(parts) == len(elems):
            return None
        if not all(self._is_module(m, mask) for m in parts):
            return None
        return parts

    # -- search -----------------------------------------------------------------

    def solve(self, mask: int):
        """Return ``(value, witness_mask, exact, extensions)`` for the subposet on ``mask``."""
        elems = bits(mask)
        if len(elems) <= 1:
            return len(elems), mask, True, [list(elems) for _ in range(self.d)]
        parts = self.partition(elems, mask) if self.decompose else None
        if parts is None:
            weights = {x: 1 for x in elems}
            value, chosen, exact = self.russian_doll(elems, weights)
            return value, chosen, exact, self.extensions(chosen)
        subs = {}
        weights = {}
        for part in parts:
            rep = part & -part
            rep_id = rep.bit_length() - 1
            subs[rep_id] = self.solve(part)
            weights[rep_id] = subs[rep_id][0]
        reps = sorted(weights)
        value, chosen, exact = self.russian_doll(reps, weights)
        quotient_exts = self.extensions(chosen)
        witness = 0
        exts: list[list[int]] = [[] for _ in range(self.d)]
        for i, ext in enumerate(quotient_exts):
            for rep_id in ext:
                exts[i].extend(subs[rep_id][3][i])
        for rep_id in bits(chosen):
            witness |= subs[rep_id][1]
            exact = exact and subs[rep_id][2]
        return value, witness, exact and all(s[2] for s in subs.values()), exts

    def russian_doll(self, elems: list[int], weight: dict[int, int]):
        """Maximum-weight subset of ``elems`` with dimension <= d."""
        up, down = self.up, self.down
        full = 0
        for x in elems:
            full |= 1 << x
        incdeg = {x: bin(full & ~(up[x] | down[x] | (1 << x))).count("1") for x in elems}
        order = sorted(elems, key=lambda x: (incdeg[x], x))
        m = len(order)
        bit = [1 << x for x in order]
        w = [weight[x] for x in order]
        suffix_best = [0] * (m + 1)
        suffix_mask = [0] * (m + 1)
        state = {"best": 0, "mask": 0, "cap": 0}

        def expand(current: int, cur_w: int, cands: list[int]) -> bool:
            remaining = sum(w[j] for j in cands)
            for t, j in enumerate(cands):
                if cur_w + remaining <= state["best"] or cur_w + suffix_best[j] <= state["best"]:
                    return False
                remaining -= w[j]
                grown = current | bit[j]
                grown_w = cur_w + w[j]
                if grown_w > state["best"]:
                    state["best"], state["mask"] = grown_w, grown
                    if grown_w >= state["cap"]:
                        return True
                nxt = [k for k in cands[t + 1:] if self.ok(grown | bit[k])]
                if nxt and expand(grown, grown_w, nxt):
                    return True
            return False

        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * m + 1000))
        try:
            for i in range(m - 1, -1, -1):
                state["best"], state["mask"] = suffix_best[i + 1], suffix_mask[i + 1]
                state["cap"] = suffix_best[i + 1] + w[i]
                if w[i] > state["best"]:
                    state["best"], state["mask"] = w[i], bit[i]
                if state["best"] < state["cap"]:
                    cands = [k for k in range(i + 1, m) if self.ok(bit[i] | bit[k])]
                    expand(bit[i], w[i], cands)
                suffix_best[i], suffix_mask[i] = state["best"], state["mask"]
        except _Exhausted:
            return state["best"], state["mask"], False
        finally:
            sys.setrecursionlimit(limit)
        return suffix_best[0], suffix_mask[0], True


def _result(p: Poset, d: int, value: int, witness_mask: int, exts, exact: bool, stats: SearchStats) -> ExtremalResult:
    witness = tuple(bits(witness_mask))
    index = {x: i for i, x in enumerate(witness)}
    cert = Realizer(tuple(tuple(index[x] for x in e) for e in exts))
    if not verify_realizer(induced(p, witness), cert):
        raise AssertionError("internal error: extremal certificate failed verification")
    return ExtremalResult(value, witness, cert, exact, d, stats)


def greedy_seed(p: Poset, d: int) -> tuple[int, ...]:
    """Larger of a maximum antichain and the union of the ``d`` largest cover
    chains, then greedily extended in index order while dimension stays <= d."""
    if d < 2:
        raise ValueError("greedy_seed requires d >= 2")
    anti = max_antichain(p).members
    chains = sorted(min_chain_cover(p).chains, key=lambda c: (-len(c), min(c)))[:d]
    union = tuple(sorted(x for c in chains for x in c))
    seed = anti if len(anti) >= len(union) else union
    mask = 0
    for x in seed:
        mask |= 1 << x
    if not dim_at_most_mask(mask, p.up, p.down, d):
        raise AssertionError("internal error: seed exceeds dimension d")
    for x in range(p.n):
        if not (mask >> x) & 1 and dim_at_most_mask(mask | (1 << x), p.up, p.down, d):
            mask |= 1 << x
    return tuple(bits(mask))


def ex_star_max_dim(p: Poset, d: int, budget: int = DEFAULT_BUDGET, decompose: bool = True) -> ExtremalResult:
    """Largest induced subposet of ``p`` with dimension at most ``d``.

    ``budget`` caps the number of dimension-oracle queries. When it runs out the
    result carries ``exact=False`` and the best subset found, still certified.
    ``decompose=False`` skips the modular decomposition (used for cross-checks).
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    start = time.perf_counter()
    solver = _Solver(p, d, budget, decompose)
    value, witness, exact, exts = solver.solve(p.full_mask)
    if not exact and d >= 2 and p.n:
        seed = greedy_seed(p, d)
        if len(seed) > value:
            value = len(seed)
            witness = sum(1 << x for x in seed)
            exts = solver.extensions(witness)
    stats = SearchStats(nodes=solver.calls, elapsed=time.perf_counter() - start)
    return _result(p, d, value, witness, exts, exact, stats)


def verify_theorem1_instance(p: Poset, d: int, k: int, budget: int = DEFAULT_BUDGET) -> Theorem1Report:
    """Check ``ex*(P^k) <= ex*(P)^k`` on one instance."""
    base = ex_star_max_dim(p, d, budget)
    if not base.exact:
        raise RuntimeError("budget too small to solve the base poset exactly")
    rhs = base.value ** k
    lhs = ex_star_max_dim(lex_power(p, k), d, budget)
    return Theorem1Report(base, lhs, rhs, lhs.value <= rhs)
