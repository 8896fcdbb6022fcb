"""Partial orders on [n], linear extensions, and pre-convexity of rank partitions.

Posets are stored transitively closed: the relation holds (a, b) whenever
a < b in the order, with the Hasse diagram recomputed on demand.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import EnumerationGuardError, ValidationError
from .permutations import Permutation, all_permutations, order_pairs


@dataclass(frozen=True)
class Poset:
    n: int
    relation: frozenset[tuple[int, int]]  # (a, b) means a < b; transitively closed

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Poset":
        """Build a poset from generating pairs, applying transitive closure.

        Raises :class:`ValidationError` on a reflexive pair or a cycle.
        """
        return cls(n, transitive_closure(n, pairs))

    def above(self, a: int) -> frozenset[int]:
        return frozenset(b for (x, b) in self.relation if x == a)

    def below(self, b: int) -> frozenset[int]:
        return frozenset(a for (a, y) in self.relation if y == b)


def transitive_closure(n: int, pairs) -> frozenset[tuple[int, int]]:
    """Transitive closure of a set of strict-order pairs on [n]."""
    succ = {a: set() for a in range(1, n + 1)}
    for a, b in pairs:
        a, b = int(a), int(b)
        if a == b:
            raise ValidationError(f"reflexive pair ({a}, {b}) in strict order")
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValidationError(f"pair ({a}, {b}) outside [{n}]")
        succ[a].add(b)
    # reachability by DFS with cycle detection (gray/black coloring)
    reach: dict[int, set[int]] = {}
    on_stack: set[int] = set()

    def visit(a: int) -> set[int]:
        if a in reach:
            return reach[a]
        if a in on_stack:
            raise ValidationError(f"cycle through {a}: relation is not antisymmetric")
        on_stack.add(a)
        acc = set()
        for b in succ[a]:
            acc.add(b)
            acc |= visit(b)
        on_stack.discard(a)
        if a in acc:
            raise ValidationError(f"cycle through {a}: relation is not antisymmetric")
        reach[a] = acc
        return acc

    closed = set()
    for a in range(1, n + 1):
        for b in visit(a):
            closed.add((a, b))
    return frozenset(closed)


def intersect_orders(perms) -> Poset:
    """The poset carried by a class: intersection of its total orders."""
    perms = list(perms)
    if not perms:
        raise ValueError("need at least one permutation")
    n = perms[0].n
    if any(p.n != n for p in perms):
        raise ValueError("permutations live on different ground sets")
    common = frozenset.intersection(*(order_pairs(p) for p in perms))
    return Poset(n, common)  # intersection of total orders is already closed


def linear_extensions(P: Poset, *, max_count: int | None = None) -> list[Permutation]:
    """All total orders containing P, by backtracking.

    Without an explicit ``max_count`` bound the ground set is capped at
    n <= 12; with one, enumeration aborts once the bound is exceeded.
    """
    n = P.n
    if max_count is None and n > 12:
        raise EnumerationGuardError(f"linear extension enumeration needs a bound for n={n}")
    # above_mask[a]: elements that must appear before a in the descent vector
    above_mask = [0] * (n + 1)
    for a, b in P.relation:
        above_mask[a] |= 1 << (b - 1)

    out: list[Permutation] = []
    prefix: list[int] = []

    def place(remaining: int):
        if remaining == 0:
            out.append(Permutation(tuple(prefix)))
            if max_count is not None and len(out) > max_count:
                raise EnumerationGuardError(f"more than {max_count} linear extensions")
            return
        for a in range(1, n + 1):
            abit = 1 << (a - 1)
            if remaining & abit and not above_mask[a] & remaining & ~abit:
                prefix.append(a)
                place(remaining & ~abit)
                prefix.pop()

    place((1 << n) - 1)
    return out


@dataclass(frozen=True)
class RankPartition:
    """A partition of S_n into blocks of permutations."""

    n: int
    blocks: frozenset[frozenset[Permutation]]

    @classmethod
    def of(cls, n: int, blocks) -> "RankPartition":
        blocks = frozenset(frozenset(b) for b in blocks)
        total = 0
        seen: set[Permutation] = set()
        for block in blocks:
            if not block:
                raise ValidationError("empty block in rank partition")
            for p in block:
                if p.n != n:
                    raise ValidationError("block member on the wrong ground set")
            total += len(block)
            seen |= block
        if total != math.factorial(n) or len(seen) != total:
            raise ValidationError("blocks do not partition the symmetric group")
        return cls(n, blocks)

    def sorted_blocks(self) -> list[frozenset[Permutation]]:
        return sorted(self.blocks, key=lambda b: min(p.descent for p in b))

    def block_of(self, p: Permutation) -> frozenset[Permutation]:
        for block in self.blocks:
            if p in block:
                return block
        raise KeyError(p)


class ClassPoset(NamedTuple):
    poset: Poset
    exact: bool  # whether the block equals the extension set of its poset


def class_poset(block) -> ClassPoset:
    """Intersection poset of a block, flagged by whether the block is exactly
    the set of linear extensions of that poset."""
    block = frozenset(block)
    P = intersect_orders(block)
    exact = frozenset(linear_extensions(P)) == block
    return ClassPoset(P, exact)


def is_preconvex(part: RankPartition) -> bool:
    """Whether every block equals the linear extensions of its own poset.

    This is the closure property that makes the partition's classes convex
    cones of data vectors.
    """
    return all(class_poset(block).exact for block in part.blocks)


def iter_rank_partitions(n: int):
    """All partitions of S_n, via restricted-growth strings.

    The count is the Bell number of n!; usable only for n <= 3.
    """
    if n > 3:
        raise EnumerationGuardError(f"cannot enumerate all partitions of S_{n}")
    perms = list(all_permutations(n))
    m = len(perms)
    rgs = [0] * m

    def grow(k: int, top: int):
        if k == m:
            blocks: list[list[Permutation]] = [[] for _ in range(top)]
            for idx, label in enumerate(rgs):
                blocks[label].append(perms[idx])
            yield RankPartition.of(n, blocks)
            return
        for label in range(top + 1):
            rgs[k] = label
            yield from grow(k + 1, max(top, label + 1))

    yield from grow(0, 0)


def count_preconvex(n: int) -> int:
    """Number of partitions of S_n satisfying the pre-convexity axiom."""
    return sum(1 for part in iter_rank_partitions(n) if is_preconvex(part))


def hasse_edges(P: Poset) -> frozenset[tuple[int, int]]:
    """Cover relations of P: pairs (a, b) with nothing strictly between."""
    rel = P.relation
    return frozenset(
        (a, b)
        for (a, b) in rel
        if not any((a, c) in rel and (c, b) in rel for c in range(1, P.n + 1))
    )


def hasse_is_forest(P: Poset) -> bool:
    """Whether the Hasse diagram is acyclic as an undirected graph."""
    parent = list(range(P.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in hasse_edges(P):
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def boolean_poset(k: int) -> Poset:
    """The poset of all subsets of [k] ordered by inclusion, on n = 2^k
    ground elements (element m+1 stands for the mask m)."""
    n = 1 << k
    pairs = [
        (a + 1, b + 1)
        for a in range(n)
        for b in range(n)
        if a != b and a & ~b == 0
    ]
    return Poset(n, frozenset(pairs))


def poset_to_json(P: Poset) -> dict:
    return {"n": P.n, "relation": sorted([a, b] for (a, b) in P.relation)}


def poset_from_json(obj: dict) -> Poset:
    return Poset.from_pairs(int(obj["n"]), [(int(a), int(b)) for a, b in obj["relation"]])
