"""Permutations of [n] and their permutohedron combinatorics.

A permutation is a total order on the positions [n] = {1, ..., n} of a data
vector with distinct coordinates.  The canonical storage is the descent
vector δ = (δ_1 | ... | δ_n): δ_k is the position holding the k-th largest
value.  Rank vectors and order-pair sets are derived views.

>>> p = permutation_from_data([11, 7, 13])
>>> str(p)
'3|1|2'
>>> rank_vector(p)
(2, 1, 3)
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _itertools_permutations

from .ci import CIStatement
from .bitsets import mask_of
from .errors import TiesError


@dataclass(frozen=True)
class Permutation:
    descent: tuple[int, ...]

    def __post_init__(self):
        n = len(self.descent)
        if n < 1 or sorted(self.descent) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [n]: {self.descent!r}")

    @property
    def n(self) -> int:
        return len(self.descent)

    @classmethod
    def from_descent(cls, entries) -> "Permutation":
        return cls(tuple(int(a) for a in entries))

    @classmethod
    def from_rank(cls, ranks) -> "Permutation":
        """Inverse of :func:`rank_vector`.

        >>> Permutation.from_rank((2, 1, 3)).descent
        (3, 1, 2)
        """
        ranks = tuple(int(r) for r in ranks)
        n = len(ranks)
        if sorted(ranks) != list(range(1, n + 1)):
            raise ValueError(f"not a rank vector: {ranks!r}")
        descent = [0] * n
        for pos, r in enumerate(ranks, start=1):
            descent[n - r] = pos
        return cls(tuple(descent))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Parse the bar-separated form, e.g. ``"3|1|2"``."""
        return cls(tuple(int(part) for part in text.split("|")))

    def __str__(self) -> str:
        return "|".join(str(a) for a in self.descent)


def parse_data_vector(text: str) -> tuple[Fraction, ...]:
    """Parse a data vector from comma- or whitespace-separated text.

    Values are read exactly as rationals ("11", "2.5", "1/3" all work), so
    tie detection never depends on binary floating point.
    """
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise ValueError("empty data vector")
    return tuple(Fraction(p) for p in parts)


def permutation_from_data(values, *, break_ties: bool = False) -> Permutation:
    """The permutation of a data vector: δ_k is the position of the k-th
    largest coordinate.

    Equal coordinates raise :class:`TiesError` unless ``break_ties`` is set,
    in which case the earlier position is treated as the larger value (a
    deterministic convention, not part of the underlying theory).

    >>> str(permutation_from_data([11, 7, 13]))
    '3|1|2'
    """
    u = tuple(values)
    if len(set(u)) != len(u) and not break_ties:
        raise TiesError(f"data vector has tied coordinates: {u!r}")
    order = sorted(range(1, len(u) + 1), key=lambda pos: (u[pos - 1], -pos))
    return Permutation(tuple(reversed(order)))


def rank_vector(p: Permutation) -> tuple[int, ...]:
    """ρ with ρ_i < ρ_j iff the data at position i is below position j.

    >>> rank_vector(Permutation((3, 1, 2)))
    (2, 1, 3)
    """
    n = p.n
    ranks = [0] * n
    for k, pos in enumerate(p.descent, start=1):
        ranks[pos - 1] = n + 1 - k
    return tuple(ranks)


def order_pairs(p: Permutation) -> frozenset[tuple[int, int]]:
    """The n(n-1)/2 ordered pairs (i, j) with u_i < u_j."""
    d = p.descent
    return frozenset((d[b], d[a]) for a in range(p.n) for b in range(a + 1, p.n))


def swapped(p: Permutation, k: int) -> Permutation:
    """The neighbor across the k-th wall: δ_k and δ_{k+1} exchanged."""
    if not 1 <= k <= p.n - 1:
        raise ValueError(f"swap position {k} out of range for n={p.n}")
    d = list(p.descent)
    d[k - 1], d[k] = d[k], d[k - 1]
    return Permutation(tuple(d))


def neighbors(p: Permutation) -> list[Permutation]:
    """All n-1 permutations differing from p by an adjacent transposition."""
    return [swapped(p, k) for k in range(1, p.n)]


def edge_label(p: Permutation, k: int) -> CIStatement:
    """CI label of the wall between δ and its k-th neighbor:
    δ_k ⊥ δ_{k+1} | {δ_1, ..., δ_{k-1}}.
    """
    if not 1 <= k <= p.n - 1:
        raise ValueError(f"edge position {k} out of range for n={p.n}")
    d = p.descent
    return CIStatement.of(d[k - 1], d[k], mask_of(d[: k - 1]))


def all_permutations(n: int):
    """All permutations of [n] as descent vectors, in lexicographic order."""
    for d in _itertools_permutations(range(1, n + 1)):
        yield Permutation(d)
