"""Elementary conditional-independence statements i ⊥ j | K.

A statement pairs two distinct elements i < j of [n] with a conditioning
set K disjoint from {i, j}.  The pair is unordered: j ⊥ i | K is the same
statement and is normalized to i < j.  Conditioning sets are stored as
bitmasks (see :mod:`ranktests.bitsets`), which caps n at the word sizes we
ever enumerate anyway.
"""

from typing import NamedTuple

from .bitsets import bit, elements_of, full_mask, iter_submasks, mask_of


class CIStatement(NamedTuple):
    i: int
    j: int
    cond: int  # bitmask of the conditioning set K

    @classmethod
    def of(cls, i: int, j: int, cond=0) -> "CIStatement":
        """Build a statement from elements and a conditioning set.

        ``cond`` may be a bitmask or an iterable of elements.
        """
        if not isinstance(cond, int):
            cond = mask_of(cond)
        if i == j:
            raise ValueError("statement needs two distinct elements")
        if i > j:
            i, j = j, i
        if cond & (bit(i) | bit(j)):
            raise ValueError("conditioning set must avoid {i, j}")
        return cls(i, j, cond)

    @property
    def conditioned_on(self) -> tuple[int, ...]:
        return elements_of(self.cond)

    def __str__(self) -> str:
        if self.cond == 0:
            return f"{self.i}⊥{self.j}"
        return f"{self.i}⊥{self.j}|{','.join(map(str, self.conditioned_on))}"


def all_statements(n: int) -> tuple[CIStatement, ...]:
    """All elementary CI statements on [n], in a fixed deterministic order.

    There are C(n, 2) * 2^(n-2) of them.
    """
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rest = full_mask(n) & ~(bit(i) | bit(j))
            for cond in sorted(iter_submasks(rest)):
                out.append(CIStatement(i, j, cond))
    return tuple(out)


def dual_statement(s: CIStatement, n: int) -> CIStatement:
    """The involution i ⊥ j | C  ->  i ⊥ j | [n] \\ (C ∪ {i, j})."""
    return CIStatement(s.i, s.j, full_mask(n) & ~(s.cond | bit(s.i) | bit(s.j)))


def statement_to_json(s: CIStatement) -> dict:
    return {"i": s.i, "j": s.j, "K": list(s.conditioned_on)}


def statement_from_json(obj: dict) -> CIStatement:
    return CIStatement.of(int(obj["i"]), int(obj["j"]), [int(a) for a in obj["K"]])
