"""Semigraphoids: statement sets closed under the contraction/intersection axiom.

A set M of elementary CI statements is a semigraphoid when

    i ⊥ j | K ∪ {ℓ} ∈ M  and  i ⊥ ℓ | K ∈ M
    implies  i ⊥ j | K ∈ M  and  i ⊥ ℓ | K ∪ {j} ∈ M.

Geometrically M is a set of permutohedron walls whose removal leaves a
coarsening fan; the classes of the induced rank test are the connected
components of the permutohedron edges labeled by M.
"""

import itertools
from dataclasses import dataclass

from .bitsets import bit, mask_of
from .ci import CIStatement, all_statements, dual_statement, statement_from_json, statement_to_json
from .errors import EnumerationGuardError, ValidationError
from .permutations import Permutation, all_permutations, edge_label, neighbors, swapped
from .posets import RankPartition


def _conclusions(s1: CIStatement, s2: CIStatement):
    """Conclusions of the axiom for every way the premise fires with s1 in
    the role i ⊥ j | K ∪ {ℓ} and s2 in the role i ⊥ ℓ | K."""
    pair1 = (s1.i, s1.j)
    pair2 = (s2.i, s2.j)
    for i in pair1:
        if i not in pair2:
            continue
        j = pair1[0] if pair1[1] == i else pair1[1]
        ell = pair2[0] if pair2[1] == i else pair2[1]
        if s1.cond == s2.cond | bit(ell):
            yield CIStatement.of(i, j, s2.cond)
            yield CIStatement.of(i, ell, s2.cond | bit(j))


def is_semigraphoid(n: int, statements) -> bool:
    """Whether a statement set is closed under the semigraphoid axiom."""
    stmts = frozenset(statements)
    for s in stmts:
        if not (1 <= s.i < s.j <= n) or s.cond >> n:
            raise ValidationError(f"statement {s} does not live on [{n}]")
    for s1 in stmts:
        for s2 in stmts:
            for concl in _conclusions(s1, s2):
                if concl not in stmts:
                    return False
    return True


@dataclass(frozen=True)
class Semigraphoid:
    n: int
    statements: frozenset[CIStatement]

    def __post_init__(self):
        if not is_semigraphoid(self.n, self.statements):
            raise ValidationError("statement set is not closed under the semigraphoid axiom")

    @classmethod
    def of(cls, n: int, statements) -> "Semigraphoid":
        return cls(n, frozenset(statements))

    def __contains__(self, s: CIStatement) -> bool:
        return s in self.statements

    def __len__(self) -> int:
        return len(self.statements)


def empty_model(n: int) -> Semigraphoid:
    return Semigraphoid(n, frozenset())


def full_model(n: int) -> Semigraphoid:
    """All elementary statements; every wall removed, one class of size n!."""
    return Semigraphoid(n, frozenset(all_statements(n)))


def sg_closure(n: int, statements) -> Semigraphoid:
    """Smallest semigraphoid containing the given statements.

    Worklist over newly added statements; terminates because the statement
    ground set is finite.
    """
    closed: set[CIStatement] = set()
    work = list(frozenset(statements))
    while work:
        s = work.pop()
        if s in closed:
            continue
        closed.add(s)
        new: list[CIStatement] = []
        for t in closed:
            for concl in itertools.chain(_conclusions(s, t), _conclusions(t, s)):
                if concl not in closed:
                    new.append(concl)
        work.extend(new)
    return Semigraphoid(n, frozenset(closed))


def dual(M: Semigraphoid) -> Semigraphoid:
    """Complement every conditioning set: i ⊥ j | C -> i ⊥ j | [n]\\(C ∪ {i,j})."""
    return Semigraphoid(M.n, frozenset(dual_statement(s, M.n) for s in M.statements))


def class_of(M: Semigraphoid, p: Permutation, *, max_size: int | None = None) -> frozenset[Permutation]:
    """Connected component of p among permutohedron edges labeled by M."""
    if max_size is None and M.n > 10:
        raise EnumerationGuardError(f"class enumeration needs a bound for n={M.n}")
    seen = {p}
    frontier = [p]
    while frontier:
        q = frontier.pop()
        for k in range(1, q.n):
            if edge_label(q, k) in M.statements:
                r = swapped(q, k)
                if r not in seen:
                    seen.add(r)
                    if max_size is not None and len(seen) > max_size:
                        raise EnumerationGuardError(f"class larger than {max_size}")
                    frontier.append(r)
    return frozenset(seen)


def all_classes(M: Semigraphoid) -> RankPartition:
    """Partition of S_n into the classes of the rank test defined by M."""
    if M.n > 10:
        raise EnumerationGuardError(f"cannot sweep S_{M.n}")
    visited: set[Permutation] = set()
    blocks = []
    for p in all_permutations(M.n):
        if p in visited:
            continue
        block = class_of(M, p)
        visited |= block
        blocks.append(block)
    return RankPartition.of(M.n, blocks)


def enumerate_semigraphoids(n: int) -> list[Semigraphoid]:
    """All semigraphoids on [n], by direct subset check (n <= 3)."""
    if n > 3:
        raise EnumerationGuardError(f"cannot enumerate all statement subsets for n={n}")
    ground = all_statements(n)
    out = []
    for r in range(len(ground) + 1):
        for combo in itertools.combinations(ground, r):
            if is_semigraphoid(n, combo):
                out.append(Semigraphoid(n, frozenset(combo)))
    return out


def updown_model(n: int) -> Semigraphoid:
    """The model behind up-down analysis: all i ⊥ j | K with |i - j| >= 2.

    Its classes collect the permutations sharing a descent set, i.e. the
    sign vector of first differences of the data.
    """
    return Semigraphoid(
        n, frozenset(s for s in all_statements(n) if s.j - s.i >= 2)
    )


def relabeled(M: Semigraphoid, image: tuple[int, ...]) -> Semigraphoid:
    """Apply the relabeling a -> image[a-1] to every statement."""
    stmts = [
        CIStatement.of(
            image[s.i - 1],
            image[s.j - 1],
            mask_of(image[a - 1] for a in s.conditioned_on),
        )
        for s in M.statements
    ]
    return Semigraphoid(M.n, frozenset(stmts))


def count_symmetry_classes(models, n: int, *, include_duality: bool = False) -> int:
    """Number of orbits of the given semigraphoids under relabeling of [n]
    (optionally also identifying dual pairs)."""
    pool = {frozenset(M.statements) for M in models}
    images = list(itertools.permutations(range(1, n + 1)))
    orbits = 0
    while pool:
        seed = Semigraphoid(n, next(iter(pool)))
        orbit = set()
        for image in images:
            Mi = relabeled(seed, image)
            orbit.add(Mi.statements)
            if include_duality:
                orbit.add(dual(Mi).statements)
        pool -= orbit
        orbits += 1
    return orbits


# --- JSON ------------------------------------------------------------------

def semigraphoid_to_json(M: Semigraphoid) -> dict:
    return {"n": M.n, "statements": [statement_to_json(s) for s in sorted(M.statements)]}


def semigraphoid_from_json(obj: dict, *, close: bool = False) -> Semigraphoid:
    """Load a semigraphoid; with ``close`` the closure of the statements is
    taken, otherwise non-closed input is rejected."""
    n = int(obj["n"])
    stmts = frozenset(statement_from_json(s) for s in obj["statements"])
    if close:
        return sg_closure(n, stmts)
    return Semigraphoid(n, stmts)


# --- permutohedron edge formulation ----------------------------------------
#
# An edge is (descent tuple, k) with descent[k-1] < descent[k], standing for
# the unordered wall between that permutation and its k-th neighbor.

def canonical_edge(p: Permutation, k: int) -> tuple[tuple[int, ...], int]:
    d = p.descent
    if d[k - 1] > d[k]:
        p = swapped(p, k)
    return (p.descent, k)


def statement_edges(n: int, statements) -> frozenset[tuple[tuple[int, ...], int]]:
    """All permutohedron edges whose CI label lies in the statement set."""
    statements = frozenset(statements)
    out = set()
    for p in all_permutations(n):
        d = p.descent
        for k in range(1, n):
            if d[k - 1] < d[k] and edge_label(p, k) in statements:
                out.add((d, k))
    return frozenset(out)


def partition_edges(part: RankPartition) -> frozenset[tuple[tuple[int, ...], int]]:
    """Edges of the permutohedron joining two permutations of the same block."""
    block_of = {}
    for idx, block in enumerate(part.sorted_blocks()):
        for p in block:
            block_of[p] = idx
    out = set()
    for p in all_permutations(part.n):
        d = p.descent
        for k in range(1, part.n):
            if d[k - 1] < d[k] and block_of[p] == block_of[swapped(p, k)]:
                out.add((d, k))
    return frozenset(out)


def edge_axioms_satisfied(n: int, edges) -> bool:
    """Geometric closure of an edge set: every square with one marked edge
    has the opposite edge marked, and every hexagon with two adjacent marked
    edges has the two antipodal edges marked."""
    edges = frozenset(edges)

    def has(p: Permutation, k: int) -> bool:
        return canonical_edge(p, k) in edges

    for d, k in edges:
        p = Permutation(d)
        for l in range(1, n):
            if abs(l - k) >= 2 and not has(swapped(p, l), k):
                return False
    for p in all_permutations(n):
        for k in range(1, n - 1):
            if has(p, k) and has(p, k + 1):
                w = swapped(swapped(swapped(p, k), k + 1), k)
                if not (has(w, k) and has(w, k + 1)):
                    return False
    return True
