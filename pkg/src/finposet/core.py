"""Finite posets viewed as finite T0 topological spaces.

Element ids are opaque strings kept in a fixed declared order, and every
operation is deterministic in that order.  The relation is stored as one
down-set bit row per element: bit j of row i is set iff
``elements[j] <= elements[i]``.

Under the specialization correspondence the minimal open set of x is its
down-set, so the open sets of the space are exactly the down-closed
subsets and order queries and topology queries coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import CycleError, TooLarge, UnknownElement

# Exhaustive subset enumeration in topology_census is capped here.
CENSUS_GUARD = 20
# Default backtracking guard for isomorphism tests.
ISO_GUARD = 10


def _bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _close_rows(rows: list[int]) -> list[int]:
    """Transitive closure of down-set rows, in place (fixpoint iteration)."""
    changed = True
    while changed:
        changed = False
        for i in range(len(rows)):
            acc = rows[i]
            for j in _bits(rows[i]):
                acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return rows


class Poset:
    """An immutable finite partial order on named elements.

    Construct validated instances with :func:`build_poset`; the raw
    constructor trusts its rows (they must already be reflexive,
    antisymmetric and transitively closed).  Down-set bit rows are sized
    to ``len(elements)``, which keeps the exhaustive solver paths honest
    up to machine-word-ish sizes; nothing else depends on a size cap.
    """

    __slots__ = ("elements", "_index", "_down", "_up")

    def __init__(self, elements: Iterable[str], down_rows: Iterable[int]):
        self.elements: tuple[str, ...] = tuple(elements)
        self._index: dict[str, int] = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate element ids")
        self._down: tuple[int, ...] = tuple(down_rows)
        if len(self._down) != len(self.elements):
            raise ValueError("row count does not match element count")
        self._up: tuple[int, ...] | None = None

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._down == other._down

    def __hash__(self) -> int:
        return hash((self.elements, self._down))

    def __repr__(self) -> str:
        return f"Poset({list(self.elements)!r}, covers={covers(self)!r})"

    def index(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(f"element {x!r} is not in the poset") from None

    def leq(self, x: str, y: str) -> bool:
        """x <= y."""
        return bool(self._down[self.index(y)] >> self.index(x) & 1)

    def lt(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    # -- index-level rows (package internal) -----------------------------

    @property
    def down_rows(self) -> tuple[int, ...]:
        return self._down

    @property
    def up_rows(self) -> tuple[int, ...]:
        if self._up is None:
            n = len(self.elements)
            up = [0] * n
            for i, row in enumerate(self._down):
                for j in _bits(row):
                    up[j] |= 1 << i
            self._up = tuple(up)
        return self._up

    # -- derived element sets --------------------------------------------

    def down_set(self, x: str) -> set[str]:
        """All y with y <= x (the minimal open set of x)."""
        return {self.elements[j] for j in _bits(self._down[self.index(x)])}

    def up_set(self, x: str) -> set[str]:
        """All y with x <= y (the closure of {x})."""
        return {self.elements[j] for j in _bits(self.up_rows[self.index(x)])}

    def maximal_elements(self) -> list[str]:
        up = self.up_rows
        return [e for i, e in enumerate(self.elements) if up[i] == 1 << i]

    def minimal_elements(self) -> list[str]:
        return [e for i, e in enumerate(self.elements) if self._down[i] == 1 << i]

    def maximum(self) -> str | None:
        tops = self.maximal_elements()
        return tops[0] if len(tops) == 1 else None

    def minimum(self) -> str | None:
        bots = self.minimal_elements()
        return bots[0] if len(bots) == 1 else None

    def check(self) -> None:
        """Assert the partial-order axioms on the stored rows (test hook)."""
        n = len(self.elements)
        for i in range(n):
            assert self._down[i] >> i & 1, f"not reflexive at {self.elements[i]}"
            assert self._down[i] < 1 << n, "row has bits outside the element range"
            for j in _bits(self._down[i]):
                if j != i:
                    assert not self._down[j] >> i & 1, (
                        f"antisymmetry fails on {self.elements[i]}, {self.elements[j]}"
                    )
                assert self._down[i] | self._down[j] == self._down[i], (
                    f"transitivity fails below {self.elements[i]}"
                )


class StructureStats(NamedTuple):
    height: int
    linear_extension: list[str]


@dataclass(frozen=True)
class MonotoneMap:
    """A total order-preserving (= continuous) map between posets."""

    source: Poset
    target: Poset
    assignment: dict[str, str]

    def __post_init__(self) -> None:
        for x in self.source:
            if x not in self.assignment:
                raise ValueError(f"assignment is not total: missing {x!r}")
            if self.assignment[x] not in self.target:
                raise ValueError(f"image {self.assignment[x]!r} is not in the target")
        for x in self.source:
            for y in self.source:
                if self.source.leq(x, y) and not self.target.leq(
                    self.assignment[x], self.assignment[y]
                ):
                    raise ValueError(f"not order preserving on ({x!r}, {y!r})")

    def __call__(self, x: str) -> str:
        return self.assignment[x]


def build_poset(elements: Iterable[str], relations: Iterable[tuple[str, str]]) -> Poset:
    """Build the reflexive-transitive closure of the given relation pairs.

    Each pair (x, y) declares x <= y; the pairs may be cover pairs or any
    valid comparabilities.  Raises CycleError if the closure would violate
    antisymmetry and UnknownElement if a pair references an undeclared id.
    """
    ids = list(elements)
    index = {e: i for i, e in enumerate(ids)}
    if len(index) != len(ids):
        raise ValueError("duplicate element ids")
    rows = [1 << i for i in range(len(ids))]
    for x, y in relations:
        if x not in index:
            raise UnknownElement(f"relation references undeclared element {x!r}")
        if y not in index:
            raise UnknownElement(f"relation references undeclared element {y!r}")
        rows[index[y]] |= 1 << index[x]
    _close_rows(rows)
    for i in range(len(ids)):
        for j in _bits(rows[i]):
            if j != i and rows[j] >> i & 1:
                raise CycleError(f"cycle through {ids[i]!r} and {ids[j]!r}")
    return Poset(ids, rows)


def covers(P: Poset) -> list[tuple[str, str]]:
    """The transitive reduction: pairs (x, y) with x < y and nothing between."""
    out = []
    down = P.down_rows
    up = P.up_rows
    for xi in range(len(P)):
        for yi in _bits(up[xi]):
            if yi == xi:
                continue
            if down[yi] & up[xi] == (1 << xi) | (1 << yi):
                out.append((P.elements[xi], P.elements[yi]))
    return out


def minimal_open_set(P: Poset, x: str) -> set[str]:
    """{y : y <= x}, the smallest open set containing x."""
    return P.down_set(x)


def opposite(P: Poset) -> Poset:
    """Same elements with the order reversed (opens become closeds)."""
    return Poset(P.elements, P.up_rows)


def product(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on pairs, named ``(p,q)``."""
    names = [f"({p},{q})" for p in P.elements for q in Q.elements]
    nq = len(Q)
    rows = []
    for pi in range(len(P)):
        for qi in range(nq):
            row = 0
            for pj in _bits(P.down_rows[pi]):
                for qj in _bits(Q.down_rows[qi]):
                    row |= 1 << (pj * nq + qj)
            rows.append(row)
    return Poset(names, rows)


def _disambiguate(taken: set[str], name: str) -> str:
    while name in taken:
        name += "'"
    return name


def disjoint_union(P: Poset, Q: Poset) -> Poset:
    """Side-by-side union with no cross comparabilities.

    Left ids are kept verbatim; a right id that collides gets primes
    appended until fresh, so ``P | empty`` is P on the nose.
    """
    names = list(P.elements)
    taken = set(names)
    for q in Q.elements:
        fresh = _disambiguate(taken, q)
        names.append(fresh)
        taken.add(fresh)
    shift = len(P)
    rows = list(P.down_rows) + [row << shift for row in Q.down_rows]
    return Poset(names, rows)


def induced_subposet(P: Poset, S: Iterable[str]) -> Poset:
    """The restriction of P to S, keeping P's element order."""
    wanted = set(S)
    for x in wanted:
        if x not in P:
            raise UnknownElement(f"element {x!r} is not in the poset")
    keep = [i for i, e in enumerate(P.elements) if e in wanted]
    names = [P.elements[i] for i in keep]
    rows = []
    for i in keep:
        row = 0
        for new_j, old_j in enumerate(keep):
            if P.down_rows[i] >> old_j & 1:
                row |= 1 << new_j
        rows.append(row)
    return Poset(names, rows)


def remove_element(P: Poset, x: str) -> Poset:
    """P without x (transitivity keeps all remaining comparabilities)."""
    P.index(x)
    return induced_subposet(P, [e for e in P.elements if e != x])


def topology_census(P: Poset) -> tuple[int, int]:
    """(number of open sets, number of antichains) by direct enumeration.

    Opens are the down-closed subsets.  The two counts are computed
    independently; the antichain of maximal elements of an open set gives
    the bijection that makes them equal.
    """
    n = len(P)
    if n > CENSUS_GUARD:
        raise TooLarge(f"topology census needs |P| <= {CENSUS_GUARD}, got {n}")
    down = P.down_rows
    up = P.up_rows
    opens = 0
    antichains = 0
    for subset in range(1 << n):
        is_open = True
        is_antichain = True
        rest = subset
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            if down[i] & ~subset:
                is_open = False
            if (down[i] | up[i]) & subset != low:
                is_antichain = False
            if not (is_open or is_antichain):
                break
        opens += is_open
        antichains += is_antichain
    return opens, antichains


def is_initial_map(f: MonotoneMap) -> bool:
    """True iff x <= x' exactly when f(x) <= f(x'), for all pairs.

    An initial map from a poset is automatically injective, hence an
    order embedding onto its image.
    """
    src, tgt, a = f.source, f.target, f.assignment
    for x in src:
        for y in src:
            if src.leq(x, y) != tgt.leq(a[x], a[y]):
                return False
    return True


def _element_invariants(P: Poset) -> list[tuple[int, int, int, int]]:
    """(|down|, |up|, longest chain below, longest chain above) per element."""
    n = len(P)
    ext = structure_stats(P).linear_extension
    order = [P.index(e) for e in ext]
    depth = [0] * n
    for i in order:
        for j in _bits(P.down_rows[i]):
            if j != i:
                depth[i] = max(depth[i], depth[j] + 1)
    above = [0] * n
    for i in reversed(order):
        for j in _bits(P.up_rows[i]):
            if j != i:
                above[i] = max(above[i], above[j] + 1)
    return [
        (P.down_rows[i].bit_count(), P.up_rows[i].bit_count(), depth[i], above[i])
        for i in range(n)
    ]


def is_isomorphic(P: Poset, Q: Poset, guard: int = ISO_GUARD) -> bool:
    """Decide order-isomorphism by backtracking over invariant-compatible maps."""
    if len(P) > guard or len(Q) > guard:
        raise TooLarge(f"isomorphism guard is {guard} elements")
    if len(P) != len(Q):
        return False
    inv_p = _element_invariants(P)
    inv_q = _element_invariants(Q)
    if sorted(inv_p) != sorted(inv_q):
        return False
    n = len(P)
    order = sorted(range(n), key=lambda i: (inv_p[i], i))
    candidates: dict[tuple[int, int, int, int], list[int]] = {}
    for j in range(n):
        candidates.setdefault(inv_q[j], []).append(j)
    down_p, down_q = P.down_rows, Q.down_rows
    assigned = [-1] * n
    used = [False] * n

    def place(t: int) -> bool:
        if t == n:
            return True
        i = order[t]
        for j in candidates[inv_p[i]]:
            if used[j]:
                continue
            ok = True
            for s in range(t):
                i2 = order[s]
                j2 = assigned[i2]
                if (down_p[i] >> i2 & 1) != (down_q[j] >> j2 & 1) or (
                    down_p[i2] >> i & 1
                ) != (down_q[j2] >> j & 1):
                    ok = False
                    break
            if ok:
                assigned[i] = j
                used[j] = True
                if place(t + 1):
                    return True
                used[j] = False
        return False

    return place(0)


def structure_stats(P: Poset) -> StructureStats:
    """Height (longest chain minus one) and a deterministic linear extension.

    The extension repeatedly takes the first element, in declared order,
    whose strict down-set is already placed.
    """
    n = len(P)
    down = P.down_rows
    taken = 0
    ext_idx: list[int] = []
    while len(ext_idx) < n:
        for i in range(n):
            if not taken >> i & 1 and not down[i] & ~taken & ~(1 << i):
                taken |= 1 << i
                ext_idx.append(i)
                break
    depth = [0] * n
    for i in ext_idx:
        for j in _bits(down[i]):
            if j != i:
                depth[i] = max(depth[i], depth[j] + 1)
    height = max(depth, default=0)
    return StructureStats(height, [P.elements[i] for i in ext_idx])
