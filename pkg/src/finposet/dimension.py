"""Order embeddings into Boolean lattices and the exact 2-dimension.

The 2-dimension of a finite T0 space is the least n such that its
specialization order embeds into the lattice of subsets of an n-set.
Embeddings are stored as one subset mask per element; coordinate i is
bit i, and bitstrings print coordinate 0 first.

Three routes produce certified embeddings: an exhaustive width search
(exact, with symmetry breaking), the canonical characteristic-function
embedding of width |P|, and a deflation replay that turns a core
computation into an embedding one new coordinate per removed point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Poset, _bits, structure_stats
from .errors import (
    EmptyPoset,
    InvalidEmbedding,
    InvalidWitness,
    OutOfRange,
    TooLarge,
    TooWide,
)
from .homotopy import (
    BeatPointWitness,
    beat_points,
    core,
    is_contractible,
    remove_point,
)

# exists_embedding packs one subset mask per element into Python ints and
# enumerates sub-blocks; beyond this width the search space is hopeless
# anyway, so refuse early.
WIDTH_GUARD = 30
# Default size cap for the exact width search.
SIZE_GUARD = 12


@dataclass(frozen=True)
class CubeEmbedding:
    """An assignment of subset masks of {0..width-1} to the elements of poset."""

    poset: Poset
    width: int
    masks: dict[str, int]

    def mask_of(self, x: str) -> int:
        self.poset.index(x)
        return self.masks[x]

    def bitstring(self, x: str) -> str:
        m = self.mask_of(x)
        return "".join("1" if m >> i & 1 else "0" for i in range(self.width))


@dataclass(frozen=True)
class DimCertificate:
    """An exact 2-dimension value with a witness embedding at that width.

    exhausted_below records that every smaller width admits no embedding,
    which is what makes the value exact rather than an upper bound.
    """

    value: int
    witness: CubeEmbedding
    exhausted_below: bool


def lower_bound(P: Poset) -> int:
    """max(ceil(log2 |P|), height): both are forced on any embedding width.

    2^width must have at least |P| points, and a chain of height h needs
    h+1 nested distinct masks, hence at least h coordinates.
    """
    if len(P) == 0:
        raise EmptyPoset("the empty space has no embedding width bounds")
    return max((len(P) - 1).bit_length(), structure_stats(P).height)


def upper_bound(P: Poset) -> int:
    """|P|, improved to |P| - 1 when the space is contractible."""
    if len(P) == 0:
        raise EmptyPoset("the empty space has no embedding width bounds")
    if len(P) == 1:
        return 0
    return len(P) - 1 if is_contractible(P) else len(P)


def canonical_embedding(P: Poset) -> CubeEmbedding:
    """The width-|P| embedding by complemented minimal open sets.

    Coordinate i tracks membership in the complement of the minimal open
    set of elements[i]: bit i of mask(y) is set iff not y <= elements[i].
    """
    n = len(P)
    down = P.down_rows
    masks = {}
    for yi, y in enumerate(P.elements):
        m = 0
        for xi in range(n):
            if not down[xi] >> yi & 1:
                m |= 1 << xi
        masks[y] = m
    return CubeEmbedding(P, n, masks)


def verify_embedding(E: CubeEmbedding) -> bool:
    """Check E is a genuine order embedding of its poset, from scratch.

    Requires total in-range masks and the full biconditional: mask(x) a
    subset of mask(y) exactly when x <= y (injectivity follows).
    """
    P = E.poset
    if set(E.masks) != set(P.elements) or E.width < 0:
        return False
    limit = 1 << E.width
    for m in E.masks.values():
        if not isinstance(m, int) or m < 0 or m >= limit:
            return False
    for x in P.elements:
        mx = E.masks[x]
        for y in P.elements:
            my = E.masks[y]
            if (mx | my == my) != P.leq(x, y):
                return False
    return True


def exists_embedding(P: Poset, width: int) -> CubeEmbedding | None:
    """Search for an order embedding of P into the width-cube, or None.

    Backtracks along a linear extension.  Coordinates are interchangeable
    until first used, so candidates only ever extend the used block at
    its top: a candidate for the next element is (forced bits) | (some
    subset of the unforced already-used coordinates) | (a run of brand
    new coordinates), which prunes the n! coordinate relabelings to one.
    """
    if width < 0:
        raise OutOfRange("width must be >= 0")
    if width > WIDTH_GUARD:
        raise TooWide(f"embedding search is capped at width {WIDTH_GUARD}")
    n = len(P)
    if n == 0:
        raise EmptyPoset("the empty space has no embeddings")
    if n > (1 << width):
        return None

    ext = structure_stats(P).linear_extension
    order = [P.index(e) for e in ext]
    down = P.down_rows
    masks = [0] * n
    used_masks: set[int] = set()

    def place(t: int, used_count: int) -> bool:
        if t == n:
            return True
        i = order[t]
        below = down[i] & ~(1 << i)
        incomparable = []
        forced = 0
        for s in range(t):
            j = order[s]
            if below >> j & 1:
                forced |= masks[j]
            else:
                incomparable.append(masks[j])
        used_low = (1 << used_count) - 1
        free = used_low & ~forced
        for t_new in range(width - used_count + 1):
            block = ((1 << t_new) - 1) << used_count
            sub = 0
            while True:
                m = forced | sub | block
                if m not in used_masks:
                    ok = True
                    for other in incomparable:
                        if m | other == other or m | other == m:
                            ok = False
                            break
                    if ok:
                        masks[i] = m
                        used_masks.add(m)
                        if place(t + 1, used_count + t_new):
                            return True
                        used_masks.discard(m)
                sub = (sub - free) & free
                if sub == 0:
                    break
        return False

    if place(0, 0):
        return CubeEmbedding(P, width, {P.elements[i]: masks[i] for i in range(n)})
    return None


def exists_embedding_naive(P: Poset, width: int) -> CubeEmbedding | None:
    """Reference search with no ordering tricks and no symmetry breaking.

    Assigns elements in declared order, tries every mask, and checks the
    full biconditional against everything assigned.  Exponentially slower
    than exists_embedding but obviously correct; kept for cross-checks.
    """
    if width < 0:
        raise OutOfRange("width must be >= 0")
    if width > WIDTH_GUARD:
        raise TooWide(f"embedding search is capped at width {WIDTH_GUARD}")
    n = len(P)
    if n == 0:
        raise EmptyPoset("the empty space has no embeddings")
    masks = [0] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        for m in range(1 << width):
            ok = True
            for j in range(i):
                below = masks[j] | m == m
                above = m | masks[j] == masks[j]
                if below != P.leq(P.elements[j], P.elements[i]) or above != P.leq(
                    P.elements[i], P.elements[j]
                ):
                    ok = False
                    break
            if ok:
                masks[i] = m
                if place(i + 1):
                    return True
        return False

    if place(0):
        return CubeEmbedding(P, width, {P.elements[i]: masks[i] for i in range(n)})
    return None


def two_dimension(P: Poset, max_size: int = SIZE_GUARD) -> DimCertificate:
    """The exact least embedding width, by searching widths from the lower bound.

    Sizes above max_size are refused (the search is exponential); raise
    the cap explicitly to push further.
    """
    n = len(P)
    if n == 0:
        raise EmptyPoset("the empty space has no 2-dimension")
    if n > max_size:
        raise TooLarge(f"exact 2-dimension is capped at {max_size} elements; pass max_size to override")
    for w in range(lower_bound(P), n + 1):
        E = exists_embedding(P, w)
        if E is not None:
            return DimCertificate(w, E, True)
    raise AssertionError("unreachable: the canonical embedding bounds width by |P|")


def extend_embedding_at_beat_point(
    P: Poset, w: BeatPointWitness, E: CubeEmbedding
) -> CubeEmbedding:
    """Turn an embedding of P minus a beat point into one of P, one wider.

    For an up beat point x with witness y (minimum of the strict up-set),
    x reuses y's mask and the new coordinate separates x and everything
    below it from the rest.  A down beat point is handled dually: x takes
    y's mask plus the new coordinate, which also marks everything above x.
    """
    witnesses = [v for v in beat_points(P) if v.point == w.point]
    if not witnesses:
        raise InvalidWitness(f"{w.point!r} is not a beat point")
    if w not in witnesses:
        raise InvalidWitness(
            f"{w.point!r} is a beat point but not with kind={w.kind!r}, witness={w.witness!r}"
        )
    rest = remove_point(P, w.point)
    if E.poset != rest or not verify_embedding(E):
        raise InvalidEmbedding("the given embedding is not a valid embedding of P minus the point")
    new_bit = 1 << E.width
    masks = {}
    if w.kind == "up":
        for z in P.elements:
            if z == w.point:
                masks[z] = E.masks[w.witness]
            elif P.lt(z, w.point):
                masks[z] = E.masks[z]
            else:
                masks[z] = E.masks[z] | new_bit
    else:
        for z in P.elements:
            if z == w.point:
                masks[z] = E.masks[w.witness] | new_bit
            elif P.lt(w.point, z):
                masks[z] = E.masks[z] | new_bit
            else:
                masks[z] = E.masks[z]
    return CubeEmbedding(P, E.width + 1, masks)


def contractible_embedding(P: Poset) -> CubeEmbedding:
    """An embedding built by replaying a deflation to the core in reverse.

    The core is embedded exactly (trivially, at width 0, when P is
    contractible); re-adding the removed beat points costs one coordinate
    each, so a contractible space on n points lands in width n - 1.
    """
    trace = core(P)
    stages = [trace.start]
    for w in trace.removals:
        stages.append(remove_point(stages[-1], w.point))
    base = stages[-1]
    if len(base) == 1:
        E = CubeEmbedding(base, 0, {base.elements[0]: 0})
    else:
        E = two_dimension(base).witness
    for stage, w in zip(reversed(stages[:-1]), reversed(trace.removals)):
        E = extend_embedding_at_beat_point(stage, w, E)
    return E
