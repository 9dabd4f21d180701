"""Beat points and cores.

A point is removable up to homotopy when its strict up-set has a minimum
(an up beat point) or its strict down-set has a maximum (a down beat
point).  Removing beat points one at a time until none remain yields the
core; a space is contractible exactly when its core is a single point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Poset, _bits, remove_element
from .errors import EmptyPoset


@dataclass(frozen=True)
class BeatPointWitness:
    """A beat point together with the comparable point that absorbs it.

    kind is "up" when witness is the minimum of the strict up-set of
    point, "down" when it is the maximum of the strict down-set.
    """

    point: str
    kind: str
    witness: str


@dataclass(frozen=True)
class CoreTrace:
    """A full deflation record: the removals that take start to core."""

    start: Poset
    removals: tuple[BeatPointWitness, ...]
    core: Poset


def beat_points(P: Poset) -> list[BeatPointWitness]:
    """All beat point witnesses, in element order, "up" before "down"."""
    out = []
    down = P.down_rows
    up = P.up_rows
    for i, x in enumerate(P.elements):
        strict_up = up[i] ^ (1 << i)
        if strict_up:
            # minimum of the strict up-set: a member below every other member
            for j in _bits(strict_up):
                if strict_up & ~up[j] == 0:
                    out.append(BeatPointWitness(x, "up", P.elements[j]))
                    break
        strict_down = down[i] ^ (1 << i)
        if strict_down:
            for j in _bits(strict_down):
                if strict_down & ~down[j] == 0:
                    out.append(BeatPointWitness(x, "down", P.elements[j]))
                    break
    return out


def is_beat_point(P: Poset, x: str) -> BeatPointWitness | None:
    """The witness for x if x is a beat point, else None."""
    P.index(x)
    for w in beat_points(P):
        if w.point == x:
            return w
    return None


def remove_point(P: Poset, x: str) -> Poset:
    """P minus the point x (an induced subposet)."""
    return remove_element(P, x)


def core(P: Poset, rng: random.Random | None = None) -> CoreTrace:
    """Deflate P by removing one beat point at a time until none remain.

    With rng=None the first witness in element order is removed at each
    step, making the trace deterministic; passing an rng picks uniformly
    among the current witnesses instead.  Either way the final core is
    the same space up to isomorphism.
    """
    if len(P) == 0:
        raise EmptyPoset("the empty space has no core")
    removals = []
    current = P
    while True:
        witnesses = beat_points(current)
        if not witnesses:
            return CoreTrace(P, tuple(removals), current)
        w = witnesses[0] if rng is None else rng.choice(witnesses)
        removals.append(w)
        current = remove_point(current, w.point)


def is_contractible(P: Poset) -> bool:
    """True iff the core of P is a single point."""
    return len(core(P).core) == 1
