import itertools
from math import comb

import pytest

from finposet import (
    BeatPointWitness,
    CubeEmbedding,
    EmptyPoset,
    InvalidEmbedding,
    InvalidWitness,
    OutOfRange,
    Poset,
    TooLarge,
    TooWide,
    antichain,
    beat_points,
    build_poset,
    canonical_embedding,
    chain,
    cone,
    contractible_embedding,
    core,
    enumerate_posets,
    exists_embedding,
    exists_embedding_naive,
    extend_embedding_at_beat_point,
    hypercube,
    induced_subposet,
    is_contractible,
    lower_bound,
    opposite,
    remove_point,
    suspension,
    two_dimension,
    upper_bound,
    verify_embedding,
)


def fence():
    return build_poset("abcd", [("d", "b"), ("d", "c"), ("c", "a")])


def test_lower_bound():
    assert lower_bound(chain(5)) == 4
    assert lower_bound(antichain(8)) == 3
    assert lower_bound(hypercube(3)) == 3
    assert lower_bound(chain(1)) == 0
    with pytest.raises(EmptyPoset):
        lower_bound(Poset([], []))


def test_upper_bound():
    assert upper_bound(chain(1)) == 0
    assert upper_bound(chain(4)) == 3  # contractible
    assert upper_bound(antichain(2)) == 2  # not contractible
    assert upper_bound(fence()) == 3


def test_canonical_embedding_values():
    C = build_poset("ab", [("a", "b")])
    E = canonical_embedding(C)
    assert E.width == 2
    assert E.bitstring("a") == "00"
    assert E.bitstring("b") == "10"
    single = build_poset(["x"], [])
    E1 = canonical_embedding(single)
    assert E1.width == 1 and E1.masks["x"] == 0
    E4 = canonical_embedding(fence())
    assert E4.width == 4
    assert verify_embedding(E4)


def test_canonical_embedding_census():
    for n in range(1, 6):
        for P in enumerate_posets(n, up_to_iso=True):
            assert verify_embedding(canonical_embedding(P))


def test_verify_embedding_rejects():
    C = build_poset("ab", [("a", "b")])
    assert not verify_embedding(CubeEmbedding(C, 1, {"a": 1, "b": 0}))  # reversed
    A = antichain(2)
    assert not verify_embedding(CubeEmbedding(A, 2, {"0": 1, "1": 3}))  # comparable
    assert not verify_embedding(CubeEmbedding(C, 1, {"a": 0, "b": 2}))  # out of range
    assert not verify_embedding(CubeEmbedding(C, 1, {"a": 0}))  # missing element
    assert not verify_embedding(CubeEmbedding(C, 2, {"a": 1, "b": 1}))  # not injective


def test_exists_embedding_on_example_space():
    P = fence()
    assert exists_embedding(P, 2) is None
    E = exists_embedding(P, 3)
    assert E is not None and E.width == 3
    assert verify_embedding(E)


def test_exists_embedding_chain_prefix_masks():
    for n in range(1, 7):
        E = exists_embedding(chain(n), n - 1) if n > 1 else exists_embedding(chain(1), 0)
        assert E is not None
        assert [E.masks[str(i)] for i in range(n)] == [(1 << i) - 1 for i in range(n)]


def test_exists_embedding_antichain_sperner():
    # largest antichain of the w-cube has size C(w, w//2)
    for n in range(2, 7):
        for w in range(0, 6):
            found = exists_embedding(antichain(n), w) is not None
            assert found == (comb(w, w // 2) >= n)


def test_exists_embedding_guards():
    with pytest.raises(TooWide):
        exists_embedding(chain(2), 31)
    with pytest.raises(OutOfRange):
        exists_embedding(chain(2), -1)
    with pytest.raises(EmptyPoset):
        exists_embedding(Poset([], []), 3)


def test_two_dimension_known_values():
    for n in range(1, 8):
        assert two_dimension(chain(n)).value == n - 1
    assert two_dimension(antichain(3)).value == 3
    assert two_dimension(hypercube(3), max_size=12).value == 3
    assert two_dimension(fence()).value == 3
    for k in range(3):
        assert two_dimension(suspension(antichain(2), k)).value == 2 * k + 2
    for k in range(2):
        assert two_dimension(suspension(antichain(3), k)).value == 2 * k + 3


def test_two_dimension_certificate():
    cert = two_dimension(fence())
    assert cert.exhausted_below
    assert cert.witness.width == cert.value
    assert verify_embedding(cert.witness)
    assert cert.value >= lower_bound(fence())


def test_two_dimension_guards():
    with pytest.raises(EmptyPoset):
        two_dimension(Poset([], []))
    with pytest.raises(TooLarge):
        two_dimension(chain(13))
    assert two_dimension(chain(13), max_size=13).value == 12


def test_two_dimension_deterministic():
    a = two_dimension(fence())
    b = two_dimension(fence())
    assert a.value == b.value and a.witness.masks == b.witness.masks


def test_extend_up_and_down_formulas():
    C = build_poset("abc", [("a", "b"), ("b", "c")])
    rest = remove_point(C, "b")
    E = CubeEmbedding(rest, 1, {"a": 0, "c": 1})
    up = extend_embedding_at_beat_point(C, BeatPointWitness("b", "up", "c"), E)
    assert [up.bitstring(x) for x in "abc"] == ["00", "10", "11"]
    down = extend_embedding_at_beat_point(C, BeatPointWitness("b", "down", "a"), E)
    assert [down.bitstring(x) for x in "abc"] == ["00", "01", "11"]
    assert verify_embedding(up) and verify_embedding(down)


def test_extend_rejects_bad_inputs():
    C = build_poset("abc", [("a", "b"), ("b", "c")])
    rest = remove_point(C, "b")
    E = CubeEmbedding(rest, 1, {"a": 0, "c": 1})
    S = suspension(antichain(2), 1)
    with pytest.raises(InvalidWitness):
        extend_embedding_at_beat_point(S, BeatPointWitness("+1", "up", "-1"), E)
    with pytest.raises(InvalidWitness):
        extend_embedding_at_beat_point(C, BeatPointWitness("b", "up", "a"), E)
    with pytest.raises(InvalidEmbedding):
        bad = CubeEmbedding(rest, 1, {"a": 1, "c": 0})
        extend_embedding_at_beat_point(C, BeatPointWitness("b", "up", "c"), bad)
    with pytest.raises(InvalidEmbedding):
        other = CubeEmbedding(chain(2), 1, {"0": 0, "1": 1})
        extend_embedding_at_beat_point(C, BeatPointWitness("b", "up", "c"), other)


def test_extend_over_census():
    # re-inserting any beat point into the canonical embedding verifies
    for n in range(2, 6):
        for P in enumerate_posets(n, up_to_iso=True):
            for w in beat_points(P):
                E = canonical_embedding(remove_point(P, w.point))
                grown = extend_embedding_at_beat_point(P, w, E)
                assert grown.width == E.width + 1
                assert verify_embedding(grown)


def test_down_beat_matches_opposite_route():
    # the down formula must equal: flip the poset, extend as up, flip back
    for n in range(2, 6):
        for P in enumerate_posets(n, up_to_iso=True):
            for w in beat_points(P):
                if w.kind != "down":
                    continue
                rest = remove_point(P, w.point)
                E = canonical_embedding(rest)
                direct = extend_embedding_at_beat_point(P, w, E)

                full = (1 << E.width) - 1
                op_rest = opposite(rest)
                flipped = CubeEmbedding(
                    op_rest, E.width, {x: full ^ m for x, m in E.masks.items()}
                )
                assert verify_embedding(flipped)
                op_w = BeatPointWitness(w.point, "up", w.witness)
                grown = extend_embedding_at_beat_point(opposite(P), op_w, flipped)
                wide = (1 << grown.width) - 1
                unflipped = {x: wide ^ m for x, m in grown.masks.items()}
                assert unflipped == direct.masks


def test_contractible_embedding_values():
    assert contractible_embedding(chain(4)).width == 3
    E = contractible_embedding(fence())
    assert E.width == 3 and verify_embedding(E)
    # non-contractible input degenerates to the exact solver on the core
    S = suspension(antichain(2), 1)
    E = contractible_embedding(S)
    assert E.width == 4 and verify_embedding(E)
    for P in enumerate_posets(5, up_to_iso=True):
        E = contractible_embedding(cone(P))
        assert E.width == len(P) and verify_embedding(E)


def test_contractible_embedding_census():
    for n in range(1, 7):
        for P in enumerate_posets(n, up_to_iso=True):
            if not is_contractible(P):
                continue
            E = contractible_embedding(P)
            assert E.width == max(n - 1, 0)
            assert verify_embedding(E)


def test_opposite_invariance():
    for n in range(1, 6):
        for P in enumerate_posets(n, up_to_iso=True):
            cert = two_dimension(P)
            Q = opposite(P)
            assert two_dimension(Q).value == cert.value
            full = (1 << cert.witness.width) - 1
            flipped = CubeEmbedding(
                Q, cert.witness.width, {x: full ^ m for x, m in cert.witness.masks.items()}
            )
            assert verify_embedding(flipped)


def test_monotony_on_subsets():
    for n in range(1, 5):
        for P in enumerate_posets(n, up_to_iso=True):
            d = two_dimension(P).value
            elems = list(P.elements)
            for r in range(1, n + 1):
                for S in itertools.combinations(elems, r):
                    sub = induced_subposet(P, S)
                    assert two_dimension(sub).value <= d


def test_beat_point_continuity_census():
    for n in range(2, 6):
        for P in enumerate_posets(n, up_to_iso=True):
            d = two_dimension(P).value
            for w in beat_points(P):
                d2 = two_dimension(remove_point(P, w.point)).value
                assert d - 1 <= d2 <= d


def test_naive_oracle_matches():
    for n in range(1, 5):
        for P in enumerate_posets(n, up_to_iso=True):
            for w in range(0, n + 1):
                fast = exists_embedding(P, w)
                slow = exists_embedding_naive(P, w)
                assert (fast is None) == (slow is None)
                if fast is not None:
                    assert verify_embedding(fast) and verify_embedding(slow)
            naive_value = next(
                w for w in range(0, n + 1) if exists_embedding_naive(P, w) is not None
            )
            assert two_dimension(P).value == naive_value
