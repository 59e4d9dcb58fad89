import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import families_closed
from etalecat.errors import GuardExceeded, SpaceMismatch, ValidationError
from etalecat.topology import (FiniteSpace, PartialMap, all_partial_maps, compact_by_covers, compose_partial,
                               finite_subcover, image, inverse, is_compact, is_continuous, is_discrete,
                               is_hausdorff, is_locally_compact_hausdorff, is_partial_homeomorphism, is_proper,
                               lift, mask_of, one_point_compactify, open_covers, partial_homeos, preimage, restrict)
from oracles import all_spaces, brute_partial_homeos, open_sets

SIERP = FiniteSpace.sierpinski()
SPACES = [X for n in range(4) for X in all_spaces(n)]


@st.composite
def spaces(draw, max_points=4):
    n = draw(st.integers(0, max_points))
    fam = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=5))
    return FiniteSpace.generated(n, fam)


@st.composite
def partial_maps(draw, source, target):
    maps = list(all_partial_maps(source, target))
    return draw(st.sampled_from(maps))


def test_every_topology_matches_closed_families():
    for n in range(4):
        assert sorted(tuple(X.opens) for X in all_spaces(n)) == sorted(families_closed(n))


def test_from_opens_rejects_unclosed_family():
    with pytest.raises(ValidationError):
        FiniteSpace.from_opens(2, [0, 1, 2, 3 & 0])
    with pytest.raises(ValidationError):
        FiniteSpace.from_opens(3, [0, 0b001, 0b010, 0b111])


def test_sierpinski_opens():
    assert SIERP.opens == (0, 0b10, 0b11)


def test_sierpinski_composition_and_preimage():
    f = PartialMap.from_dict(SIERP, SIERP, {1: 1})
    assert compose_partial(f, f) == f
    assert preimage(f, 0b10) == 0b10
    assert preimage(f, SIERP.full) == f.domain
    assert preimage(f, 0) == 0


def test_preimage_out_of_range():
    f = PartialMap.identity(SIERP)
    with pytest.raises(ValidationError):
        preimage(f, 0b100)


def test_identity_and_empty_composition():
    X = FiniteSpace.discrete(3)
    for f in all_partial_maps(X, X):
        assert compose_partial(PartialMap.identity(X), f) == f
        e = PartialMap.empty(X, X)
        assert compose_partial(f, e).domain == 0
        assert compose_partial(e, f).domain == 0


def test_composition_space_mismatch():
    f = PartialMap.identity(FiniteSpace.discrete(2))
    g = PartialMap.identity(SIERP)
    with pytest.raises(SpaceMismatch):
        compose_partial(g, f)


def test_discontinuous_map_rejected():
    # the swap of the Sierpinski space pulls {1} back to {0}, which is not open
    assert not is_continuous(SIERP, SIERP, (1, 0))
    with pytest.raises(ValidationError):
        PartialMap(SIERP, SIERP, (1, 0))


@given(spaces(3), st.data())
def test_preimage_of_composite(X, data):
    Y = data.draw(spaces(3))
    Z = data.draw(spaces(2))
    f = data.draw(partial_maps(X, Y))
    g = data.draw(partial_maps(Y, Z))
    h = compose_partial(g, f)
    for W in range(1 << Z.point_count):
        assert preimage(h, W) == preimage(f, preimage(g, W))


def test_composition_associative_exhaustive():
    X = FiniteSpace.sierpinski()
    Y = FiniteSpace.discrete(2)
    fs = list(all_partial_maps(X, Y))
    gs = list(all_partial_maps(Y, X))
    hs = list(all_partial_maps(X, X))
    for f in fs:
        for g in gs:
            for h in hs:
                assert compose_partial(h, compose_partial(g, f)) == compose_partial(compose_partial(h, g), f)


@given(spaces(3), st.data())
def test_continuity_by_open_pullback(X, data):
    Y = data.draw(spaces(3))
    f = data.draw(partial_maps(X, Y))
    assert X.is_open(f.domain)
    assert all(X.is_open(preimage(f, V)) for V in Y.opens)


def test_compact_by_exhaustive_covers_up_to_four_points():
    for n in range(5):
        for X in all_spaces(n):
            for k in range(1 << n):
                assert compact_by_covers(X, k)
                assert is_compact(X, k)


def test_cover_enumeration_is_complete_on_small_space():
    # every open cover of the 2-point discrete space, listed by hand
    X = FiniteSpace.discrete(2)
    assert sorted(open_covers(X, 0b11)) == sorted([(0b11,), (0b01, 0b10), (0b01, 0b11), (0b10, 0b11),
                                                    (0b01, 0b10, 0b11)])
    assert finite_subcover((0b01, 0b10, 0b11), 0b11) in [(0b11,), (0b01, 0b10)]
    assert finite_subcover((0b01,), 0b11) is None


def test_every_partial_map_is_proper():
    for X in all_spaces(2):
        for Y in all_spaces(2):
            for f in all_partial_maps(X, Y):
                assert is_proper(f)
    assert is_proper(PartialMap.identity(SIERP))
    assert is_proper(PartialMap.empty(SIERP, SIERP))


@given(spaces(3), st.data())
def test_proper_composite(X, data):
    Y, Z = data.draw(spaces(3)), data.draw(spaces(3))
    f, g = data.draw(partial_maps(X, Y)), data.draw(partial_maps(Y, Z))
    assert is_proper(f) and is_proper(g)
    assert is_proper(compose_partial(g, f))


def test_hausdorff_iff_discrete():
    for n in range(5):
        for X in all_spaces(n):
            assert is_hausdorff(X) == is_discrete(X)
            assert is_locally_compact_hausdorff(X) == is_discrete(X)


def test_hausdorff_examples():
    assert is_hausdorff(FiniteSpace.discrete(2))
    assert not is_hausdorff(SIERP)
    assert is_hausdorff(FiniteSpace.discrete(1))


def test_partial_homeos_counts():
    # frozen from the brute-force oracle
    assert len(brute_partial_homeos(FiniteSpace.discrete(1))) == 2
    assert len(brute_partial_homeos(FiniteSpace.discrete(2))) == 7
    assert len(brute_partial_homeos(SIERP)) == 3
    assert len(partial_homeos(FiniteSpace.discrete(1))) == 2
    assert len(partial_homeos(FiniteSpace.discrete(2))) == 7
    assert len(partial_homeos(SIERP)) == 3


def test_partial_homeos_match_oracle_on_all_small_spaces():
    for n in range(4):
        for X in all_spaces(n):
            ours = {tuple(sorted(f.as_dict().items())) for f in partial_homeos(X)}
            assert ours == brute_partial_homeos(X)


def test_sierpinski_homeos_exclude_swap():
    maps = {tuple(sorted(f.as_dict().items())) for f in partial_homeos(SIERP)}
    assert maps == {(), ((1, 1),), ((0, 0), (1, 1))}


def test_partial_homeos_closed_under_composition_and_inverse():
    for X in (SIERP, FiniteSpace.discrete(2), FiniteSpace.generated(3, [0b001, 0b011])):
        hs = partial_homeos(X)
        hs_set = set(hs)
        for f in hs:
            assert is_partial_homeomorphism(f)
            assert inverse(f) in hs_set
            for g in hs:
                assert compose_partial(g, f) in hs_set


def test_partial_homeos_guard():
    with pytest.raises(GuardExceeded):
        partial_homeos(FiniteSpace.discrete(3), limit=10)


def test_compactify_empty_and_two_points():
    assert one_point_compactify(FiniteSpace.discrete(0)).space.point_count == 1
    B = one_point_compactify(FiniteSpace.discrete(2))
    assert B.space.point_count == 3 and B.basepoint == 2
    assert is_discrete(B.space)


def test_compactify_opens_from_definition():
    # opens of X plus {inf} u (X minus K) for every compact K, computed directly
    for n in range(4):
        X = FiniteSpace.discrete(n)
        inf = frozenset([n])
        want = set(open_sets(X))
        for K in range(1 << n):
            want.add(inf | frozenset(p for p in range(n) if not (K >> p) & 1))
        assert open_sets(one_point_compactify(X).space) == want


def test_compactify_rejects_non_discrete():
    with pytest.raises(ValidationError):
        one_point_compactify(SIERP)


def test_compactification_round_trips():
    for n in range(4):
        for m in range(4):
            X, Y = FiniteSpace.discrete(n), FiniteSpace.discrete(m)
            for f in all_partial_maps(X, Y):
                g = lift(f)
                assert restrict(g) == f
                assert lift(restrict(g)) == g


def test_swap_round_trip():
    X = FiniteSpace.discrete(2)
    swap = PartialMap(X, X, (1, 0))
    assert restrict(lift(swap)) == swap
    assert lift(swap).map.values == (1, 0, 2)


def test_image_and_mask_helpers():
    X = FiniteSpace.discrete(3)
    f = PartialMap.from_dict(X, X, {0: 2, 2: 2})
    assert image(f, X.full) == 0b100
    assert f.domain == mask_of([0, 2])
