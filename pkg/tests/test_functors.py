import json

import pytest

from etalecat import catalog
from etalecat.errors import GuardExceeded, current_guards
from etalecat.functors import (Verdict, check_counit_naturality, check_transformation_groupoid,
                               check_triangle_left, check_triangle_right, check_unit_naturality, counit,
                               gu_on_hom, omega, restricted_action, same_germ, tg_composition_witness,
                               tg_on_morphism, tg_representative_problems, transformation_groupoid, unit,
                               universal_groupoid)
from etalecat.groupoid import (CoupleMorphism, GroupoidHom, compose_couples, identity_couple, identity_ghom,
                               is_homeomorphic_iso, is_proper_couple, pair_groupoid, sa_on_couple, space_groupoid)
from etalecat.laws import composable_pairs, default_pool, enumerate_inverse_semigroups
from etalecat.semigroup import (ActionMorphism, SemigroupHom, compose_action_morphisms, identity_hom,
                                identity_morphism, is_proper_morphism, sp_hom, spectral_action)
from etalecat.topology import FiniteSpace, PartialMap, bits, is_homeomorphism
from oracles import germ_classes, groupoid_isomorphic

get = catalog.get
POOL = default_pool(0)
ACTIONS = [get(n) for n in catalog.ACTIONS]


def swap_morphism():
    A = get("SWAP")
    X = A.space
    return ActionMorphism(A, A, identity_hom(A.semigroup), PartialMap(X, X, (1, 0)))


def test_tg_examples():
    P = get("PAIR2")
    assert groupoid_isomorphic(transformation_groupoid(get("SWAP")).groupoid, P)
    assert groupoid_isomorphic(transformation_groupoid(get("I2NAT")).groupoid, P)
    G = transformation_groupoid(get("OX(2)")).groupoid
    assert groupoid_isomorphic(G, space_groupoid(FiniteSpace.discrete(2)))


def test_tg_class_count_matches_union_find_oracle():
    for A in ACTIONS + list(POOL.actions):
        assert transformation_groupoid(A).groupoid.arrow_count == germ_classes(A)


def test_tg_classes_follow_germ_relation():
    for A in ACTIONS:
        tg = transformation_groupoid(A)
        for (s, x), a in tg.class_index.items():
            for (t, y), b in tg.class_index.items():
                assert (a == b) == (x == y and same_germ(A, s, t, x))


def test_tg_etale_with_unit_space_homeomorphic():
    for A in ACTIONS:
        tg = transformation_groupoid(A)
        assert check_transformation_groupoid(tg) == []
        assert is_homeomorphism(tg.unit_to_point())


def test_tg_representatives_are_least():
    for A in ACTIONS:
        tg = transformation_groupoid(A)
        for (s, x), a in tg.class_index.items():
            assert tg.representative[a] <= (s, x)


def test_tg_structure_maps():
    A = get("I2NAT")
    tg = transformation_groupoid(A)
    G = tg.groupoid
    for (s, x), a in tg.class_index.items():
        y = A.alpha[s].values[x]
        assert tg.representative[G.d[a]][1] == x
        assert tg.representative[G.r[a]][1] == y


def test_restricted_action_identity_is_original():
    for A in ACTIONS:
        R = restricted_action(A, identity_hom(A.semigroup), PartialMap.identity(A.space))
        assert R == A


def test_restricted_action_spectral_domains():
    theta = get("E(I2)->I2")
    m = sp_hom(theta)
    B = m.target
    R = restricted_action(B, theta, m.xi)
    _, pts = B.space.subspace(m.xi.domain)
    for s in range(theta.source.order):
        assert [pts[p] for p in bits(R.domains[s])] == [y for y in bits(B.domains[theta.map[s]])
                                                       if (m.xi.domain >> y) & 1]


def test_empty_xi_gives_action_on_empty_space():
    # TRIV -> I2 sending the identity to the empty map makes an empty xi legitimate:
    # every domain condition reads empty = empty
    A, B = get("TRIVACT"), get("I2NAT")
    I2 = B.semigroup
    zero = next(s for s in range(I2.order) if I2.labels[s].domain == 0)
    theta = SemigroupHom(A.semigroup, I2, [zero])
    m = ActionMorphism(A, B, theta, PartialMap.empty(B.space, A.space))
    R = restricted_action(B, theta, m.xi)
    assert R.space.point_count == 0
    c = tg_on_morphism(m)
    assert c.K.arrow_count == 0


def test_tg_identity_and_swap():
    for A in ACTIONS:
        T = transformation_groupoid(A).groupoid
        assert tg_on_morphism(identity_morphism(A)) == identity_couple(T)
    c = tg_on_morphism(swap_morphism())
    assert c.K.arrow_count == 4 and c != identity_couple(c.source)
    assert compose_couples(c, c) == identity_couple(c.source)


def test_tg_well_defined_and_functorial_on_pool():
    pairs = composable_pairs(POOL.morphisms)[:120]
    for m2, m1 in pairs:
        assert tg_representative_problems(m1) == []
        lhs = tg_on_morphism(compose_action_morphisms(m2, m1))
        assert lhs == compose_couples(tg_on_morphism(m2), tg_on_morphism(m1))
        w = tg_composition_witness(m2, m1)
        assert is_homeomorphic_iso(w)


def test_gu_examples():
    assert groupoid_isomorphic(universal_groupoid(get("Z2")).groupoid, get("Z2G"))
    G = universal_groupoid(get("E2")).groupoid
    assert G.arrow_count == 2 and len(G.units) == 2
    assert universal_groupoid(get("I2")).groupoid.arrow_count == 7


def test_gu_arrow_count_is_order():
    sgs = [get(n) for n in catalog.SEMIGROUPS] + [S for n in (1, 2, 3) for S in enumerate_inverse_semigroups(n)]
    for S in sgs:
        A = spectral_action(S)
        assert universal_groupoid(S).groupoid.arrow_count == S.order == germ_classes(A)


def test_gu_on_inclusion():
    c = gu_on_hom(get("E(I2)->I2"))
    assert len(c.source.units) == 4 and c.target.arrow_count == 7
    assert c.K.arrow_count == 4


def test_unit_on_swap():
    A = get("SWAP")
    u = unit(A)
    tg = transformation_groupoid(A)
    bis = u.target.semigroup
    assert bis.labels[u.theta.map[1]] == tg.slice_of(1, 0b11)
    assert len(list(bits(bis.labels[u.theta.map[1]]))) == 2


def test_counit_of_pair2_and_space():
    P = get("PAIR2")
    w = omega(P)
    assert w.source.arrow_count == 4 and sorted(w.map) == [0, 1, 2, 3]
    S2 = get("SPACE(2)")
    w2 = omega(S2)
    assert sorted(w2.map) == list(S2.units)


def test_triangles_examples():
    assert check_triangle_left(get("SWAP"))
    assert check_triangle_right(get("PAIR2"))
    assert check_triangle_left(get("TRIVACT"))
    assert check_triangle_right(get("SPACE(1)"))


def test_triangles_on_catalog():
    for A in ACTIONS:
        assert check_triangle_left(A)
    for name in catalog.GROUPOIDS:
        G = get(name)
        if G.arrow_count <= current_guards().triangle_max_arrows:
            assert check_triangle_right(G)


def test_unit_naturality_swap():
    assert check_unit_naturality(swap_morphism())


def test_naturality_on_pool():
    for m in POOL.morphisms[::4]:
        assert check_unit_naturality(m)
    for c in POOL.couples:
        assert check_counit_naturality(c)


def pair2_swap_couple():
    P = get("PAIR2")
    return CoupleMorphism(P, P, identity_ghom(P), GroupoidHom(P, P, [3, 2, 1, 0]))


def test_verdict_records_both_sides_on_failure():
    def broken_counit(G):
        e = counit(G)
        return compose_couples(pair2_swap_couple(), e) if G == get("PAIR2") else e
    v = check_triangle_right(get("PAIR2"), counit_fn=broken_counit)
    assert isinstance(v, Verdict) and not v
    assert v.lhs is not None and v.rhs is not None and v.lhs != v.rhs
    assert set(v.to_json()) == {"check", "object", "lhs", "rhs"}
    assert json.loads(json.dumps(v.to_json()))["check"] == "triangle_right"
    assert check_triangle_right(get("PAIR2"))


def test_triangle_right_guard():
    big = pair_groupoid(4)
    with pytest.raises(GuardExceeded):
        check_triangle_right(big)


def test_properness_descends():
    for m in POOL.morphisms:
        assert is_proper_morphism(m)
        assert is_proper_couple(tg_on_morphism(m))
    for c in POOL.couples:
        assert is_proper_morphism(sa_on_couple(c))
