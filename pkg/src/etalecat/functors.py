"""Transformation groupoids, the universal groupoid, and the adjunction unit and counit."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import errors
from .errors import ValidationError
from .groupoid import (NO, CoupleMorphism, GroupoidHom, TopGroupoid, compose_couples,
                       identity_couple, identity_ghom, is_etale, is_homeomorphic_iso,
                       open_bisections, pullback, sa_on_couple, slice_action)
from .semigroup import (Action, ActionMorphism, InverseSemigroup, SemigroupHom,
                        compose_action_morphisms, identity_morphism, sp_hom, spectral_action)
from .topology import FiniteSpace, PartialMap, bits, is_homeomorphism, mask_of


class TransformationGroupoid:
    def __init__(self, action: Action, groupoid: TopGroupoid, class_index: dict, representative: tuple):
        self.action = action
        self.groupoid = groupoid
        self.class_index = class_index
        self.representative = representative

    def arrow(self, s: int, x: int) -> int:
        return self.class_index[(s, x)]

    def unit_to_point(self) -> PartialMap:
        """[e, x] -> x as a map from the unit space to the acting space."""
        G = self.groupoid
        vals = tuple(self.representative[u][1] for u in G.units)
        return PartialMap(G.unit_space, self.action.space, vals)

    def slice_of(self, s: int, subset: int) -> int:
        """The arrow set [s, U] for U inside the domain of s."""
        return mask_of(self.class_index[(s, x)] for x in bits(subset))


def same_germ(A: Action, s: int, t: int, x: int) -> bool:
    """(s, x) ~ (t, x): some idempotent e has x in D_e and se = te."""
    S = A.semigroup
    tab = S.table
    return any((A.domains[e] >> x) & 1 and tab[s][e] == tab[t][e] for e in S.idempotents)


def transformation_groupoid(A: Action) -> TransformationGroupoid:
    if "tg" in A.memo:
        return A.memo["tg"]
    S, X = A.semigroup, A.space
    tab, star = S.table, S.star
    classes: list[tuple[int, int]] = []  # representatives, found in (x, s) order
    member_of: dict[tuple[int, int], int] = {}
    for x in range(X.point_count):
        reps_here: list[int] = []
        for s in range(S.order):
            if not (A.domains[s] >> x) & 1:
                continue
            for c in reps_here:
                if same_germ(A, s, classes[c][0], x):
                    member_of[(s, x)] = c
                    break
            else:
                reps_here.append(len(classes))
                member_of[(s, x)] = len(classes)
                classes.append((s, x))
    order = sorted(range(len(classes)), key=lambda c: classes[c])
    renumber = {c: i for i, c in enumerate(order)}
    representative = tuple(classes[c] for c in order)
    class_index = {p: renumber[c] for p, c in member_of.items()}
    n = len(representative)
    alpha = [f.values for f in A.alpha]
    d, r, inv = [], [], []
    for s, x in representative:
        y = alpha[s][x]
        d.append(class_index[(tab[star[s]][s], x)])
        r.append(class_index[(tab[s][star[s]], y)])
        inv.append(class_index[(star[s], y)])
    table = [[NO] * n for _ in range(n)]
    for b, (s, x) in enumerate(representative):
        y = alpha[s][x]
        for a, (t, y2) in enumerate(representative):
            if y2 == y:
                table[a][b] = class_index[(tab[t][s], x)]
    units = sorted({class_index[(e, x)] for e in S.idempotents for x in bits(A.domains[e])})
    nb = X.nbhd
    family = [mask_of(class_index[(s, z)] for z in bits(nb[x])) for (s, x) in member_of]
    # [s, U] for open U inside D_s is the union of the [s, smallest nbhd of x], x in U
    topology = FiniteSpace.generated(n, family)
    name = f"TG({A.name})" if A.name else None
    G = TopGroupoid(d, r, inv, table, units, topology, labels=representative, name=name)
    tg = TransformationGroupoid(A, G, class_index, representative)
    A.memo["tg"] = tg
    return tg


def check_transformation_groupoid(tg: TransformationGroupoid) -> list[str]:
    """Problems with a constructed transformation groupoid (empty when all is well)."""
    A, G = tg.action, tg.groupoid
    S = A.semigroup
    problems = []
    if not is_etale(G):
        problems.append("not etale")
    if not is_homeomorphism(tg.unit_to_point()):
        problems.append("unit space is not homeomorphic to the acting space")
    # structure maps do not depend on the chosen representatives
    for (s, x), a in tg.class_index.items():
        y = A.alpha[s].values[x]
        if G.d[a] != tg.class_index[(S.table[S.star[s]][s], x)]:
            problems.append(f"d depends on representative at {(s, x)}")
        if G.inv[a] != tg.class_index[(S.star[s], y)]:
            problems.append(f"inverse depends on representative at {(s, x)}")
        for (t, y2), b in tg.class_index.items():
            if y2 == y and G.table[b][a] != tg.class_index[(S.table[t][s], x)]:
                problems.append(f"product depends on representatives at {(t, y2)}, {(s, x)}")
    return problems


def restricted_action(B: Action, theta: SemigroupHom, xi: PartialMap) -> Action:
    """S acting on the subspace D_xi of B's space through theta."""
    if theta.target != B.semigroup or xi.source != B.space:
        raise ValidationError("theta and xi must attach to the given action")
    sub, pts = B.space.subspace(xi.domain)
    pos = {p: i for i, p in enumerate(pts)}
    alpha = []
    for s in range(theta.source.order):
        f = B.alpha[theta.map[s]]
        vals: list[int | None] = [None] * sub.point_count
        for y in bits(f.domain):
            if y not in pos or f.values[y] not in pos:
                raise ValidationError(f"domain of {theta.map[s]} leaves the domain of xi", s)
            vals[pos[y]] = pos[f.values[y]]
        alpha.append(PartialMap(sub, sub, tuple(vals)))
    return Action(theta.source, sub, alpha)


def tg_on_morphism(m: ActionMorphism, validate=True) -> CoupleMorphism:
    A, B, theta, xi = m.source, m.target, m.theta, m.xi
    TA, TB = transformation_groupoid(A), transformation_groupoid(B)
    R = restricted_action(B, theta, xi)
    TR = transformation_groupoid(R)
    _, pts = B.space.subspace(xi.domain)
    phi, psi = [], []
    for s, yp in TR.representative:
        y = pts[yp]
        phi.append(TA.class_index[(s, xi.values[y])])
        psi.append(TB.class_index[(theta.map[s], y)])
    K = TR.groupoid
    return CoupleMorphism(TA.groupoid, TB.groupoid, GroupoidHom(K, TA.groupoid, phi, validate=validate),
                          GroupoidHom(K, TB.groupoid, psi, validate=validate), validate=validate)


def tg_representative_problems(m: ActionMorphism) -> list:
    """Pairs (s, y) whose images under the two legs differ from their class representative's."""
    A, B, theta, xi = m.source, m.target, m.theta, m.xi
    TA, TB = transformation_groupoid(A), transformation_groupoid(B)
    TR = transformation_groupoid(restricted_action(B, theta, xi))
    _, pts = B.space.subspace(xi.domain)
    bad = []
    for (s, yp), k in TR.class_index.items():
        s0, yp0 = TR.representative[k]
        y, y0 = pts[yp], pts[yp0]
        if TA.class_index[(s, xi.values[y])] != TA.class_index[(s0, xi.values[y0])]:
            bad.append(("phi", s, y))
        if TB.class_index[(theta.map[s], y)] != TB.class_index[(theta.map[s0], y0)]:
            bad.append(("psi", s, y))
    return bad


def tg_composition_witness(m2: ActionMorphism, m1: ActionMorphism) -> GroupoidHom:
    """The map ([s1, x2], [s2, x3]) -> [s1, x3] from the composite's pullback to TG(m2 m1)'s K."""
    c1, c2 = tg_on_morphism(m1), tg_on_morphism(m2)
    P = pullback(c1.psi, c2.phi)
    m = compose_action_morphisms(m2, m1)
    TR = transformation_groupoid(restricted_action(m.target, m.theta, m.xi))
    _, pts = m.target.space.subspace(m.xi.domain)
    pos = {p: i for i, p in enumerate(pts)}
    T1 = transformation_groupoid(restricted_action(m1.target, m1.theta, m1.xi))
    T2 = transformation_groupoid(restricted_action(m2.target, m2.theta, m2.xi))
    _, pts2 = m2.target.space.subspace(m2.xi.domain)
    img = []
    for k1, k2 in P.K.labels:
        s1, _ = T1.representative[k1]
        _, x3p = T2.representative[k2]
        img.append(TR.class_index[(s1, pos[pts2[x3p]])])
    return GroupoidHom(P.K, TR.groupoid, img)


def universal_groupoid(S: InverseSemigroup) -> TransformationGroupoid:
    return transformation_groupoid(spectral_action(S))


def gu_on_hom(theta: SemigroupHom) -> CoupleMorphism:
    return tg_on_morphism(sp_hom(theta))


# the adjunction

def unit(A: Action) -> ActionMorphism:
    """(s -> [s, D_s], [e, x] -> x) from A to the slice action of its transformation groupoid."""
    tg = transformation_groupoid(A)
    SA = slice_action(tg.groupoid)
    bis = SA.semigroup
    theta = SemigroupHom(A.semigroup, bis, [bis.index_of(tg.slice_of(s, A.domains[s]))
                                            for s in range(A.semigroup.order)])
    return ActionMorphism(A, SA, theta, tg.unit_to_point())


def omega(G: TopGroupoid) -> GroupoidHom:
    """[U, u] -> the arrow of U with domain u, from Bis G acting on the units back to G."""
    tg = transformation_groupoid(slice_action(G))
    bis = open_bisections(G)
    img = []
    for U_idx, up in tg.representative:
        u = G.units[up]
        hits = [g for g in bits(bis.labels[U_idx]) if G.d[g] == u]
        if len(hits) != 1:
            raise ValidationError("bisection does not meet the fibre in exactly one arrow", (U_idx, up))
        img.append(hits[0])
    w = GroupoidHom(tg.groupoid, G, img)
    if not is_homeomorphic_iso(w):
        raise ValidationError("omega is not a homeomorphic isomorphism")
    return w


def counit(G: TopGroupoid) -> CoupleMorphism:
    w = omega(G)
    return CoupleMorphism(w.source, G, identity_ghom(w.source), w)


@dataclass
class Verdict:
    """Outcome of one law check; falsy on failure, with the two sides recorded."""
    check: str
    object: Any
    ok: bool
    lhs: Any = None
    rhs: Any = None
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"check": self.check, "object": self.object, "lhs": self.lhs, "rhs": self.rhs}


def describe(x) -> Any:
    if isinstance(x, CoupleMorphism):
        return sorted([list(p) for p in x.canon])
    if isinstance(x, ActionMorphism):
        return {"theta": list(x.theta.map), "xi": [v for v in x.xi.values]}
    if isinstance(x, (Action, TopGroupoid, InverseSemigroup)):
        return x.name or repr(x)
    return repr(x)


def _compare(check, obj, lhs, rhs) -> Verdict:
    ok = lhs == rhs
    return Verdict(check, describe(obj), ok, None if ok else describe(lhs), None if ok else describe(rhs))


def check_triangle_left(A: Action, unit_fn=unit, counit_fn=counit) -> Verdict:
    tg = transformation_groupoid(A)
    lhs = compose_couples(counit_fn(tg.groupoid), tg_on_morphism(unit_fn(A)))
    return _compare("triangle_left", A, lhs, identity_couple(tg.groupoid))


def check_triangle_right(G: TopGroupoid, unit_fn=unit, counit_fn=counit) -> Verdict:
    errors.guard(G.arrow_count, errors.current_guards().triangle_max_arrows, "arrows for triangle check")
    SA = slice_action(G)
    lhs = compose_action_morphisms(sa_on_couple(counit_fn(G)), unit_fn(SA))
    return _compare("triangle_right", G, lhs, identity_morphism(SA))


def check_unit_naturality(m: ActionMorphism, unit_fn=unit) -> Verdict:
    lhs = compose_action_morphisms(unit_fn(m.target), m)
    rhs = compose_action_morphisms(sa_on_couple(tg_on_morphism(m)), unit_fn(m.source))
    return _compare("unit_naturality", m, lhs, rhs)


def check_counit_naturality(c: CoupleMorphism, counit_fn=counit) -> Verdict:
    lhs = compose_couples(counit_fn(c.target), tg_on_morphism(sa_on_couple(c)))
    rhs = compose_couples(c, counit_fn(c.source))
    return _compare("counit_naturality", c, lhs, rhs)
