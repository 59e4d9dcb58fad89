"""Law-checking engine, test pools and a brute-force enumerator of small inverse semigroups.

Every checker returns a CheckReport.  Failures are data: each one is a dict
{"check", "object", "lhs", "rhs"} that can be replayed from the pool and seed.
Guard overruns are not failures and propagate as GuardExceeded.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from . import catalog, errors
from .errors import GuardExceeded
from .functors import (Verdict, check_counit_naturality, check_transformation_groupoid, check_triangle_left,
                       check_triangle_right, check_unit_naturality, counit, describe, gu_on_hom, tg_composition_witness,
                       tg_on_morphism, tg_representative_problems, transformation_groupoid, unit, universal_groupoid)
from .groupoid import (CoupleMorphism, GroupoidHom, compose_couples, couple_from_image,
                       enumerate_couples, hom_image, hom_preimage, identity_couple, is_homeomorphic_iso,
                       is_proper_couple, open_bisections, pullback, relabel_couple, sa_on_couple, slice_action,
                       units_open)
from .semigroup import (ActionMorphism, SemigroupHom, compose_action_morphisms, compose_homs,
                        enumerate_action_morphisms, enumerate_homs, identity_hom, identity_morphism,
                        is_proper_morphism, sp_hom, spectral_action, validate_inverse_semigroup)
from .star_algebra import (StarHom, characteristic, check_paterson_naturality, compose_star_homs, cstar_on_couple,
                           groupoid_algebra, identity_star_hom, is_isomorphism, paterson_iso, pi_psi,
                           semigroup_algebra, sigma_phi, validate_star_hom)
from .topology import PartialMap, bits, is_discrete


# enumeration of small inverse semigroups

def associative_tables(n: int):
    """Every associative n x n table, by filling cells row-major and pruning on partial triples."""
    cells = n * n
    T = [-1] * cells

    def consistent():
        for x in range(n):
            for y in range(n):
                xy = T[x * n + y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = T[y * n + z]
                    if yz < 0:
                        continue
                    left, right = T[xy * n + z], T[x * n + yz]
                    if left >= 0 and right >= 0 and left != right:
                        return False
        return True

    def go(i):
        if i == cells:
            yield tuple(tuple(T[r * n:(r + 1) * n]) for r in range(n))
            return
        for v in range(n):
            T[i] = v
            if consistent():
                yield from go(i + 1)
        T[i] = -1

    yield from go(0)


def _is_inverse_table(table) -> bool:
    try:
        validate_inverse_semigroup([list(r) for r in table])
    except errors.ValidationError:
        return False
    return True


def relabel_table(table, perm):
    """Table of the same semigroup after renaming element a to perm[a]."""
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[table[a][b]]
    return tuple(tuple(r) for r in out)


def canonical_table(table):
    n = len(table)
    return min(relabel_table(table, p) for p in permutations(range(n)))


def enumerate_inverse_semigroups(n: int, dedup: str = "canonical"):
    """Inverse semigroups of order n up to isomorphism, as validated InverseSemigroup objects.

    dedup="canonical" keeps the lexicographically least relabelled table of each class;
    dedup="orbit" keeps the first table met and strikes out its whole permutation orbit.
    """
    errors.guard(n, errors.current_guards().enum_max_order, "semigroup order")
    if n < 1:
        return []
    tables = [t for t in associative_tables(n) if _is_inverse_table(t)]
    if dedup == "canonical":
        reps = sorted({canonical_table(t) for t in tables})
    elif dedup == "orbit":
        seen: set = set()
        reps = []
        for t in tables:
            if t in seen:
                continue
            reps.append(t)
            seen.update(relabel_table(t, p) for p in permutations(range(n)))
    else:
        raise ValueError(f"unknown dedup method {dedup!r}")
    return [validate_inverse_semigroup([list(r) for r in t], name=f"S{n}.{i}") for i, t in enumerate(reps)]


# reports

@dataclass
class CheckReport:
    check: str
    seed: int | None = None
    instances: int = 0
    failures: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)  # instances per check name

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def add(self, verdict: Verdict):
        self.instances += 1
        self.counts[verdict.check] = self.counts.get(verdict.check, 0) + 1
        if not verdict:
            self.failures.append(verdict.to_json())

    def run(self, check: str, obj, fn):
        """Run fn() -> Verdict | bool, recording exceptions as failures."""
        try:
            out = fn()
        except GuardExceeded:
            raise
        except Exception as exc:  # a broken construction is a failed law
            out = Verdict(check, describe(obj), False, "error", f"{type(exc).__name__}: {exc}")
        if not isinstance(out, Verdict):
            out = Verdict(check, describe(obj), bool(out), None if out else False, None if out else True)
        self.add(out)

    def to_json(self) -> dict:
        return {"check": self.check, "seed": self.seed, "instances": self.instances, "failures": self.failures}


def _same(check, obj, lhs, rhs) -> Verdict:
    ok = lhs == rhs
    if ok:
        return Verdict(check, describe(obj), True)
    show = (lambda x: x.to_json()) if isinstance(lhs, StarHom) else describe
    return Verdict(check, describe(obj), False, show(lhs), show(rhs))


# pools

POOL_SEMIGROUPS = ["TRIV", "Z2", "Z3", "E2", "CHAIN(3)", "CHAIN(4)", "I1", "I2", "E(I2)"]
POOL_ACTIONS = ["TRIVACT", "SWAP", "I2NAT", "OX(1)", "OX(2)", "SP(Z2)", "SP(Z3)", "SP(E2)", "SP(CHAIN(3))",
                "SP(I2)"]
POOL_GROUPOIDS = ["Z2G", "Z3G", "PAIR2", "SPACE(1)", "SPACE(2)"]


@dataclass
class Pool:
    seed: int
    semigroups: list
    homs: list
    actions: list
    morphisms: list
    groupoids: list
    couples: list


def _fill(rng, exhaustive, extra, cap):
    """Everything in exhaustive, then a seeded sample of extra up to cap."""
    room = max(cap - len(exhaustive), 0)
    if len(extra) > room:
        extra = [extra[i] for i in sorted(rng.sample(range(len(extra)), room))]
    return exhaustive + extra


@lru_cache(maxsize=8)
def default_pool(seed: int = 0) -> Pool:
    """Catalog objects plus morphisms between them.

    Morphisms between objects of order at most 3 are all included; the rest are
    sampled with the seed, so the pool stays under the morphism guard.
    """
    rng = random.Random(seed)
    cap = errors.current_guards().pool_max_morphisms
    sgs = [catalog.get(n) for n in POOL_SEMIGROUPS]
    small, big = [], []
    for S in sgs:
        for T in sgs:
            hs = enumerate_homs(S, T)
            (small if max(S.order, T.order) <= 3 else big).extend(hs)
    homs = _fill(rng, small, big, cap)
    for h in (catalog.get("E2->Z2"), catalog.get("E(I2)->I2")):
        if h not in homs:
            homs.append(h)

    acts = [catalog.get(n) for n in POOL_ACTIONS]
    small, big = [], []
    for A in acts:
        for B in acts:
            ms = enumerate_action_morphisms(A, B)
            size = max(A.semigroup.order, B.semigroup.order, A.space.point_count, B.space.point_count)
            (small if size <= 3 else big).extend(ms)
    morphisms = _fill(rng, small, big, cap)

    gps = [catalog.get(n) for n in POOL_GROUPOIDS]
    couples = []
    for G in gps:
        for H in gps:
            couples.extend(enumerate_couples(G, H))
    return Pool(seed, sgs, homs, acts, morphisms, gps, couples)


def composable_pairs(morphisms):
    """All (m2, m1) with m2 after m1 defined."""
    by_source: dict = {}
    for m in morphisms:
        by_source.setdefault(m.source, []).append(m)
    return [(m2, m1) for m1 in morphisms for m2 in by_source.get(m1.target, [])]


def composable_triples(morphisms):
    by_source: dict = {}
    for m in morphisms:
        by_source.setdefault(m.source, []).append(m)
    return [(m3, m2, m1) for m1 in morphisms for m2 in by_source.get(m1.target, [])
            for m3 in by_source.get(m2.target, [])]


def _sample(rng, items, k):
    if len(items) <= k:
        return list(items)
    return [items[i] for i in sorted(rng.sample(range(len(items)), k))]


# categories

def check_category(cat: str, pool: Pool | None = None, compose=None, triples: int = 150, seed: int = 0) -> CheckReport:
    """Identity and associativity laws in ISA (action morphisms) or EG (couple morphisms)."""
    pool = pool or default_pool(seed)
    rng = random.Random(seed)
    if cat == "ISA":
        arrows, ident = pool.morphisms, lambda A: identity_morphism(A)
        compose = compose or compose_action_morphisms
    elif cat == "EG":
        arrows, ident = pool.couples, identity_couple
        compose = compose or compose_couples
    else:
        raise ValueError(f"unknown category {cat!r}")
    rep = CheckReport(f"category-{cat.lower()}", seed)
    for m in arrows:
        rep.run("left_identity", m, lambda m=m: _same("left_identity", m, compose(ident(m.target), m), m))
        rep.run("right_identity", m, lambda m=m: _same("right_identity", m, compose(m, ident(m.source)), m))
    for m3, m2, m1 in _sample(rng, composable_triples(arrows), triples):
        rep.run("associativity", [m3, m2, m1],
                lambda m3=m3, m2=m2, m1=m1: _same("associativity", [describe(m3), describe(m2), describe(m1)],
                                                  compose(compose(m3, m2), m1), compose(m3, compose(m2, m1))))
    return rep


# functors

def _functor_setup(name, pool):
    """(arrows, objects, functor, compose source, compose target, identity source, identity target)."""
    if name == "SP":
        return (pool.homs, pool.semigroups, sp_hom, compose_homs, compose_action_morphisms,
                identity_hom, lambda S: identity_morphism(spectral_action(S)))
    if name == "GU":
        return (pool.homs, pool.semigroups, gu_on_hom, compose_homs, compose_couples,
                identity_hom, lambda S: identity_couple(universal_groupoid(S).groupoid))
    if name == "TG":
        return (pool.morphisms, pool.actions, tg_on_morphism, compose_action_morphisms, compose_couples,
                identity_morphism, lambda A: identity_couple(transformation_groupoid(A).groupoid))
    if name == "SA":
        return (pool.couples, pool.groupoids, sa_on_couple, compose_couples, compose_action_morphisms,
                identity_couple, lambda G: identity_morphism(slice_action(G)))
    if name == "CSTAR":
        gps = [G for G in pool.groupoids if is_discrete(G.topology)]
        cs = [c for c in pool.couples if c.source in gps and c.target in gps and is_proper_couple(c)]
        return (cs, gps, cstar_on_couple, compose_couples, compose_star_homs,
                identity_couple, lambda G: identity_star_hom(groupoid_algebra(G)))
    raise ValueError(f"unknown functor {name!r}")


def check_functor(name: str, pool: Pool | None = None, functor=None, pairs: int = 100, seed: int = 0) -> CheckReport:
    """Identity and composition preservation, plus the functor-specific side conditions."""
    pool = pool or default_pool(seed)
    rng = random.Random(seed)
    arrows, objects, F, comp_src, comp_tgt, id_src, id_tgt = _functor_setup(name, pool)
    F = functor or F
    rep = CheckReport(f"functor-{name.lower()}", seed)
    for X in objects:
        rep.run("preserves_identity", X, lambda X=X: _same("preserves_identity", X, F(id_src(X)), id_tgt(X)))
    chosen = _sample(rng, composable_pairs(arrows), pairs)
    for m2, m1 in chosen:
        obj = [describe(m2), describe(m1)]
        rep.run("preserves_composition", obj,
                lambda m2=m2, m1=m1, obj=obj: _same("preserves_composition", obj, F(comp_src(m2, m1)),
                                                    comp_tgt(F(m2), F(m1))))
    if name == "SP":
        for h in arrows:
            rep.run("sp_proper", h, lambda h=h: is_proper_morphism(F(h)))
    if name == "TG":
        for m in arrows:
            rep.run("tg_representatives", m, lambda m=m: not tg_representative_problems(m))
        for m2, m1 in chosen:
            rep.run("tg_witness", [describe(m2), describe(m1)], lambda m2=m2, m1=m1: _tg_witness_ok(m2, m1, F))
    if name in ("SA", "CSTAR"):
        for c in arrows:
            perm = list(range(c.K.arrow_count))
            rng.shuffle(perm)
            other = relabel_couple(c, perm)
            canon = couple_from_image(c.source, c.target, sorted(c.canon))
            rep.run("representative_independence", c,
                    lambda c=c, o=other, k=canon: _same("representative_independence", c, F(c), F(o)) and
                    _same("representative_independence", c, F(c), F(k)))
    if name == "CSTAR":
        for c in arrows:
            rep.run("cstar_is_star_hom", c, lambda c=c: validate_star_hom(F(c)))
    return rep


def _tg_witness_ok(m2, m1, F) -> bool:
    comp = compose_couples(F(m2), F(m1))
    whole = F(compose_action_morphisms(m2, m1))
    w = tg_composition_witness(m2, m1)
    return (is_homeomorphic_iso(w)
            and all(whole.phi.map[w.map[k]] == comp.phi.map[k] and whole.psi.map[w.map[k]] == comp.psi.map[k]
                    for k in range(comp.K.arrow_count)))


# adjunction and Paterson

def adjunction_actions(pool: Pool):
    names = list(dict.fromkeys(catalog.ACTIONS + [a.name for a in pool.actions]))
    return [catalog.get(n) for n in names]


def adjunction_groupoids(pool: Pool):
    limit = errors.current_guards().triangle_max_arrows
    gps = [catalog.get(n) for n in catalog.GROUPOIDS] + list(pool.groupoids)
    out = []
    for G in gps:
        if G.arrow_count <= limit and G not in out:
            out.append(G)
    return out


def check_adjunction(pool: Pool | None = None, unit_fn=unit, counit_fn=counit, seed: int = 0) -> CheckReport:
    """Both triangle identities and naturality of unit and counit."""
    pool = pool or default_pool(seed)
    rep = CheckReport("adjunction", seed)
    for A in adjunction_actions(pool):
        rep.run("triangle_left", A, lambda A=A: check_triangle_left(A, unit_fn, counit_fn))
    for G in adjunction_groupoids(pool):
        rep.run("triangle_right", G, lambda G=G: check_triangle_right(G, unit_fn, counit_fn))
    for m in pool.morphisms:
        rep.run("unit_naturality", m, lambda m=m: check_unit_naturality(m, unit_fn))
    for c in pool.couples:
        rep.run("counit_naturality", c, lambda c=c: check_counit_naturality(c, counit_fn))
    return rep


def check_paterson(pool: Pool | None = None, iota=paterson_iso, seed: int = 0) -> CheckReport:
    pool = pool or default_pool(seed)
    rep = CheckReport("paterson", seed)
    for S in pool.semigroups:
        rep.run("paterson_iso", S, lambda S=S: _paterson_iso_ok(S, iota))
    for h in pool.homs:
        rep.run("paterson_naturality", h, lambda h=h: check_paterson_naturality(h, iota))
    return rep


def _paterson_iso_ok(S, iota) -> Verdict:
    m = iota(S)
    ok = is_isomorphism(m) and groupoid_algebra(universal_groupoid(S).groupoid).dim == S.order
    return Verdict("paterson_iso", describe(S), ok, None if ok else m.to_json(), None if ok else S.order)


# structural lemmas

def pullback_lemma_one(psi1: GroupoidHom, phi2: GroupoidHom) -> Verdict:
    """phi2^-1(psi1(U)) == psi_tilde(phi_tilde^-1(U)) for every subset U of K1."""
    P = pullback(psi1, phi2)
    for U in range(1 << psi1.source.arrow_count):
        lhs = hom_preimage(phi2, hom_image(psi1, U))
        rhs = hom_image(P.psi_tilde, hom_preimage(P.phi_tilde, U))
        if lhs != rhs:
            return Verdict("pullback_lemma_one", U, False, sorted(bits(lhs)), sorted(bits(rhs)))
    return Verdict("pullback_lemma_one", None, True)


def pullback_lemma_two(psi1: GroupoidHom, phi2: GroupoidHom) -> Verdict:
    """(psi1|U)^-1 after phi2 equals phi_tilde after (psi_tilde restricted over U)^-1, per open bisection U."""
    P = pullback(psi1, phi2)
    K1 = psi1.source
    for U in open_bisections(K1).labels:
        inv_psi = {}
        for a in bits(U):
            if psi1.map[a] in inv_psi:
                return Verdict("pullback_lemma_two", U, False, "psi not injective on U", None)
            inv_psi[psi1.map[a]] = a
        lhs = {b: inv_psi[h] for b, h in enumerate(phi2.map) if h in inv_psi}
        over = [k for k in bits(hom_preimage(P.phi_tilde, U))]
        inv_tilde = {}
        for k in over:
            b = P.psi_tilde.map[k]
            if b in inv_tilde:
                return Verdict("pullback_lemma_two", U, False, None, "psi_tilde not injective over U")
            inv_tilde[b] = k
        rhs = {b: P.phi_tilde.map[k] for b, k in inv_tilde.items()}
        if lhs != rhs:
            return Verdict("pullback_lemma_two", U, False, sorted(lhs.items()), sorted(rhs.items()))
    return Verdict("pullback_lemma_two", None, True)


def interchange(c1: CoupleMorphism, c2: CoupleMorphism) -> Verdict:
    """pi along psi_tilde after sigma along phi_tilde equals sigma_phi2 after pi_psi1."""
    P = pullback(c1.psi, c2.phi)
    lhs = compose_star_homs(pi_psi(P.psi_tilde, check=False), sigma_phi(P.phi_tilde, check=False))
    rhs = compose_star_homs(sigma_phi(c2.phi, check=False), pi_psi(c1.psi, check=False))
    return _same("interchange", [describe(c2), describe(c1)], lhs, rhs)


def characteristic_lemma(c: CoupleMorphism) -> Verdict:
    """C*(c) sends the indicator of a bisection C to the indicator of psi(phi^-1(C))."""
    h = cstar_on_couple(c)
    for C in open_bisections(c.source).labels:
        got = h.apply(characteristic(h.source, C))
        want = characteristic(h.target, hom_image(c.psi, hom_preimage(c.phi, C)))
        if got != want:
            return Verdict("characteristic_lemma", describe(c), False, sorted(got), sorted(want))
    return Verdict("characteristic_lemma", describe(c), True)


def check_lemmas(pool: Pool | None = None, pairs: int = 80, seed: int = 0) -> CheckReport:
    pool = pool or default_pool(seed)
    rng = random.Random(seed)
    rep = CheckReport("lemmas", seed)
    gps = adjunction_groupoids(pool)
    for G in gps:
        rep.run("units_open", G, lambda G=G: units_open(G))
    for A in adjunction_actions(pool):
        rep.run("transformation_groupoid", A, lambda A=A: not check_transformation_groupoid(transformation_groupoid(A)))
    chosen = _sample(rng, composable_pairs(pool.couples), pairs)
    for c2, c1 in chosen:
        obj = [describe(c2), describe(c1)]
        rep.run("pullback_lemma_one", obj, lambda c2=c2, c1=c1: pullback_lemma_one(c1.psi, c2.phi))
        rep.run("pullback_lemma_two", obj, lambda c2=c2, c1=c1: pullback_lemma_two(c1.psi, c2.phi))
        rep.run("interchange", obj, lambda c2=c2, c1=c1: interchange(c1, c2))
    for c in pool.couples:
        if is_proper_couple(c):
            rep.run("characteristic_lemma", c, lambda c=c: characteristic_lemma(c))
    return rep


# couple equivalence: canon against the exhaustive oracle

def generated_couples(pool: Pool | None = None, max_arrows: int = 6, seed: int = 0) -> list[CoupleMorphism]:
    """Pool couples, relabelled copies, and pullback composites, all with |K| <= max_arrows."""
    pool = pool or default_pool(seed)
    rng = random.Random(seed)
    out = [c for c in pool.couples if c.K.arrow_count <= max_arrows]
    for c in list(out):
        perm = list(range(c.K.arrow_count))
        rng.shuffle(perm)
        out.append(relabel_couple(c, perm))
    for c2, c1 in composable_pairs(pool.couples):
        comp = compose_couples(c2, c1)
        if comp.K.arrow_count <= max_arrows:
            out.append(comp)
    return out


def equivalence_pairs(couples) -> list:
    return [(a, b) for i, a in enumerate(couples) for b in couples[i + 1:]
            if a.source == b.source and a.target == b.target]


def check_equivalence_decision(pairs, decide=None) -> CheckReport:
    """canon equality must agree with the search for an isomorphism over both legs."""
    from .groupoid import couples_equivalent, find_equivalence
    decide = decide or couples_equivalent
    rep = CheckReport("couple-equivalence")
    for a, b in pairs:
        rep.run("canon_vs_search", [describe(a), describe(b)],
                lambda a=a, b=b: _same("canon_vs_search", [describe(a), describe(b)],
                                       decide(a, b), find_equivalence(a, b) is not None))
    return rep


# mutation fixtures: each breaks one construction and must make its checker fail

def _flipped_isa_compose(m2, m1):
    # xi2 after xi1 instead of xi1 after xi2
    vals = tuple(None if v is None or v >= len(m2.xi.values) else m2.xi.values[v] for v in m1.xi.values)
    xi = PartialMap(m1.xi.source, m2.xi.target, vals)
    return ActionMorphism(m1.source, m2.target, compose_homs(m2.theta, m1.theta), xi, validate=False)


def _inverted_leg_compose(c2, c1):
    good = compose_couples(c2, c1, validate=False)
    H = good.target
    psi = GroupoidHom(good.K, H, [H.inv[h] for h in good.psi.map], validate=False)
    return CoupleMorphism(good.source, H, good.phi, psi, validate=False)


def _sp_shrunk_domain(theta):
    m = sp_hom(theta)
    vals = list(m.xi.values)
    dom = [i for i, v in enumerate(vals) if v is not None]
    if dom:
        vals[dom[0]] = None
    return ActionMorphism(m.source, m.target, m.theta, PartialMap(m.xi.source, m.xi.target, tuple(vals)),
                          validate=False)


def _tg_phi_uses_idempotent(m):
    good = tg_on_morphism(m)
    A = m.source
    TA = transformation_groupoid(A)
    TR_K = good.K
    S = A.semigroup
    phi = []
    for k in range(TR_K.arrow_count):
        s, x = TA.representative[good.phi.map[k]]
        e = S.table[S.star[s]][s]
        phi.append(TA.class_index[(e, x)])
    return CoupleMorphism(good.source, good.target, GroupoidHom(TR_K, good.source, phi, validate=False),
                          good.psi, validate=False)


def _sa_inverted(c):
    m = sa_on_couple(c)
    SH = m.target.semigroup
    theta = SemigroupHom(m.theta.source, SH, [SH.star[t] for t in m.theta.map], validate=False)
    return ActionMorphism(m.source, m.target, theta, m.xi, validate=False)


def _cstar_with_involution(c):
    h = cstar_on_couple(c)
    inv = h.source.star
    cols = [[h.matrix[i][inv[j]] for j in range(h.source.dim)] for i in range(h.target.dim)]
    return StarHom(h.source, h.target, cols)


def _unit_with_star(A):
    good = unit(A)
    tg = transformation_groupoid(A)
    bis = good.target.semigroup
    S = A.semigroup
    theta = SemigroupHom(S, bis, [bis.index_of(tg.slice_of(S.star[s], A.domains[S.star[s]]))
                                  for s in range(S.order)], validate=False)
    return ActionMorphism(A, good.target, theta, good.xi, validate=False)


def _paterson_with_star(S):
    tg = universal_groupoid(S)
    A = tg.action
    QS, QG = semigroup_algebra(S), groupoid_algebra(tg.groupoid)
    from .star_algebra import zero_one_matrix
    ones = [(tg.class_index[(S.star[s], z)], s) for s in range(S.order) for z in bits(A.domains[S.star[s]])]
    return StarHom(QS, QG, zero_one_matrix(QG.dim, QS.dim, ones))


MUTATIONS = {
    "isa-flipped-composition": lambda pool: check_category("ISA", pool, compose=_flipped_isa_compose),
    "eg-inverted-leg": lambda pool: check_category("EG", pool, compose=_inverted_leg_compose),
    "sp-shrunk-domain": lambda pool: check_functor("SP", pool, functor=_sp_shrunk_domain),
    "tg-phi-idempotent": lambda pool: check_functor("TG", pool, functor=_tg_phi_uses_idempotent),
    "sa-inverse-bisection": lambda pool: check_functor("SA", pool, functor=_sa_inverted),
    "cstar-involution": lambda pool: check_functor("CSTAR", pool, functor=_cstar_with_involution),
    "adjunction-unit-star": lambda pool: check_adjunction(pool, unit_fn=_unit_with_star),
    "paterson-star": lambda pool: check_paterson(pool, iota=_paterson_with_star),
}


SUITES = {
    "category-isa": lambda pool, seed: check_category("ISA", pool, seed=seed),
    "category-eg": lambda pool, seed: check_category("EG", pool, seed=seed),
    "functor-sp": lambda pool, seed: check_functor("SP", pool, seed=seed),
    "functor-tg": lambda pool, seed: check_functor("TG", pool, seed=seed),
    "functor-sa": lambda pool, seed: check_functor("SA", pool, seed=seed),
    "functor-cstar": lambda pool, seed: check_functor("CSTAR", pool, seed=seed),
    "functor-gu": lambda pool, seed: check_functor("GU", pool, seed=seed),
    "adjunction": lambda pool, seed: check_adjunction(pool, seed=seed),
    "paterson": lambda pool, seed: check_paterson(pool, seed=seed),
    "lemmas": lambda pool, seed: check_lemmas(pool, seed=seed),
}


def run_suite(name: str, seed: int = 0) -> CheckReport:
    return SUITES[name](default_pool(seed), seed)
