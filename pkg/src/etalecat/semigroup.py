"""Inverse semigroups, their actions on finite spaces, and action morphisms."""
from __future__ import annotations

from itertools import permutations, product

import numpy as np

from . import errors
from .errors import (EndpointMismatch, NoUniqueInverse, NotAssociative,
                     SpaceMismatch, ValidationError)
from .topology import (FiniteSpace, PartialMap, bits, is_discrete, is_partial_homeomorphism,
                       is_proper, mask_of, partial_homeos, preimage)


class InverseSemigroup:
    """Validated Cayley table.  Build with validate_inverse_semigroup."""

    def __init__(self, table, star, labels=None, name=None):
        self.table = table
        self.star = star
        self.labels = labels
        self.name = name
        self.idempotents = tuple(s for s in range(len(table)) if table[s][s] == s)
        self.e_pos = {e: i for i, e in enumerate(self.idempotents)}
        self.memo: dict = {}
        self._hash = hash((table, labels))

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def label(self, s: int):
        return self.labels[s] if self.labels is not None else s

    def index_of(self, label) -> int:
        if self.labels is None:
            return label
        if "label_index" not in self.memo:
            self.memo["label_index"] = {lab: i for i, lab in enumerate(self.labels)}
        return self.memo["label_index"][label]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, InverseSemigroup) or self._hash != other._hash:
            return False
        return self.table == other.table and self.labels == other.labels

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"InverseSemigroup({self.name or self.order})"


def associativity_witness(table) -> tuple[int, int, int] | None:
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    left = t[t]  # left[a, b, c] = (ab)c
    right = t[np.arange(n)[:, None, None], t[None, :, :]]  # a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def generalized_inverses(table, s: int) -> list[int]:
    return [t for t in range(len(table))
            if table[table[s][t]][s] == s and table[table[t][s]][t] == t]


def validate_inverse_semigroup(table, labels=None, name=None, star=None) -> InverseSemigroup:
    """Check associativity and unique generalized inverses.

    When a candidate star is supplied, it is checked to be a generalized
    inverse and uniqueness follows from idempotents commuting (a regular
    semigroup with commuting idempotents is inverse).
    """
    table = tuple(tuple(int(v) for v in row) for row in table)
    n = len(table)
    if n == 0:
        raise ValidationError("the empty semigroup is not allowed")
    for row in table:
        if len(row) != n or any(not 0 <= v < n for v in row):
            raise ValidationError("table must be square with entries in range")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValidationError("labels must be distinct, one per element")
    w = associativity_witness(table)
    if w is not None:
        raise NotAssociative(f"(st)u != s(tu) at {w}", w)
    if star is None:
        star = []
        for s in range(n):
            cands = generalized_inverses(table, s)
            if len(cands) != 1:
                raise NoUniqueInverse(f"element {s} has {len(cands)} generalized inverses", s)
            star.append(cands[0])
    else:
        star = [int(v) for v in star]
        for s, t in enumerate(star):
            if table[table[s][t]][s] != s or table[table[t][s]][t] != t:
                raise NoUniqueInverse(f"supplied inverse of {s} is not a generalized inverse", s)
    S = InverseSemigroup(table, tuple(star), labels, name)
    for e in S.idempotents:
        for f in S.idempotents:
            if table[e][f] != table[f][e]:
                raise ValidationError("idempotents do not commute", (e, f))
    return S


def idempotents(S: InverseSemigroup) -> tuple[int, ...]:
    return S.idempotents


def leq(S: InverseSemigroup, e: int, f: int) -> bool:
    """Natural order on idempotents: e <= f iff ef = e."""
    return S.table[e][f] == e


class SemigroupHom:
    def __init__(self, source: InverseSemigroup, target: InverseSemigroup, mapping, validate=True):
        self.source = source
        self.target = target
        self.map = tuple(mapping)
        if validate:
            if len(self.map) != source.order or any(not 0 <= v < target.order for v in self.map):
                raise ValidationError("hom must assign every element a target element")
            ts, tt = source.table, target.table
            for s in range(source.order):
                for t in range(source.order):
                    if self.map[ts[s][t]] != tt[self.map[s]][self.map[t]]:
                        raise ValidationError("map does not preserve products", (s, t))

    def __call__(self, s: int) -> int:
        return self.map[s]

    def __eq__(self, other):
        return (isinstance(other, SemigroupHom) and self.map == other.map
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"SemigroupHom({self.source!r}->{self.target!r}, {self.map})"


def identity_hom(S: InverseSemigroup) -> SemigroupHom:
    return SemigroupHom(S, S, range(S.order), validate=False)


def compose_homs(h2: SemigroupHom, h1: SemigroupHom) -> SemigroupHom:
    if h1.target != h2.source:
        raise EndpointMismatch("hom endpoints do not match")
    return SemigroupHom(h1.source, h2.target, (h2.map[v] for v in h1.map), validate=False)


def enumerate_homs(S: InverseSemigroup, T: InverseSemigroup, limit: int | None = None) -> list[SemigroupHom]:
    """All semigroup homomorphisms S -> T by backtracking."""
    if limit is None:
        limit = errors.current_guards().max_items
    n, tab, ttab = S.order, S.table, T.table
    checks: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            checks[max(a, b, tab[a][b])].append((a, b))
    found = []
    img = [0] * n

    def go(i):
        if i == n:
            found.append(SemigroupHom(S, T, img, validate=False))
            if len(found) > limit:
                raise errors.GuardExceeded(f"more than {limit} homomorphisms")
            return
        for v in range(T.order):
            img[i] = v
            if all(img[tab[a][b]] == ttab[img[a]][img[b]] for a, b in checks[i]):
                go(i + 1)

    go(0)
    return found


def find_isomorphism(S: InverseSemigroup, T: InverseSemigroup) -> SemigroupHom | None:
    if S.order != T.order:
        return None
    n = S.order
    for perm in permutations(range(n)):
        if all(perm[S.table[a][b]] == T.table[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return SemigroupHom(S, T, perm, validate=False)
    return None


def i_of(space: FiniteSpace, name=None) -> InverseSemigroup:
    """Inverse semigroup of all partial homeomorphisms of space under composition."""
    maps = partial_homeos(space)
    errors.guard(len(maps) ** 2, errors.current_guards().max_items * 10, "I(X) table")
    index = {f.values: i for i, f in enumerate(maps)}
    table = []
    for f in maps:
        row = []
        for g in maps:
            vals = tuple(None if y is None else f.values[y] for y in g.values)
            row.append(index[vals])
        table.append(row)
    return validate_inverse_semigroup(table, labels=maps, name=name)


class Action:
    """Action of an inverse semigroup on a finite space by partial homeomorphisms."""

    def __init__(self, semigroup: InverseSemigroup, space: FiniteSpace, alpha, name=None, validate=True):
        self.semigroup = semigroup
        self.space = space
        self.alpha = tuple(alpha)
        self.name = name
        self.domains = tuple(f.domain for f in self.alpha)
        self.memo: dict = {}
        self._hash = hash((semigroup, space, tuple(f.values for f in self.alpha)))
        if validate:
            self._validate()

    def _validate(self):
        S, X = self.semigroup, self.space
        if len(self.alpha) != S.order:
            raise ValidationError("one partial map per semigroup element is required")
        for s, f in enumerate(self.alpha):
            if f.source != X or f.target != X:
                raise SpaceMismatch(f"alpha_{s} is not a partial map of the acting space", s)
            if not is_partial_homeomorphism(f):
                raise ValidationError(f"alpha_{s} is not a partial homeomorphism", s)
        vals = [f.values for f in self.alpha]
        for s in range(S.order):
            for t in range(S.order):
                comp = tuple(None if y is None else vals[s][y] for y in vals[t])
                if comp != vals[S.table[s][t]]:
                    raise ValidationError("alpha_st differs from alpha_s after alpha_t", (s, t))
        cover = 0
        for d in self.domains:
            cover |= d
        if cover != X.full:
            raise ValidationError("action is degenerate: domains do not cover the space", X.full & ~cover)

    def domain(self, s: int) -> int:
        return self.domains[s]

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, Action) and self._hash == other._hash
                and self.semigroup == other.semigroup and self.space == other.space
                and all(f.values == g.values for f, g in zip(self.alpha, other.alpha)))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Action({self.name or self.semigroup!r})"


class ActionMorphism:
    """Pair (theta, xi): theta maps semigroups forward, xi maps spaces backward."""

    def __init__(self, source: Action, target: Action, theta: SemigroupHom, xi: PartialMap, validate=True):
        self.source = source
        self.target = target
        self.theta = theta
        self.xi = xi
        if validate:
            problem = action_morphism_problem(self)
            if problem is not None:
                raise problem

    def __eq__(self, other):
        return (isinstance(other, ActionMorphism) and self.theta.map == other.theta.map
                and self.xi.values == other.xi.values
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash((self.theta.map, self.xi.values))

    def __repr__(self):
        return f"ActionMorphism({self.source!r}->{self.target!r}, theta={self.theta.map}, xi={self.xi.values})"


def action_morphism_problem(m: ActionMorphism) -> ValidationError | None:
    A, B, theta, xi = m.source, m.target, m.theta, m.xi
    if theta.source != A.semigroup or theta.target != B.semigroup:
        return EndpointMismatch("theta does not go between the acting semigroups")
    if xi.source != B.space or xi.target != A.space:
        return SpaceMismatch("xi must go from the target space to the source space")
    xv = xi.values
    for s in range(A.semigroup.order):
        ts = theta.map[s]
        pre = preimage(xi, A.domains[s])
        if pre != B.domains[ts]:
            return ValidationError(f"condition (i) fails for element {s}", s)
        av, bv = A.alpha[s].values, B.alpha[ts].values
        for y in bits(pre):
            if av[xv[y]] != xv[bv[y]]:
                return ValidationError(f"condition (ii) fails for element {s} at point {y}", (s, y))
    return None


def is_action_morphism(A, B, theta, xi) -> bool:
    return action_morphism_problem(ActionMorphism(A, B, theta, xi, validate=False)) is None


def identity_morphism(A: Action) -> ActionMorphism:
    return ActionMorphism(A, A, identity_hom(A.semigroup), PartialMap.identity(A.space), validate=False)


def compose_action_morphisms(m2: ActionMorphism, m1: ActionMorphism, validate=True) -> ActionMorphism:
    """m2 after m1: (theta2 theta1, xi1 xi2)."""
    if m1.target != m2.source:
        raise EndpointMismatch("target of m1 differs from source of m2")
    xi = PartialMap(m2.xi.source, m1.xi.target,
                    tuple(None if y is None else m1.xi.values[y] for y in m2.xi.values))
    return ActionMorphism(m1.source, m2.target, compose_homs(m2.theta, m1.theta), xi, validate=validate)


def is_proper_morphism(m: ActionMorphism) -> bool:
    return is_proper(m.xi)


def enumerate_action_morphisms(A: Action, B: Action, limit: int | None = None) -> list[ActionMorphism]:
    """Every action morphism A -> B, by brute force over homs and partial maps."""
    from .topology import all_partial_maps
    homs = enumerate_homs(A.semigroup, B.semigroup)
    maps = list(all_partial_maps(B.space, A.space))
    found = []
    for theta in homs:
        for xi in maps:
            m = ActionMorphism(A, B, theta, xi, validate=False)
            if action_morphism_problem(m) is None:
                found.append(m)
                if limit is not None and len(found) >= limit:
                    return found
    return found


# characters and the spectral action

def _is_character(S: InverseSemigroup, vec) -> bool:
    E, tab, pos = S.idempotents, S.table, S.e_pos
    if not any(vec):
        return False
    for i, e in enumerate(E):
        for j, f in enumerate(E):
            if vec[pos[tab[e][f]]] != vec[i] * vec[j]:
                return False
    return True


def character_vectors(S: InverseSemigroup) -> list[tuple[int, ...]]:
    """Nonzero multiplicative maps E(S) -> {0,1}, found by scanning all 0/1 vectors."""
    k = len(S.idempotents)
    errors.guard(1 << k, errors.current_guards().max_items, "0/1 vectors on E(S)")
    found = [vec for vec in product((0, 1), repeat=k) if _is_character(S, vec)]
    found.sort(key=lambda v: character_minimum(S, v))
    return found


def character_minimum(S: InverseSemigroup, vec) -> int:
    m = None
    for i, e in enumerate(S.idempotents):
        if vec[i]:
            m = e if m is None else S.table[m][e]
    return m


def characters(S: InverseSemigroup) -> tuple[FiniteSpace, list[tuple[int, ...]]]:
    if "characters" not in S.memo:
        vecs = character_vectors(S)
        family = []
        for i in range(len(S.idempotents)):
            u = mask_of(z for z, v in enumerate(vecs) if v[i])
            family += [u, ((1 << len(vecs)) - 1) & ~u]
        S.memo["characters"] = (FiniteSpace.generated(len(vecs), family), vecs)
    return S.memo["characters"]


def filters(S: InverseSemigroup) -> list[tuple[frozenset[int], int]]:
    """Nonempty up-closed meet-closed subsets of E(S), each with its minimum."""
    E, tab = S.idempotents, S.table
    k = len(E)
    errors.guard(1 << k, errors.current_guards().max_items, "subsets of E(S)")
    out = []
    for mask in range(1, 1 << k):
        F = {E[i] for i in range(k) if (mask >> i) & 1}
        if any(tab[e][f] == e and f not in F for e in F for f in E):
            continue
        if any(tab[e][f] not in F for e in F for f in F):
            continue
        mins = [m for m in F if all(tab[m][f] == m for f in F)]
        if len(mins) != 1:
            continue
        out.append((frozenset(F), mins[0]))
    return out


def char_domain(S: InverseSemigroup, e: int) -> int:
    """U_e: the characters that take the value 1 at the idempotent e."""
    _, vecs = characters(S)
    i = S.e_pos[e]
    return mask_of(z for z, v in enumerate(vecs) if v[i])


def spectral_action(S: InverseSemigroup) -> Action:
    if "spectral" in S.memo:
        return S.memo["spectral"]
    space, vecs = characters(S)
    index = {v: z for z, v in enumerate(vecs)}
    tab, star, E, pos = S.table, S.star, S.idempotents, S.e_pos
    alpha = []
    for s in range(S.order):
        ss = star[s]
        src = pos[tab[ss][s]]
        vals = []
        for v in vecs:
            if not v[src]:
                vals.append(None)
                continue
            moved = tuple(v[pos[tab[tab[ss][e]][s]]] for e in E)
            vals.append(index[moved])
        alpha.append(PartialMap(space, space, tuple(vals)))
    name = f"SP({S.name})" if S.name else None
    A = Action(S, space, alpha, name=name)
    S.memo["spectral"] = A
    return A


def sp_hom(theta: SemigroupHom, validate=True) -> ActionMorphism:
    """The proper action morphism (theta, zeta -> zeta after theta)."""
    S, T = theta.source, theta.target
    A, B = spectral_action(S), spectral_action(T)
    _, svecs = characters(S)
    _, tvecs = characters(T)
    index = {v: z for z, v in enumerate(svecs)}
    tpos = T.e_pos
    vals = []
    for zeta in tvecs:
        pulled = tuple(zeta[tpos[theta.map[e]]] for e in S.idempotents)
        vals.append(index[pulled] if any(pulled) else None)
    xi = PartialMap(B.space, A.space, tuple(vals))
    return ActionMorphism(A, B, theta, xi, validate=validate)


# open sets acting by identities

def ox_action(space: FiniteSpace) -> Action:
    if not is_discrete(space):
        raise ValidationError("the open-set action is only provided for discrete spaces")
    opens = space.opens
    index = {u: i for i, u in enumerate(opens)}
    table = [[index[u & v] for v in opens] for u in opens]
    S = validate_inverse_semigroup(table, labels=opens, name=f"O({space.point_count})")
    alpha = [PartialMap.identity(space, u) for u in opens]
    return Action(S, space, alpha, name=f"OX({space.point_count})")


def ox_morphism(xi: PartialMap) -> ActionMorphism:
    """(U -> preimage of U, xi) from the action of O(X) to that of O(Y), for xi: Y -> X."""
    if not is_proper(xi):
        raise ValidationError("xi must be proper")
    A, B = ox_action(xi.target), ox_action(xi.source)
    theta = SemigroupHom(A.semigroup, B.semigroup,
                         [B.semigroup.index_of(preimage(xi, u)) for u in A.semigroup.labels])
    return ActionMorphism(A, B, theta, xi)
