"""Finite topological groupoids, bisections, couple morphisms and their composition."""
from __future__ import annotations

from . import errors
from .errors import AxiomViolation, EndpointMismatch, NotContinuous, ValidationError
from .semigroup import (Action, ActionMorphism, InverseSemigroup, SemigroupHom,
                        validate_inverse_semigroup)
from .topology import (FiniteSpace, PartialMap, bits, is_discrete, is_hausdorff,
                       is_open_map, is_proper, mask_of, popcount)

NO = -1  # marks a non-composable pair in the multiplication table


class TopGroupoid:
    def __init__(self, d, r, inv, table, units, topology: FiniteSpace, labels=None, name=None,
                 validate=True):
        self.d = tuple(d)
        self.r = tuple(r)
        self.inv = tuple(inv)
        self.table = tuple(tuple(row) for row in table)
        self.units = tuple(sorted(units))
        self.topology = topology
        self.labels = tuple(labels) if labels is not None else None
        self.name = name
        self.unit_mask = mask_of(self.units)
        self.unit_pos = {u: i for i, u in enumerate(self.units)}
        self.unit_space, _ = topology.subspace(self.unit_mask)
        self.memo: dict = {}
        self._hash = hash((self.d, self.r, self.inv, self.table, self.units, topology))
        if validate:
            groupoid_problem = _groupoid_problem(self)
            if groupoid_problem is not None:
                raise groupoid_problem

    @property
    def arrow_count(self) -> int:
        return len(self.d)

    def mul(self, a: int, b: int) -> int:
        v = self.table[a][b]
        if v == NO:
            raise ValidationError(f"arrows {a} and {b} are not composable", (a, b))
        return v

    def composable(self, a: int, b: int) -> bool:
        return self.d[a] == self.r[b]

    def mult_triples(self) -> list[tuple[int, int, int]]:
        n = self.arrow_count
        return [(a, b, self.table[a][b]) for a in range(n) for b in range(n) if self.table[a][b] != NO]

    def label(self, g: int):
        return self.labels[g] if self.labels is not None else g

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, TopGroupoid) and self._hash == other._hash
                and self.d == other.d and self.r == other.r and self.inv == other.inv
                and self.table == other.table and self.units == other.units
                and self.topology == other.topology)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"TopGroupoid({self.name or self.arrow_count})"


def make_groupoid(arrow_count, units, d, r, inv, mult, topology: FiniteSpace | None = None,
                  labels=None, name=None) -> TopGroupoid:
    """Build and validate from a product given on exactly the composable pairs.

    mult may be a dict {(a, b): ab} or a list of [a, b, ab] triples.
    """
    n = arrow_count
    if topology is None:
        topology = FiniteSpace.discrete(n)
    if topology.point_count != n:
        raise ValidationError("topology must live on the arrow set")
    for name_, vec in (("d", d), ("r", r), ("inv", inv)):
        if len(vec) != n or any(not 0 <= v < n for v in vec):
            raise ValidationError(f"{name_} must map every arrow to an arrow")
    items = mult.items() if isinstance(mult, dict) else [((a, b), c) for a, b, c in mult]
    table = [[NO] * n for _ in range(n)]
    for (a, b), c in items:
        if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
            raise ValidationError("product entry out of range", (a, b, c))
        if d[a] != r[b]:
            raise AxiomViolation("mult-domain", (a, b))
        if table[a][b] != NO and table[a][b] != c:
            raise AxiomViolation("mult-unique", (a, b))
        table[a][b] = c
    for a in range(n):
        for b in range(n):
            if d[a] == r[b] and table[a][b] == NO:
                raise AxiomViolation("mult-total", (a, b))
    return TopGroupoid(d, r, inv, table, units, topology, labels=labels, name=name)


def _groupoid_problem(G: TopGroupoid):
    n, d, r, inv, t = G.arrow_count, G.d, G.r, G.inv, G.table
    units = set(G.units)
    if len(inv) != n or len(r) != n or len(t) != n or G.topology.point_count != n:
        return ValidationError("structure maps must be defined on every arrow")
    if not units <= set(range(n)):
        return ValidationError("units out of range")
    for g in range(n):
        if d[g] not in units or r[g] not in units:
            return AxiomViolation("d-r-units", g)
        for h in range(n):
            if (t[g][h] != NO) != (d[g] == r[h]):
                return AxiomViolation("mult-domain", (g, h))
    for u in units:
        if not r[u] == u == d[u]:
            return AxiomViolation("i", u)
    for g in range(n):
        if t[r[g]][g] != g or t[g][d[g]] != g:
            return AxiomViolation("ii", g)
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            if ab != NO and (r[ab] != r[a] or d[ab] != d[b]):
                return AxiomViolation("iii", (a, b))
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            if ab == NO:
                continue
            for c in range(n):
                bc = t[b][c]
                if bc != NO and t[ab][c] != t[a][bc]:
                    return AxiomViolation("iv", (a, b, c))
    for g in range(n):
        if d[inv[g]] != r[g] or r[inv[g]] != d[g]:
            return AxiomViolation("v", g)
        if t[g][inv[g]] != r[g] or t[inv[g]][g] != d[g]:
            return AxiomViolation("vi", g)
    nb = G.topology.nbhd
    for g in range(n):
        for h in bits(nb[g]):
            if not (nb[inv[g]] >> inv[h]) & 1:
                return NotContinuous("inverse", nb[inv[g]])
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            if ab == NO:
                continue
            for a2 in bits(nb[a]):
                for b2 in bits(nb[b]):
                    c = t[a2][b2]
                    if c != NO and not (nb[ab] >> c) & 1:
                        return NotContinuous("multiplication", nb[ab])
    return None


def validate_groupoid(data: dict) -> TopGroupoid:
    n = data["arrows"]
    opens = data.get("opens")
    topology = None if opens is None else FiniteSpace.from_opens(n, [mask_of(u) for u in opens])
    return make_groupoid(n, data["units"], data["d"], data["r"], data["inv"], data["mult"], topology,
                         name=data.get("name"))


# basic examples

def space_groupoid(space: FiniteSpace, name=None) -> TopGroupoid:
    n = space.point_count
    ids = list(range(n))
    table = [[a if a == b else NO for b in range(n)] for a in range(n)]
    return TopGroupoid(ids, ids, ids, table, ids, space, name=name)


def group_groupoid(S: InverseSemigroup, name=None) -> TopGroupoid:
    """A finite group, given by a table whose only idempotent is the identity."""
    if len(S.idempotents) != 1:
        raise ValidationError("a group has exactly one idempotent")
    e = S.idempotents[0]
    n = S.order
    return TopGroupoid([e] * n, [e] * n, S.star, S.table, [e], FiniteSpace.discrete(n),
                       labels=S.labels, name=name)


def pair_groupoid(k: int, name=None) -> TopGroupoid:
    """Pair groupoid on k units: arrow (i, j) goes from j to i and has id i * k + j."""
    n = k * k
    d = [a % k for a in range(n)]
    r = [a // k for a in range(n)]
    d = [j * k + j for j in d]
    r = [i * k + i for i in r]
    inv = [(a % k) * k + a // k for a in range(n)]
    table = [[(a // k) * k + b % k if a % k == b // k else NO for b in range(n)] for a in range(n)]
    labels = [(a // k, a % k) for a in range(n)]
    return TopGroupoid(d, r, inv, table, [i * k + i for i in range(k)], FiniteSpace.discrete(n),
                       labels=labels, name=name)


# subsets of arrows

def subset_product(G: TopGroupoid, U: int, V: int) -> int:
    out = 0
    t = G.table
    for a in bits(U):
        row = t[a]
        for b in bits(V):
            c = row[b]
            if c != NO:
                out |= 1 << c
    return out


def subset_inverse(G: TopGroupoid, U: int) -> int:
    return mask_of(G.inv[g] for g in bits(U))


def d_image(G: TopGroupoid, U: int) -> int:
    return mask_of(G.d[g] for g in bits(U))


def r_image(G: TopGroupoid, U: int) -> int:
    return mask_of(G.r[g] for g in bits(U))


def is_bisection(G: TopGroupoid, U: int) -> bool:
    k = popcount(U)
    return popcount(d_image(G, U)) == k and popcount(r_image(G, U)) == k


def units_open(G: TopGroupoid) -> bool:
    return G.topology.is_open(G.unit_mask)


def _open_in_units(G: TopGroupoid, W: int) -> bool:
    nb, um = G.topology.nbhd, G.unit_mask
    return all(not (nb[u] & um) & ~W for u in bits(W))


def is_local_homeomorphism_on(G: TopGroupoid, V: int) -> bool:
    """d restricted to the open set V is a homeomorphism onto an open subset of the units."""
    nb, d, um = G.topology.nbhd, G.d, G.unit_mask
    if not G.topology.is_open(V) or not is_bisection_for_d(G, V):
        return False
    W = d_image(G, V)
    if not _open_in_units(G, W):
        return False
    back = {d[h]: h for h in bits(V)}
    for h in bits(V):
        if any(not (nb[d[h]] >> d[k]) & 1 for k in bits(nb[h] & V)):
            return False
    for u in bits(W):
        h = back[u]
        if any(not (nb[h] >> back[w]) & 1 for w in bits(nb[u] & um & W)):
            return False
    return True


def is_bisection_for_d(G: TopGroupoid, V: int) -> bool:
    return popcount(d_image(G, V)) == popcount(V)


def is_etale(G: TopGroupoid) -> bool:
    # If any open V around g works, so does the smallest open neighbourhood of g,
    # because restricting a local homeomorphism to an open subset keeps it one.
    return all(is_local_homeomorphism_on(G, G.topology.nbhd[g]) for g in range(G.arrow_count))


def is_etale_by_search(G: TopGroupoid) -> bool:
    opens = G.topology.opens
    return all(any((V >> g) & 1 and is_local_homeomorphism_on(G, V) for V in opens)
               for g in range(G.arrow_count))


def open_bisections(G: TopGroupoid) -> InverseSemigroup:
    """Bis G: every open bisection (the empty one included) under UV and inversion."""
    if "bis" in G.memo:
        return G.memo["bis"]
    errors.guard(G.arrow_count, errors.current_guards().bis_max_arrows, "arrows for Bis enumeration")
    n, d, r = G.arrow_count, G.d, G.r
    found = []
    limit = errors.current_guards().max_items

    def grow(i, chosen, used_d, used_r):
        if i == n:
            if G.topology.is_open(chosen):
                found.append(chosen)
                if len(found) > limit:
                    raise errors.GuardExceeded(f"more than {limit} open bisections")
            return
        grow(i + 1, chosen, used_d, used_r)
        if not (used_d >> d[i]) & 1 and not (used_r >> r[i]) & 1:
            grow(i + 1, chosen | 1 << i, used_d | 1 << d[i], used_r | 1 << r[i])

    grow(0, 0, 0, 0)
    found.sort(key=lambda m: (popcount(m), m))
    index = {m: i for i, m in enumerate(found)}
    table = [[index[subset_product(G, U, V)] for V in found] for U in found]
    star = [index[subset_inverse(G, U)] for U in found]
    name = f"Bis({G.name})" if G.name else None
    S = validate_inverse_semigroup(table, labels=found, name=name, star=star)
    G.memo["bis"] = S
    return S


def slice_action(G: TopGroupoid) -> Action:
    if "slice" in G.memo:
        return G.memo["slice"]
    S = open_bisections(G)
    X = G.unit_space
    pos = G.unit_pos
    alpha = []
    for U in S.labels:
        vals: list[int | None] = [None] * X.point_count
        for g in bits(U):
            vals[pos[G.d[g]]] = pos[G.r[g]]
        alpha.append(PartialMap(X, X, tuple(vals)))
    name = f"SA({G.name})" if G.name else None
    A = Action(S, X, alpha, name=name)
    G.memo["slice"] = A
    return A


# homomorphisms

class GroupoidHom:
    def __init__(self, source: TopGroupoid, target: TopGroupoid, mapping, validate=True):
        self.source = source
        self.target = target
        self.map = tuple(mapping)
        if validate:
            problem = _hom_problem(self)
            if problem is not None:
                raise problem

    def __call__(self, g: int) -> int:
        return self.map[g]

    def __eq__(self, other):
        return (isinstance(other, GroupoidHom) and self.map == other.map
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"GroupoidHom({self.source!r}->{self.target!r}, {self.map})"


def _hom_problem(f: GroupoidHom):
    G, H, m = f.source, f.target, f.map
    if len(m) != G.arrow_count or any(not 0 <= v < H.arrow_count for v in m):
        return ValidationError("hom must send every arrow to an arrow")
    for a in range(G.arrow_count):
        for b in range(G.arrow_count):
            ab = G.table[a][b]
            if ab == NO:
                continue
            if H.table[m[a]][m[b]] != m[ab]:
                return ValidationError("composable pair not preserved", (a, b))
    gn, hn = G.topology.nbhd, H.topology.nbhd
    for g in range(G.arrow_count):
        if any(not (hn[m[g]] >> m[k]) & 1 for k in bits(gn[g])):
            return NotContinuous("hom", g)
    return None


def is_groupoid_hom(G, H, mapping) -> bool:
    return _hom_problem(GroupoidHom(G, H, mapping, validate=False)) is None


def identity_ghom(G: TopGroupoid) -> GroupoidHom:
    return GroupoidHom(G, G, range(G.arrow_count), validate=False)


def compose_ghoms(f2: GroupoidHom, f1: GroupoidHom) -> GroupoidHom:
    if f1.target != f2.source:
        raise EndpointMismatch("hom endpoints do not match")
    return GroupoidHom(f1.source, f2.target, (f2.map[v] for v in f1.map), validate=False)


def hom_preimage(f: GroupoidHom, V: int) -> int:
    return mask_of(g for g, h in enumerate(f.map) if (V >> h) & 1)


def hom_image(f: GroupoidHom, U: int) -> int:
    return mask_of(f.map[g] for g in bits(U))


def unit_part(f: GroupoidHom) -> PartialMap:
    G, H = f.source, f.target
    vals = []
    for u in G.units:
        v = f.map[u]
        if v not in H.unit_pos:
            raise ValidationError("hom sends a unit to a non-unit", u)
        vals.append(H.unit_pos[v])
    return PartialMap(G.unit_space, H.unit_space, tuple(vals))


def is_fibrewise_bijective(f: GroupoidHom) -> bool:
    G, H = f.source, f.target
    fibres_h: dict[int, set[int]] = {}
    for h in range(H.arrow_count):
        fibres_h.setdefault(H.d[h], set()).add(h)
    fibres_g: dict[int, list[int]] = {u: [] for u in G.units}
    for g in range(G.arrow_count):
        fibres_g[G.d[g]].append(g)
    for u, arrows in fibres_g.items():
        imgs = [f.map[g] for g in arrows]
        if len(set(imgs)) != len(imgs) or set(imgs) != fibres_h.get(f.map[u], set()):
            return False
    return True


def is_homeomorphic_iso(f: GroupoidHom) -> bool:
    G, H = f.source, f.target
    if sorted(f.map) != list(range(H.arrow_count)) or G.arrow_count != H.arrow_count:
        return False
    back = [0] * H.arrow_count
    for g, h in enumerate(f.map):
        back[h] = g
    return _hom_problem(GroupoidHom(H, G, back, validate=False)) is None


def inverse_ghom(f: GroupoidHom) -> GroupoidHom:
    back = [0] * f.target.arrow_count
    for g, h in enumerate(f.map):
        back[h] = g
    return GroupoidHom(f.target, f.source, back)


# products and pullbacks

def product_groupoid(G: TopGroupoid, H: TopGroupoid) -> TopGroupoid:
    """Arrow (g, h) has id g * |H| + h."""
    m = H.arrow_count
    n = G.arrow_count * m
    pair = lambda g, h: g * m + h  # noqa: E731
    d = [pair(G.d[a // m], H.d[a % m]) for a in range(n)]
    r = [pair(G.r[a // m], H.r[a % m]) for a in range(n)]
    inv = [pair(G.inv[a // m], H.inv[a % m]) for a in range(n)]
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            x, y = G.table[a // m][b // m], H.table[a % m][b % m]
            row.append(NO if x == NO or y == NO else pair(x, y))
        table.append(row)
    units = [pair(u, v) for u in G.units for v in H.units]
    labels = [(a // m, a % m) for a in range(n)]
    return TopGroupoid(d, r, inv, table, units, G.topology.product(H.topology), labels=labels,
                       validate=False)


def subgroupoid(G: TopGroupoid, arrows: int, name=None) -> tuple[TopGroupoid, tuple[int, ...]]:
    """Subgroupoid on a set of arrows closed under the operations, with subspace topology."""
    pts = tuple(bits(arrows))
    pos = {g: i for i, g in enumerate(pts)}
    try:
        d = [pos[G.d[g]] for g in pts]
        r = [pos[G.r[g]] for g in pts]
        inv = [pos[G.inv[g]] for g in pts]
        table = [[NO if G.table[a][b] == NO else pos[G.table[a][b]] for b in pts] for a in pts]
    except KeyError as exc:
        raise ValidationError("arrow set is not closed under the groupoid operations", exc.args[0])
    topology, _ = G.topology.subspace(arrows)
    units = [pos[u] for u in G.units if (arrows >> u) & 1]
    labels = [G.label(g) for g in pts]
    return TopGroupoid(d, r, inv, table, units, topology, labels=labels, name=name), pts


def is_subgroupoid(G: TopGroupoid, arrows: int) -> bool:
    for g in bits(arrows):
        if not (arrows >> G.inv[g]) & 1 or not (arrows >> G.d[g]) & 1:
            return False
    return subset_product(G, arrows, arrows) & ~arrows == 0


class Pullback:
    def __init__(self, K: TopGroupoid, phi_tilde: GroupoidHom, psi_tilde: GroupoidHom):
        self.K = K
        self.phi_tilde = phi_tilde
        self.psi_tilde = psi_tilde

    def __iter__(self):
        return iter((self.K, self.phi_tilde, self.psi_tilde))


def pullback(psi1: GroupoidHom, phi2: GroupoidHom) -> Pullback:
    """Fibred product of K1 and K2 over the shared target of psi1 and phi2."""
    if psi1.target != phi2.target:
        raise EndpointMismatch("pullback needs a shared middle groupoid")
    K1, K2 = psi1.source, phi2.source
    pairs = [(a, b) for a in range(K1.arrow_count) for b in range(K2.arrow_count)
             if psi1.map[a] == phi2.map[b]]
    pos = {p: i for i, p in enumerate(pairs)}
    d = [pos[(K1.d[a], K2.d[b])] for a, b in pairs]
    r = [pos[(K1.r[a], K2.r[b])] for a, b in pairs]
    inv = [pos[(K1.inv[a], K2.inv[b])] for a, b in pairs]
    table = []
    for a, b in pairs:
        row = []
        for a2, b2 in pairs:
            x, y = K1.table[a][a2], K2.table[b][b2]
            row.append(NO if x == NO or y == NO else pos[(x, y)])
        table.append(row)
    units = [i for i, (a, b) in enumerate(pairs) if a in K1.unit_pos and b in K2.unit_pos]
    n1, n2 = K1.topology.nbhd, K2.topology.nbhd
    nbhd = tuple(mask_of(j for j, (a2, b2) in enumerate(pairs) if (n1[a] >> a2) & 1 and (n2[b] >> b2) & 1)
                 for a, b in pairs)
    K = TopGroupoid(d, r, inv, table, units, FiniteSpace(len(pairs), nbhd), labels=pairs)
    return Pullback(K, GroupoidHom(K, K1, [a for a, _ in pairs]), GroupoidHom(K, K2, [b for _, b in pairs]))


# couple morphisms

class CoupleMorphism:
    """Representative (phi, psi; K) of a morphism source -> target; compared through canon."""

    def __init__(self, source: TopGroupoid, target: TopGroupoid, phi: GroupoidHom, psi: GroupoidHom,
                 validate=True):
        self.source = source
        self.target = target
        self.K = phi.source
        self.phi = phi
        self.psi = psi
        self.canon = frozenset(zip(phi.map, psi.map))
        if validate:
            problem = couple_problem(self)
            if problem is not None:
                raise problem

    def __eq__(self, other):
        return (isinstance(other, CoupleMorphism) and self.canon == other.canon
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.canon)

    def __repr__(self):
        return f"CoupleMorphism({self.source!r}->{self.target!r}, |K|={self.K.arrow_count})"


def couple_problem(c: CoupleMorphism):
    if c.phi.source != c.psi.source:
        return EndpointMismatch("phi and psi must share their source")
    if c.phi.target != c.source or c.psi.target != c.target:
        return EndpointMismatch("phi must land in the source and psi in the target")
    for f in (c.phi, c.psi):
        p = _hom_problem(f)
        if p is not None:
            return p
    if not is_fibrewise_bijective(c.phi):
        return ValidationError("phi is not fibrewise bijective")
    psi0 = unit_part(c.psi)
    if len(set(psi0.values)) != len(psi0.values):
        return ValidationError("unit part of psi is not injective")
    if not is_open_map(psi0):
        return ValidationError("unit part of psi is not open")
    return None


def identity_couple(G: TopGroupoid) -> CoupleMorphism:
    i = identity_ghom(G)
    return CoupleMorphism(G, G, i, i, validate=False)


def compose_couples(c2: CoupleMorphism, c1: CoupleMorphism, validate=True) -> CoupleMorphism:
    """c2 after c1, represented on the pullback of psi1 and phi2."""
    if c1.target != c2.source:
        raise EndpointMismatch("target of c1 differs from source of c2")
    P = pullback(c1.psi, c2.phi)
    return CoupleMorphism(c1.source, c2.target, compose_ghoms(c1.phi, P.phi_tilde),
                          compose_ghoms(c2.psi, P.psi_tilde), validate=validate)


def couples_equivalent(c1: CoupleMorphism, c2: CoupleMorphism) -> bool:
    if c1.source != c2.source or c1.target != c2.target:
        raise EndpointMismatch("couples must share source and target")
    return c1.canon == c2.canon


def find_equivalence(c1: CoupleMorphism, c2: CoupleMorphism) -> GroupoidHom | None:
    """Exhaustive search for a homeomorphic isomorphism K1 -> K2 over both legs."""
    if c1.source != c2.source or c1.target != c2.target:
        raise EndpointMismatch("couples must share source and target")
    K1, K2 = c1.K, c2.K
    if K1.arrow_count != K2.arrow_count:
        return None
    n = K1.arrow_count
    cands = [[k2 for k2 in range(n) if c2.phi.map[k2] == c1.phi.map[k1] and c2.psi.map[k2] == c1.psi.map[k1]]
             for k1 in range(n)]
    img = [0] * n
    used = [False] * n

    def go(i):
        if i == n:
            f = GroupoidHom(K1, K2, img, validate=False)
            if _hom_problem(f) is None and is_homeomorphic_iso(f):
                return GroupoidHom(K1, K2, img)
            return None
        for k2 in cands[i]:
            if not used[k2]:
                used[k2] = True
                img[i] = k2
                found = go(i + 1)
                used[k2] = False
                if found is not None:
                    return found
        return None

    return go(0)


def is_proper_couple(c: CoupleMorphism) -> bool:
    return is_proper(unit_part(c.phi))


def is_isomorphism_couple(c: CoupleMorphism) -> bool:
    return is_homeomorphic_iso(c.phi) and is_homeomorphic_iso(c.psi)


def reversed_couple(c: CoupleMorphism) -> CoupleMorphism:
    """[psi, phi; K] as a morphism target -> source."""
    return CoupleMorphism(c.target, c.source, c.psi, c.phi)


def couple_from_image(G: TopGroupoid, H: TopGroupoid, pairs) -> CoupleMorphism:
    """Couple whose K is the given set of arrow pairs, viewed inside G x H."""
    P = product_groupoid(G, H)
    m = H.arrow_count
    K, pts = subgroupoid(P, mask_of(g * m + h for g, h in pairs))
    return CoupleMorphism(G, H, GroupoidHom(K, G, [p // m for p in pts]),
                          GroupoidHom(K, H, [p % m for p in pts]))


def sa_on_couple(c: CoupleMorphism, validate=True) -> ActionMorphism:
    """(U -> psi(phi^-1(U)), phi0 after the inverse of psi0) between slice actions."""
    G, H = c.source, c.target
    A, B = slice_action(G), slice_action(H)
    SG, SH = A.semigroup, B.semigroup
    theta = SemigroupHom(SG, SH, [SH.index_of(hom_image(c.psi, hom_preimage(c.phi, U))) for U in SG.labels],
                         validate=validate)
    K = c.K
    vals: list[int | None] = [None] * H.unit_space.point_count
    for u in K.units:
        vals[H.unit_pos[c.psi.map[u]]] = G.unit_pos[c.phi.map[u]]
    xi = PartialMap(H.unit_space, G.unit_space, tuple(vals))
    return ActionMorphism(A, B, theta, xi, validate=validate)


def finite_etale_is_discrete(G: TopGroupoid) -> bool:
    """Finite etale groupoid with Hausdorff units has discrete arrow space."""
    if not (is_etale(G) and is_hausdorff(G.unit_space)):
        return True
    return is_discrete(G.topology)


def to_dot(G: TopGroupoid) -> str:
    lines = [f"digraph {_dot_id(G.name or 'G')} {{"]
    for u in G.units:
        lines.append(f'  u{u} [label="{u}"];')
    for g in range(G.arrow_count):
        if g not in G.unit_pos:
            lines.append(f'  u{G.d[g]} -> u{G.r[g]} [label="{g}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(name: str) -> str:
    return '"' + str(name).replace('"', "'") + '"'



def relabel_groupoid(G: TopGroupoid, perm) -> TopGroupoid:
    """Isomorphic copy in which old arrow i becomes perm[i]."""
    n = G.arrow_count
    back = [0] * n
    for i, p in enumerate(perm):
        back[p] = i
    d = [perm[G.d[back[a]]] for a in range(n)]
    r = [perm[G.r[back[a]]] for a in range(n)]
    inv = [perm[G.inv[back[a]]] for a in range(n)]
    table = [[NO if G.table[back[a]][back[b]] == NO else perm[G.table[back[a]][back[b]]]
              for b in range(n)] for a in range(n)]
    nbhd = tuple(mask_of(perm[q] for q in bits(G.topology.nbhd[back[a]])) for a in range(n))
    labels = [G.label(back[a]) for a in range(n)]
    return TopGroupoid(d, r, inv, table, [perm[u] for u in G.units], FiniteSpace(n, nbhd), labels=labels)


def relabel_couple(c: CoupleMorphism, perm) -> CoupleMorphism:
    K2 = relabel_groupoid(c.K, perm)
    n = c.K.arrow_count
    back = [0] * n
    for i, p in enumerate(perm):
        back[p] = i
    return CoupleMorphism(c.source, c.target, GroupoidHom(K2, c.source, [c.phi.map[back[a]] for a in range(n)]),
                          GroupoidHom(K2, c.target, [c.psi.map[back[a]] for a in range(n)]))


def enumerate_couples(G: TopGroupoid, H: TopGroupoid) -> list[CoupleMorphism]:
    """One representative (K inside G x H) of every couple morphism G -> H.

    Every couple is equivalent to the one carried by its image, so it is enough
    to search subgroupoids of G x H.  Fibrewise bijectivity is built in: over a
    chosen unit (u, v), each arrow of G starting at u gets exactly one partner.
    """
    unit_pairs = [(u, v) for u in G.units for v in H.units]
    from_d: dict[int, list[int]] = {}
    for g in range(G.arrow_count):
        from_d.setdefault(G.d[g], []).append(g)
    h_from: dict[int, list[int]] = {}
    for h in range(H.arrow_count):
        h_from.setdefault(H.d[h], []).append(h)
    found: dict[frozenset, CoupleMorphism] = {}

    def choose_units(i, used_v, W):
        if i == len(unit_pairs):
            yield list(W)
            return
        yield from choose_units(i + 1, used_v, W)
        u, v = unit_pairs[i]
        if v not in used_v:
            W.append((u, v))
            yield from choose_units(i + 1, used_v | {v}, W)
            W.pop()

    for W in choose_units(0, frozenset(), []):
        Wset = set(W)
        slots = []
        for u, v in W:
            for g in from_d.get(u, []):
                slots.append([(g, h) for h in h_from.get(v, []) if (G.r[g], H.r[h]) in Wset])
        for pick in _cartesian(slots):
            pairs = frozenset(pick)
            if pairs in found:
                continue
            try:
                found[pairs] = couple_from_image(G, H, sorted(pairs))
            except ValidationError:
                continue
    return [found[k] for k in sorted(found, key=lambda s: (len(s), sorted(s)))]


def _cartesian(slots):
    if not slots:
        yield ()
        return
    first, rest = slots[0], slots[1:]
    for x in first:
        for tail in _cartesian(rest):
            yield (x,) + tail
