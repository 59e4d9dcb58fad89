"""Finite topological spaces and continuous partial maps.

Point sets are bitmasks over ``range(point_count)``.  A finite topology is
determined by the smallest open neighbourhood of each point, so that tuple is
the canonical data of a space; the full open family is derived on demand.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator

from . import errors
from .errors import GuardExceeded, NotContinuous, SpaceMismatch, ValidationError


def bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class FiniteSpace:
    point_count: int
    nbhd: tuple[int, ...]

    def __post_init__(self):
        if len(self.nbhd) != self.point_count:
            raise ValidationError("one minimal neighbourhood per point is required")
        full = self.full
        for p, m in enumerate(self.nbhd):
            if not (m >> p) & 1 or m & ~full:
                raise ValidationError(f"bad neighbourhood of point {p}", p)
            for q in bits(m):
                if self.nbhd[q] & ~m:
                    raise ValidationError(f"neighbourhoods of {p} and {q} are not nested", (p, q))

    @property
    def full(self) -> int:
        return (1 << self.point_count) - 1

    @classmethod
    def generated(cls, n: int, family: Iterable[int]) -> FiniteSpace:
        """Coarsest topology on n points in which every member of family is open."""
        full = (1 << n) - 1
        nb = [full] * n
        for u in family:
            u &= full
            for p in bits(u):
                nb[p] &= u
        return cls(n, tuple(nb))

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[int]) -> FiniteSpace:
        family = set(opens)
        full = (1 << n) - 1
        for u in family:
            if u < 0 or u & ~full:
                raise ValidationError(f"open set {sorted(bits(u))} is out of range", u)
        if 0 not in family or full not in family:
            raise ValidationError("the empty set and the full set must be open")
        for u, v in combinations(family, 2):
            if u | v not in family or u & v not in family:
                raise ValidationError("open family is not closed under union and intersection", (u, v))
        space = cls.generated(n, family)
        if len(space.opens) != len(family):
            raise ValidationError("open family is not a topology")
        return space

    @classmethod
    def discrete(cls, n: int) -> FiniteSpace:
        return cls(n, tuple(1 << p for p in range(n)))

    @classmethod
    def indiscrete(cls, n: int) -> FiniteSpace:
        return cls(n, ((1 << n) - 1,) * n)

    @classmethod
    def sierpinski(cls) -> FiniteSpace:
        return cls(2, (0b11, 0b10))

    @cached_property
    def opens(self) -> tuple[int, ...]:
        family = {0}
        for m in set(self.nbhd):
            family |= {u | m for u in family}
        return tuple(sorted(family))

    def is_open(self, mask: int) -> bool:
        return all(not self.nbhd[p] & ~mask for p in bits(mask))

    def subspace(self, mask: int) -> tuple[FiniteSpace, tuple[int, ...]]:
        """Subspace on the points of mask, renumbered in increasing order."""
        points = tuple(bits(mask))
        pos = {p: i for i, p in enumerate(points)}
        nb = tuple(mask_of(pos[q] for q in bits(self.nbhd[p] & mask)) for p in points)
        return FiniteSpace(len(points), nb), points

    def product(self, other: FiniteSpace) -> FiniteSpace:
        """Product space; the pair (a, b) is point a * other.point_count + b."""
        m = other.point_count
        nb = []
        for a in range(self.point_count):
            for b in range(m):
                nb.append(mask_of(x * m + y for x in bits(self.nbhd[a]) for y in bits(other.nbhd[b])))
        return FiniteSpace(self.point_count * m, tuple(nb))


def is_discrete(space: FiniteSpace) -> bool:
    return all(m == 1 << p for p, m in enumerate(space.nbhd))


def is_hausdorff(space: FiniteSpace) -> bool:
    # smallest neighbourhoods are the best candidates for separating two points
    n = space.point_count
    return all(not space.nbhd[x] & space.nbhd[y] for x in range(n) for y in range(x + 1, n))


def is_locally_compact_hausdorff(space: FiniteSpace) -> bool:
    # every finite space is compact, hence locally compact
    return is_hausdorff(space)


def open_covers(space: FiniteSpace, subset: int) -> Iterator[tuple[int, ...]]:
    """All families of opens of the subspace on subset whose union is the subset."""
    sub, _ = space.subspace(subset)
    candidates = [u for u in sub.opens if u]
    full = sub.full
    for k in range(len(candidates) + 1):
        for fam in combinations(candidates, k):
            union = 0
            for u in fam:
                union |= u
            if union == full:
                yield fam


def finite_subcover(cover: tuple[int, ...], target: int) -> tuple[int, ...] | None:
    """Greedily drop redundant members of cover; None if cover misses target."""
    chosen = list(cover)
    i = 0
    while i < len(chosen):
        rest = 0
        for j, v in enumerate(chosen):
            if j != i:
                rest |= v
        if rest & target == target:
            del chosen[i]
        else:
            i += 1
    union = 0
    for u in chosen:
        union |= u
    return tuple(chosen) if union & target == target else None


def compact_by_covers(space: FiniteSpace, subset: int) -> bool:
    sub, _ = space.subspace(subset)
    return all(finite_subcover(c, sub.full) is not None for c in open_covers(space, subset))


@lru_cache(maxsize=4096)
def is_compact(space: FiniteSpace, subset: int) -> bool:
    sub, _ = space.subspace(subset)
    if len(sub.opens) <= errors.current_guards().cover_enum_max_opens:
        return compact_by_covers(space, subset)
    # Too many covers to list.  Every cover is a subfamily of the finite
    # family sub.opens, so it is already its own finite subcover.
    return True


@dataclass(frozen=True)
class PartialMap:
    source: FiniteSpace
    target: FiniteSpace
    values: tuple[int | None, ...]

    def __post_init__(self):
        problem = _partial_map_problem(self.source, self.target, self.values)
        if problem is not None:
            raise problem

    @classmethod
    def from_dict(cls, source: FiniteSpace, target: FiniteSpace, mapping: dict) -> PartialMap:
        return cls(source, target, tuple(mapping.get(x) for x in range(source.point_count)))

    @classmethod
    def identity(cls, space: FiniteSpace, domain: int | None = None) -> PartialMap:
        if domain is None:
            domain = space.full
        return cls(space, space, tuple(x if (domain >> x) & 1 else None for x in range(space.point_count)))

    @classmethod
    def empty(cls, source: FiniteSpace, target: FiniteSpace) -> PartialMap:
        return cls(source, target, (None,) * source.point_count)

    @cached_property
    def domain(self) -> int:
        return mask_of(x for x, y in enumerate(self.values) if y is not None)

    @cached_property
    def image(self) -> int:
        return mask_of(y for y in self.values if y is not None)

    def __call__(self, x: int) -> int:
        y = self.values[x]
        if y is None:
            raise KeyError(x)
        return y

    def as_dict(self) -> dict[int, int]:
        return {x: y for x, y in enumerate(self.values) if y is not None}


def _partial_map_problem(source, target, values):
    if len(values) != source.point_count:
        return ValidationError("values must list every source point")
    dom = 0
    for x, y in enumerate(values):
        if y is not None:
            if not 0 <= y < target.point_count:
                return ValidationError(f"value {y} out of range", x)
            dom |= 1 << x
    if not source.is_open(dom):
        return NotContinuous("domain is not open", dom)
    for x in bits(dom):
        allowed = target.nbhd[values[x]]
        for z in bits(source.nbhd[x]):
            if not (allowed >> values[z]) & 1:
                return NotContinuous(f"preimage of the neighbourhood of {values[x]} is not open", x)
    return None


def is_continuous(source: FiniteSpace, target: FiniteSpace, values) -> bool:
    return _partial_map_problem(source, target, tuple(values)) is None


def compose_partial(g: PartialMap, f: PartialMap) -> PartialMap:
    """g after f; defined where f is defined and lands in the domain of g."""
    if f.target != g.source:
        raise SpaceMismatch("target of f differs from source of g")
    gv = g.values
    vals = tuple(None if y is None else gv[y] for y in f.values)
    return PartialMap(f.source, g.target, vals)


def preimage(f: PartialMap, subset: int) -> int:
    if subset & ~f.target.full:
        raise ValidationError("subset out of range", subset)
    return mask_of(x for x, y in enumerate(f.values) if y is not None and (subset >> y) & 1)


def image(f: PartialMap, subset: int) -> int:
    return mask_of(f.values[x] for x in bits(subset & f.domain))


def restrict_domain(f: PartialMap, subset: int) -> PartialMap:
    return PartialMap(f.source, f.target, tuple(y if (subset >> x) & 1 else None for x, y in enumerate(f.values)))


def is_injective(f: PartialMap) -> bool:
    vals = [y for y in f.values if y is not None]
    return len(vals) == len(set(vals))


def is_open_map(f: PartialMap) -> bool:
    # opens are unions of smallest neighbourhoods, and images preserve unions
    return all(f.target.is_open(image(f, f.source.nbhd[x])) for x in bits(f.domain))


def inverse(f: PartialMap) -> PartialMap:
    """Inverse of an injective partial map; raises if it is not continuous."""
    if not is_injective(f):
        raise ValidationError("map is not injective")
    vals: list[int | None] = [None] * f.target.point_count
    for x, y in enumerate(f.values):
        if y is not None:
            vals[y] = x
    return PartialMap(f.target, f.source, tuple(vals))


def is_partial_homeomorphism(f: PartialMap) -> bool:
    if not is_injective(f) or not f.target.is_open(f.image):
        return False
    vals: list[int | None] = [None] * f.target.point_count
    for x, y in enumerate(f.values):
        if y is not None:
            vals[y] = x
    return is_continuous(f.target, f.source, vals)


def is_homeomorphism(f: PartialMap) -> bool:
    return f.domain == f.source.full and f.image == f.target.full and is_partial_homeomorphism(f)


def is_proper(f: PartialMap) -> bool:
    """Preimages of compact subsets of the target are compact."""
    tgt = f.target
    errors.guard(1 << tgt.point_count, errors.current_guards().max_items, "subsets of the target")
    for k in range(1 << tgt.point_count):
        if is_compact(tgt, k) and not is_compact(f.source, preimage(f, k)):
            return False
    return True


def all_partial_maps(source: FiniteSpace, target: FiniteSpace, limit: int | None = None) -> Iterator[PartialMap]:
    """Every continuous partial map source -> target, domains in open-family order."""
    if limit is None:
        limit = errors.current_guards().max_items
    m = target.point_count
    total = sum(m ** popcount(d) for d in source.opens)
    errors.guard(total, limit, "candidate partial maps")
    for dom in source.opens:
        pts = list(bits(dom))
        yield from _assign(source, target, dom, pts, 0, [None] * source.point_count)


def _assign(source, target, dom, pts, i, vals):
    if i == len(pts):
        if is_continuous(source, target, vals):
            yield PartialMap(source, target, tuple(vals))
        return
    x = pts[i]
    for y in range(target.point_count):
        vals[x] = y
        # prune: smallest neighbourhood of x already assigned must land near y
        ok = True
        for z in bits(source.nbhd[x]):
            if vals[z] is not None and z != x and not (target.nbhd[y] >> vals[z]) & 1:
                ok = False
                break
        if ok:
            yield from _assign(source, target, dom, pts, i + 1, vals)
    vals[x] = None


def _sort_key(f: PartialMap):
    return (popcount(f.domain), f.domain, tuple(-1 if y is None else y for y in f.values))


def partial_homeos(space: FiniteSpace, limit: int | None = None) -> list[PartialMap]:
    """All homeomorphisms between open subspaces, including the empty one."""
    if limit is None:
        limit = errors.current_guards().max_items
    by_size: dict[int, list[int]] = {}
    for u in space.opens:
        by_size.setdefault(popcount(u), []).append(u)
    found = []
    for size, family in by_size.items():
        for a in family:
            src = list(bits(a))
            for b in family:
                for perm in permutations(bits(b)):
                    vals: list[int | None] = [None] * space.point_count
                    for x, y in zip(src, perm):
                        vals[x] = y
                    if not is_continuous(space, space, vals):
                        continue
                    f = PartialMap(space, space, tuple(vals))
                    if is_partial_homeomorphism(f):
                        found.append(f)
                        if len(found) > limit:
                            raise GuardExceeded(f"more than {limit} partial homeomorphisms")
    found.sort(key=_sort_key)
    return found


@dataclass(frozen=True)
class BasedSpace:
    space: FiniteSpace
    basepoint: int

    def __post_init__(self):
        if not 0 <= self.basepoint < self.space.point_count:
            raise ValidationError("basepoint out of range")
        if not is_hausdorff(self.space):
            raise ValidationError("a based space must be Hausdorff")


@dataclass(frozen=True)
class BasedMap:
    source: BasedSpace
    target: BasedSpace
    map: PartialMap

    def __post_init__(self):
        if self.map.domain != self.source.space.full:
            raise ValidationError("based maps are total")
        if self.map(self.source.basepoint) != self.target.basepoint:
            raise ValidationError("based maps preserve the basepoint")


def one_point_compactify(space: FiniteSpace) -> BasedSpace:
    if not is_locally_compact_hausdorff(space):
        raise ValidationError("one-point compactification needs a locally compact Hausdorff space")
    n = space.point_count
    inf = 1 << n
    family = set(space.opens)
    for k in range(1 << n):
        if is_compact(space, k):
            family.add(inf | (space.full & ~k))
    return BasedSpace(FiniteSpace.from_opens(n + 1, family), n)


def lift(f: PartialMap) -> BasedMap:
    if not is_proper(f):
        raise ValidationError("only proper maps extend to the compactifications")
    src, tgt = one_point_compactify(f.source), one_point_compactify(f.target)
    vals = tuple(tgt.basepoint if y is None else y for y in f.values) + (tgt.basepoint,)
    return BasedMap(src, tgt, PartialMap(src.space, tgt.space, vals))


def restrict(g: BasedMap) -> PartialMap:
    xs, xpts = g.source.space.subspace(g.source.space.full & ~(1 << g.source.basepoint))
    ys, ypts = g.target.space.subspace(g.target.space.full & ~(1 << g.target.basepoint))
    ypos = {p: i for i, p in enumerate(ypts)}
    vals = tuple(ypos.get(g.map(p)) for p in xpts)
    return PartialMap(xs, ys, vals)
