"""Exact finite-dimensional *-algebras of semigroups and discrete groupoids."""
from __future__ import annotations

from fractions import Fraction

from .errors import HypothesisFailure, NonDiscreteGroupoid, ValidationError
from .functors import Verdict, describe, gu_on_hom, universal_groupoid
from .groupoid import (NO, CoupleMorphism, GroupoidHom, TopGroupoid, is_fibrewise_bijective,
                       is_proper_couple, unit_part)
from .semigroup import InverseSemigroup, SemigroupHom
from .topology import bits, is_discrete, is_open_map, is_proper


class Scalar:
    """Gaussian rational re + im*i."""
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def of(x) -> Scalar:
        return x if isinstance(x, Scalar) else Scalar(x)

    def __add__(self, o):
        o = Scalar.of(o)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = Scalar.of(o)
        return Scalar(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, o):
        o = Scalar.of(o)
        return Scalar(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = Scalar.of(o)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self * Scalar(o.re / den, -o.im / den)

    def conj(self) -> Scalar:
        return Scalar(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = Scalar(o)
        return isinstance(o, Scalar) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}+{self.im}i)"

    def to_json(self):
        re = {"n": self.re.numerator, "d": self.re.denominator}
        if not self.im:
            return re
        return {"re": re, "im": {"n": self.im.numerator, "d": self.im.denominator}}


ZERO, ONE = Scalar(0), Scalar(1)


class StarAlgebra:
    """Basis products are sparse vectors; star permutes the basis and conjugates scalars."""

    def __init__(self, labels, mult, star, name=None):
        self.labels = tuple(labels)
        self.mult = mult  # mult[a][b] is a dict {basis index: Scalar}
        self.star = tuple(star)
        self.name = name

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __eq__(self, other):
        return (isinstance(other, StarAlgebra) and self.labels == other.labels
                and self.star == other.star and self.mult == other.mult)

    def __hash__(self):
        return hash((self.labels, self.star))

    def __repr__(self):
        return f"StarAlgebra({self.name or self.dim})"


def vec_mul(alg: StarAlgebra, x: dict, y: dict) -> dict:
    out: dict = {}
    for a, ca in x.items():
        row = alg.mult[a]
        for b, cb in y.items():
            for c, cc in row[b].items():
                out[c] = out.get(c, ZERO) + ca * cb * cc
    return {k: v for k, v in out.items() if v}


def vec_star(alg: StarAlgebra, x: dict) -> dict:
    return {alg.star[a]: c.conj() for a, c in x.items()}


def algebra_problem(alg: StarAlgebra):
    n = alg.dim
    basis = [{i: ONE} for i in range(n)]
    for a in range(n):
        if alg.star[alg.star[a]] != a:
            return ("star not involutive", a)
        for b in range(n):
            ab = vec_mul(alg, basis[a], basis[b])
            if vec_star(alg, ab) != vec_mul(alg, {alg.star[b]: ONE}, {alg.star[a]: ONE}):
                return ("star not anti-multiplicative", (a, b))
            for c in range(n):
                if vec_mul(alg, ab, basis[c]) != vec_mul(alg, basis[a], vec_mul(alg, basis[b], basis[c])):
                    return ("not associative", (a, b, c))
    return None


def semigroup_algebra(S: InverseSemigroup) -> StarAlgebra:
    if "algebra" not in S.memo:
        mult = tuple(tuple({S.table[s][t]: ONE} for t in range(S.order)) for s in range(S.order))
        S.memo["algebra"] = StarAlgebra(range(S.order), mult, S.star, name=f"C[{S.name}]" if S.name else None)
    return S.memo["algebra"]


def groupoid_algebra(G: TopGroupoid) -> StarAlgebra:
    if not is_discrete(G.topology):
        raise NonDiscreteGroupoid("convolution algebra needs a discrete arrow space")
    if "algebra" not in G.memo:
        n = G.arrow_count
        mult = tuple(tuple({G.table[a][b]: ONE} if G.table[a][b] != NO else {} for b in range(n))
                     for a in range(n))
        G.memo["algebra"] = StarAlgebra(range(n), mult, G.inv, name=f"Q({G.name})" if G.name else None)
    return G.memo["algebra"]


class StarHom:
    def __init__(self, source: StarAlgebra, target: StarAlgebra, matrix):
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(Scalar.of(v) for v in row) for row in matrix)
        if len(self.matrix) != target.dim or any(len(row) != source.dim for row in self.matrix):
            raise ValidationError("matrix shape must be dim(target) x dim(source)")

    def column(self, j: int) -> dict:
        return {i: row[j] for i, row in enumerate(self.matrix) if row[j]}

    def apply(self, x: dict) -> dict:
        out: dict = {}
        for j, c in x.items():
            for i, v in self.column(j).items():
                out[i] = out.get(i, ZERO) + v * c
        return {k: v for k, v in out.items() if v}

    def __eq__(self, other):
        return isinstance(other, StarHom) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"StarHom({self.source!r}->{self.target!r})"

    def to_json(self):
        return [[v.to_json() for v in row] for row in self.matrix]


def zero_one_matrix(rows: int, cols: int, ones) -> list[list[Scalar]]:
    m = [[ZERO] * cols for _ in range(rows)]
    for i, j in ones:
        m[i][j] = m[i][j] + ONE
    return m


def compose_star_homs(h2: StarHom, h1: StarHom) -> StarHom:
    if h1.target.dim != h2.source.dim:
        raise ValidationError("dimensions do not match")
    return StarHom(h1.source, h2.target, matmul(h2.matrix, h1.matrix, h1.source.dim))


def matmul(a, b, cols=None):
    """a times b; cols must be given when b has no rows."""
    if cols is None:
        cols = len(b[0])
    out = []
    for row in a:
        nz = [(k, v) for k, v in enumerate(row) if v]
        out.append(tuple(sum((v * b[k][j] for k, v in nz), ZERO) for j in range(cols)))
    return tuple(out)


def identity_star_hom(alg: StarAlgebra) -> StarHom:
    return StarHom(alg, alg, zero_one_matrix(alg.dim, alg.dim, [(i, i) for i in range(alg.dim)]))


def star_hom_witness(h: StarHom):
    """First basis pair breaking multiplicativity, or basis element breaking star; None if fine."""
    src, tgt = h.source, h.target
    cols = [h.column(j) for j in range(src.dim)]
    for a in range(src.dim):
        if h.apply(vec_star(src, {a: ONE})) != vec_star(tgt, cols[a]):
            return ("star", a)
        for b in range(src.dim):
            if h.apply(vec_mul(src, {a: ONE}, {b: ONE})) != vec_mul(tgt, cols[a], cols[b]):
                return ("mult", (a, b))
    return None


def validate_star_hom(h: StarHom) -> bool:
    return star_hom_witness(h) is None


def rank(matrix) -> int:
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    rk, ncols = 0, len(rows[0])
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        p = rows[rk][col]
        rows[rk] = [v / p for v in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][col]:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[rk])]
        rk += 1
    return rk


def is_isomorphism(h: StarHom) -> bool:
    n = h.source.dim
    return h.target.dim == n and rank(h.matrix) == n and validate_star_hom(h)


def sigma_theta(theta: SemigroupHom) -> StarHom:
    A, B = semigroup_algebra(theta.source), semigroup_algebra(theta.target)
    return StarHom(A, B, zero_one_matrix(B.dim, A.dim, [(t, s) for s, t in enumerate(theta.map)]))


def sigma_phi(phi: GroupoidHom, check=True) -> StarHom:
    """f -> f after phi, from Q(target of phi) to Q(source of phi)."""
    if check and not is_fibrewise_bijective(phi):
        raise HypothesisFailure("phi is not fibrewise bijective")
    if check and not is_proper(unit_part(phi)):
        raise HypothesisFailure("unit part of phi is not proper")
    QK, QG = groupoid_algebra(phi.source), groupoid_algebra(phi.target)
    return StarHom(QG, QK, zero_one_matrix(QK.dim, QG.dim, [(k, g) for k, g in enumerate(phi.map)]))


def pi_psi(psi: GroupoidHom, check=True) -> StarHom:
    """Push forward by summing over fibres of psi."""
    if check:
        psi0 = unit_part(psi)
        if len(set(psi0.values)) != len(psi0.values) or not is_open_map(psi0):
            raise HypothesisFailure("unit part of psi must be open and injective")
    QK, QH = groupoid_algebra(psi.source), groupoid_algebra(psi.target)
    return StarHom(QK, QH, zero_one_matrix(QH.dim, QK.dim, [(h, k) for k, h in enumerate(psi.map)]))


def cstar_on_couple(c: CoupleMorphism) -> StarHom:
    if not is_proper_couple(c):
        raise HypothesisFailure("couple morphism is not proper")
    return compose_star_homs(pi_psi(c.psi), sigma_phi(c.phi))


def characteristic(alg: StarAlgebra, mask: int) -> dict:
    return {i: ONE for i in bits(mask)}


def paterson_iso(S: InverseSemigroup) -> StarHom:
    """delta_s -> characteristic function of [s, U_{s*s}] in Q(Gu(S))."""
    tg = universal_groupoid(S)
    A = tg.action
    QS, QG = semigroup_algebra(S), groupoid_algebra(tg.groupoid)
    ones = [(tg.class_index[(s, z)], s) for s in range(S.order) for z in bits(A.domains[s])]
    return StarHom(QS, QG, zero_one_matrix(QG.dim, QS.dim, ones))


def check_paterson_naturality(theta: SemigroupHom, iota=paterson_iso) -> Verdict:
    lhs = compose_star_homs(iota(theta.target), sigma_theta(theta))
    rhs = compose_star_homs(cstar_on_couple(gu_on_hom(theta)), iota(theta.source))
    ok = lhs == rhs
    return Verdict("paterson_naturality", describe(theta), ok,
                   None if ok else lhs.to_json(), None if ok else rhs.to_json())


def faithfulness_experiment(pool) -> Verdict:
    """Distinct canon values must give distinct matrices across the pool."""
    mats = [(c, cstar_on_couple(c)) for c in pool]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            (c1, m1), (c2, m2) = mats[i], mats[j]
            if c1.canon != c2.canon and m1 == m2:
                return Verdict("faithfulness", [describe(c1), describe(c2)], False, m1.to_json(), m2.to_json())
    return Verdict("faithfulness", f"{len(mats)} couples", True)
