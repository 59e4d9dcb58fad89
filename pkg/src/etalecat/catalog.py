"""Named example objects used by the tests, the law pools and the command line."""
from __future__ import annotations

import re
from functools import lru_cache

from .errors import ValidationError
from .groupoid import GroupoidHom, group_groupoid, pair_groupoid, space_groupoid
from .semigroup import Action, SemigroupHom, i_of, ox_action, spectral_action, validate_inverse_semigroup
from .topology import FiniteSpace, PartialMap


def cyclic_group(n: int, name=None):
    return validate_inverse_semigroup([[(a + b) % n for b in range(n)] for a in range(n)],
                                      labels=["1"] + [f"a{k}" if k > 1 else "a" for k in range(1, n)],
                                      name=name or f"Z{n}")


def chain(k: int, name=None):
    """Chain semilattice top = 0 > 1 > ... > k-1 with product the meet."""
    return validate_inverse_semigroup([[max(a, b) for b in range(k)] for a in range(k)],
                                      name=name or f"CHAIN({k})")


def idempotent_part(S, name=None):
    """E(S) as a semigroup, with its inclusion into S."""
    E = S.idempotents
    pos = {e: i for i, e in enumerate(E)}
    table = [[pos[S.table[e][f]] for f in E] for e in E]
    labels = [S.label(e) for e in E]
    ES = validate_inverse_semigroup(table, labels=labels, name=name or f"E({S.name})")
    return ES, SemigroupHom(ES, S, E)


def _semigroup(name):
    if name == "Z2":
        return validate_inverse_semigroup([[0, 1], [1, 0]], labels=["1", "a"], name="Z2")
    if name == "Z3":
        return cyclic_group(3)
    if name == "E2":
        return validate_inverse_semigroup([[0, 1], [1, 1]], labels=["1", "e"], name="E2")
    if name == "TRIV":
        return validate_inverse_semigroup([[0]], labels=["1"], name="TRIV")
    if name == "I2":
        return i_of(FiniteSpace.discrete(2), name="I2")
    if name == "I1":
        return i_of(FiniteSpace.discrete(1), name="I1")
    if name == "E(I2)":
        return idempotent_part(get("I2"))[0]
    m = re.fullmatch(r"CHAIN\((\d)\)", name)
    if m and 1 <= int(m.group(1)) <= 4:
        return chain(int(m.group(1)))
    return None


def _space(name):
    if name == "SIERP":
        return FiniteSpace.sierpinski()
    m = re.fullmatch(r"DISC\((\d)\)", name)
    if m and int(m.group(1)) <= 4:
        return FiniteSpace.discrete(int(m.group(1)))
    return None


def _action(name):
    if name == "SWAP":
        Z2, X = get("Z2"), get("DISC(2)")
        return Action(Z2, X, [PartialMap.identity(X), PartialMap(X, X, (1, 0))], name="SWAP")
    if name == "I2NAT":
        I2 = get("I2")
        return Action(I2, get("DISC(2)"), I2.labels, name="I2NAT")
    if name == "TRIVACT":
        T, X = get("TRIV"), get("DISC(1)")
        return Action(T, X, [PartialMap.identity(X)], name="TRIVACT")
    m = re.fullmatch(r"OX\((\d)\)", name)
    if m and int(m.group(1)) <= 3:
        return ox_action(get(f"DISC({m.group(1)})"))
    m = re.fullmatch(r"SP\((.+)\)", name)
    if m:
        S = get(m.group(1))
        if S is not None and hasattr(S, "star"):
            return spectral_action(S)
    return None


def _groupoid(name):
    if name == "Z2G":
        return group_groupoid(get("Z2"), name="Z2G")
    if name == "Z3G":
        return group_groupoid(get("Z3"), name="Z3G")
    if name == "PAIR2":
        return pair_groupoid(2, name="PAIR2")
    if name == "SIERPG":
        return space_groupoid(FiniteSpace.sierpinski(), name="SIERPG")
    m = re.fullmatch(r"SPACE\((\d)\)", name)
    if m and int(m.group(1)) <= 4:
        return space_groupoid(FiniteSpace.discrete(int(m.group(1))), name=f"SPACE({m.group(1)})")
    m = re.fullmatch(r"GU\((.+)\)", name)
    if m:
        from .functors import universal_groupoid
        S = get(m.group(1))
        if S is not None and hasattr(S, "star"):
            return universal_groupoid(S).groupoid
    return None


def _hom(name):
    if name == "COLLAPSE":  # PAIR2 -> Z2G: identities to 1, cross arrows to a
        P = get("PAIR2")
        return GroupoidHom(P, get("Z2G"), [0 if P.labels[g][0] == P.labels[g][1] else 1
                                           for g in range(P.arrow_count)])
    if name == "E2->Z2":
        return SemigroupHom(get("E2"), get("Z2"), [0, 0])
    if name == "E(I2)->I2":
        return SemigroupHom(get("E(I2)"), get("I2"), get("I2").idempotents)
    return None


@lru_cache(maxsize=None)
def get(name: str):
    """Look up a catalog object by name; raises KeyError if unknown."""
    for maker in (_semigroup, _space, _action, _groupoid, _hom):
        obj = maker(name)
        if obj is not None:
            return obj
    raise KeyError(name)


SEMIGROUPS = ["TRIV", "Z2", "Z3", "E2", "CHAIN(1)", "CHAIN(2)", "CHAIN(3)", "CHAIN(4)", "I1", "I2", "E(I2)"]
SPACES = ["SIERP", "DISC(0)", "DISC(1)", "DISC(2)", "DISC(3)", "DISC(4)"]
ACTIONS = ["TRIVACT", "SWAP", "I2NAT", "OX(1)", "OX(2)", "OX(3)", "SP(Z2)", "SP(Z3)", "SP(E2)",
           "SP(CHAIN(3))", "SP(CHAIN(4))", "SP(I2)", "SP(E(I2))"]
GROUPOIDS = ["Z2G", "Z3G", "PAIR2", "SIERPG", "SPACE(1)", "SPACE(2)", "SPACE(3)", "SPACE(4)",
             "GU(E2)", "GU(I2)", "GU(CHAIN(3))"]
HOMS = ["COLLAPSE", "E2->Z2", "E(I2)->I2"]


def names() -> list[str]:
    return SEMIGROUPS + SPACES + ACTIONS + GROUPOIDS + HOMS


def kind(obj) -> str:
    from .groupoid import TopGroupoid
    from .semigroup import InverseSemigroup
    for cls, k in ((InverseSemigroup, "semigroup"), (FiniteSpace, "space"), (Action, "action"),
                   (TopGroupoid, "groupoid"), (GroupoidHom, "groupoid_hom"), (SemigroupHom, "semigroup_hom")):
        if isinstance(obj, cls):
            return k
    raise ValidationError(f"unknown object kind {type(obj).__name__}")
