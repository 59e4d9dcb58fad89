"""JSON encoding of every object the command line reads or writes.

Each document carries a "kind" tag; untagged documents are recognised by their keys.
Nested objects may be given inline, as a catalog name, or as a path to another JSON file.
Encoding is deterministic, so dumps(loads(dumps(x))) == dumps(x).
"""
from __future__ import annotations

import json
import os
import sys

from . import catalog
from .errors import ValidationError
from .groupoid import NO, CoupleMorphism, GroupoidHom, TopGroupoid, validate_groupoid
from .semigroup import Action, ActionMorphism, InverseSemigroup, SemigroupHom, validate_inverse_semigroup
from .star_algebra import Scalar, StarHom
from .topology import FiniteSpace, PartialMap, bits, mask_of


def _plain(x):
    if isinstance(x, PartialMap):
        return {"space": space_json(x.source), **partial_map_json(x)}
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    return x


def _unplain(x):
    if isinstance(x, dict) and "space" in x and "values" in x:
        space = load_space(x["space"])
        return load_partial_map(x, space, space)
    if isinstance(x, list):
        return tuple(_unplain(v) for v in x)
    return x


# spaces and partial maps

def space_json(X: FiniteSpace) -> dict:
    return {"kind": "space", "points": X.point_count, "opens": [list(bits(U)) for U in X.opens]}


def load_space(data) -> FiniteSpace:
    data = resolve(data)
    if isinstance(data, FiniteSpace):
        return data
    _need_document(data, "FiniteSpace")
    n = data["points"]
    if not isinstance(n, int) or n < 0:
        raise ValidationError("points must be a natural number")
    opens = []
    for U in data["opens"]:
        if any(not isinstance(p, int) or not 0 <= p < n for p in U):
            raise ValidationError("open set mentions a point outside the space", U)
        opens.append(mask_of(U))
    return FiniteSpace.from_opens(n, opens)


def partial_map_json(f: PartialMap) -> dict:
    return {"domain": list(bits(f.domain)), "values": {str(x): f.values[x] for x in bits(f.domain)}}


def load_partial_map(data, source: FiniteSpace, target: FiniteSpace) -> PartialMap:
    values = {int(k): v for k, v in data["values"].items()}
    if sorted(values) != sorted(data.get("domain", values)):
        raise ValidationError("domain and values disagree")
    return PartialMap.from_dict(source, target, values)


# semigroups and homs

def semigroup_json(S: InverseSemigroup) -> dict:
    out = {"kind": "semigroup", "order": S.order, "table": [list(r) for r in S.table]}
    if S.labels is not None:
        out["labels"] = _plain(S.labels)
    if S.name:
        out["name"] = S.name
    return out


def load_semigroup(data) -> InverseSemigroup:
    data = resolve(data)
    if isinstance(data, InverseSemigroup):
        return data
    _need_document(data, "InverseSemigroup")
    table = data["table"]
    if len(table) != data.get("order", len(table)):
        raise ValidationError("order does not match the table")
    n = len(table)
    if any(len(row) != n or any(not isinstance(v, int) or not 0 <= v < n for v in row) for row in table):
        raise ValidationError("table must be square with entries in range")
    labels = _unplain(data["labels"]) if "labels" in data else None
    return validate_inverse_semigroup(table, labels=labels, name=data.get("name"))


def semigroup_hom_json(h: SemigroupHom) -> dict:
    return {"kind": "semigroup_hom", "source": semigroup_json(h.source), "target": semigroup_json(h.target),
            "map": list(h.map)}


def load_semigroup_hom(data) -> SemigroupHom:
    data = resolve(data)
    if isinstance(data, SemigroupHom):
        return data
    _need_document(data, "SemigroupHom")
    return SemigroupHom(load_semigroup(data["source"]), load_semigroup(data["target"]), data["map"])


# actions

def action_json(A: Action) -> dict:
    out = {"kind": "action", "semigroup": semigroup_json(A.semigroup), "space": space_json(A.space),
           "alpha": [partial_map_json(f) for f in A.alpha]}
    if A.name:
        out["name"] = A.name
    return out


def load_action(data) -> Action:
    data = resolve(data)
    if isinstance(data, Action):
        return data
    _need_document(data, "Action")
    S, X = load_semigroup(data["semigroup"]), load_space(data["space"])
    return Action(S, X, [load_partial_map(f, X, X) for f in data["alpha"]], name=data.get("name"))


def action_morphism_json(m: ActionMorphism) -> dict:
    return {"kind": "action_morphism", "source": action_json(m.source), "target": action_json(m.target),
            "theta": list(m.theta.map), "xi": partial_map_json(m.xi)}


def load_action_morphism(data) -> ActionMorphism:
    data = resolve(data)
    if isinstance(data, ActionMorphism):
        return data
    _need_document(data, "ActionMorphism")
    A, B = load_action(data["source"]), load_action(data["target"])
    theta = SemigroupHom(A.semigroup, B.semigroup, data["theta"])
    return ActionMorphism(A, B, theta, load_partial_map(data["xi"], B.space, A.space))


# groupoids and couples

def groupoid_json(G: TopGroupoid) -> dict:
    out = {"kind": "groupoid", "arrows": G.arrow_count, "units": list(G.units), "d": list(G.d),
           "r": list(G.r), "inv": list(G.inv),
           "mult": [[a, b, G.table[a][b]] for a in range(G.arrow_count) for b in range(G.arrow_count)
                    if G.table[a][b] != NO],
           "opens": [list(bits(U)) for U in G.topology.opens]}
    if G.labels is not None:
        out["labels"] = _plain(G.labels)
    if G.name:
        out["name"] = G.name
    return out


def load_groupoid(data) -> TopGroupoid:
    data = resolve(data)
    if isinstance(data, TopGroupoid):
        return data
    _need_document(data, "TopGroupoid")
    G = validate_groupoid(data)
    if "labels" in data:
        G.labels = _unplain(data["labels"])
    return G


def groupoid_hom_json(f: GroupoidHom) -> dict:
    return {"kind": "groupoid_hom", "source": groupoid_json(f.source), "target": groupoid_json(f.target),
            "map": list(f.map)}


def load_groupoid_hom(data) -> GroupoidHom:
    data = resolve(data)
    if isinstance(data, GroupoidHom):
        return data
    _need_document(data, "GroupoidHom")
    return GroupoidHom(load_groupoid(data["source"]), load_groupoid(data["target"]), data["map"])


def couple_json(c: CoupleMorphism) -> dict:
    return {"kind": "couple", "source": groupoid_json(c.source), "target": groupoid_json(c.target),
            "K": groupoid_json(c.K), "phi": list(c.phi.map), "psi": list(c.psi.map)}


def load_couple(data) -> CoupleMorphism:
    data = resolve(data)
    if isinstance(data, CoupleMorphism):
        return data
    _need_document(data, "CoupleMorphism")
    G, H, K = load_groupoid(data["source"]), load_groupoid(data["target"]), load_groupoid(data["K"])
    return CoupleMorphism(G, H, GroupoidHom(K, G, data["phi"]), GroupoidHom(K, H, data["psi"]))


# matrices

def star_hom_json(h: StarHom) -> dict:
    return {"kind": "star_hom", "rows": h.target.dim, "cols": h.source.dim, "matrix": h.to_json()}


def load_scalar(data) -> Scalar:
    from fractions import Fraction
    if "re" in data:
        return Scalar(load_scalar(data["re"]).re, load_scalar(data["im"]).re)
    return Scalar(Fraction(data["n"], data["d"]))


def _need_document(data, what):
    if not isinstance(data, dict):
        raise ValidationError(f"expected {what}, got {type(data).__name__}")


# dispatch

ENCODERS = [(InverseSemigroup, semigroup_json), (FiniteSpace, space_json), (Action, action_json),
            (TopGroupoid, groupoid_json), (SemigroupHom, semigroup_hom_json), (GroupoidHom, groupoid_hom_json),
            (ActionMorphism, action_morphism_json), (CoupleMorphism, couple_json), (StarHom, star_hom_json)]

LOADERS = {"space": load_space, "semigroup": load_semigroup, "action": load_action, "groupoid": load_groupoid,
           "semigroup_hom": load_semigroup_hom, "groupoid_hom": load_groupoid_hom,
           "action_morphism": load_action_morphism, "couple": load_couple}


def to_json(obj) -> dict:
    for cls, enc in ENCODERS:
        if isinstance(obj, cls):
            return enc(obj)
    raise ValidationError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj if isinstance(obj, (dict, list)) else to_json(obj), indent=1, sort_keys=False)


def detect_kind(data: dict) -> str:
    if "kind" in data:
        if data["kind"] not in LOADERS:
            raise ValidationError(f"unknown kind {data['kind']!r}")
        return data["kind"]
    keys = set(data)
    for kind, needed in (("couple", {"K", "phi", "psi"}), ("action_morphism", {"theta", "xi"}),
                         ("action", {"alpha"}), ("groupoid", {"arrows", "units"}),
                         ("semigroup", {"table"}), ("space", {"points", "opens"})):
        if needed <= keys:
            return kind
    raise ValidationError("cannot tell what kind of object this is")


def load(data):
    """Decode a parsed document, a catalog name or a file path into a validated object."""
    data = resolve(data)
    if not isinstance(data, dict):
        return data
    return LOADERS[detect_kind(data)](data)


def resolve(ref):
    """Strings are catalog names or file paths ("-" is stdin); everything else passes through."""
    if not isinstance(ref, str):
        return ref
    try:
        return catalog.get(ref)
    except KeyError:
        pass
    if ref == "-":
        text = sys.stdin.read()
    elif os.path.exists(ref):
        with open(ref) as fh:
            text = fh.read()
    else:
        raise ValidationError(f"{ref!r} is neither a catalog name nor a readable file")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
