"""Exception types and enumeration guards shared by every module."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace


class EtaleError(Exception):
    """Base class for everything raised by this package."""


class ValidationError(EtaleError, ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SpaceMismatch(ValidationError):
    pass


class EndpointMismatch(ValidationError):
    pass


class NotContinuous(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class NoUniqueInverse(ValidationError):
    pass


class AxiomViolation(ValidationError):
    def __init__(self, axiom: str, witness=None):
        super().__init__(f"groupoid axiom {axiom} fails at {witness!r}", witness)
        self.axiom = axiom


class NonDiscreteGroupoid(ValidationError):
    pass


class HypothesisFailure(ValidationError):
    """A construction was applied to data that does not meet its preconditions."""


class GuardExceeded(EtaleError):
    pass


@dataclass(frozen=True)
class Guards:
    max_items: int = 100_000
    bis_max_arrows: int = 16
    triangle_max_arrows: int = 10
    enum_max_order: int = 4
    pool_max_morphisms: int = 200
    cover_enum_max_opens: int = 12


def _load_guards() -> Guards:
    raw = os.environ.get("ETALECAT_GUARDS")
    if not raw:
        return Guards()
    data = json.loads(raw)
    known = {f.name for f in fields(Guards)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown guard names: {sorted(unknown)}")
    return replace(Guards(), **{k: int(v) for k, v in data.items()})


GUARDS = _load_guards()


def set_guards(**overrides) -> Guards:
    global GUARDS
    GUARDS = replace(GUARDS, **overrides)
    return GUARDS


def current_guards() -> Guards:
    return GUARDS


def guard(count: int, limit: int, what: str) -> None:
    if count > limit:
        raise GuardExceeded(f"{what}: {count} exceeds guard {limit}")
