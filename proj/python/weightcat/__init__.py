"""Weight modules in categories O_{S,theta}: classification, invariant checks, Ext certificates."""

from dataclasses import dataclass
import json
from typing import Optional, Sequence

from . import _weightcat
from ._weightcat import CertificationImpossible, ConfigError

SCHEMA = _weightcat.SCHEMA

__all__ = [
    "SCHEMA",
    "CertificationImpossible",
    "ConfigError",
    "Result",
    "classify",
    "ext",
    "lab",
    "lemma_ids",
    "verify",
]


@dataclass(frozen=True)
class Result:
    command: str
    data: dict
    text: str
    passed: bool

    def envelope(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "result": self.data}


def _wrap(command: str, r) -> Result:
    return Result(command, json.loads(r.json), r.text, r.passed)


def _csv(values) -> str:
    if isinstance(values, str):
        return values
    return ",".join(str(v) for v in values)


def lemma_ids() -> list:
    return list(_weightcat.lemma_ids())


def classify(type: str, theta: Sequence[int] = ()) -> Result:
    """theta holds 1-based simple root indices."""
    return _wrap("classify", _weightcat.classify(type, list(theta)))


def verify(module: str, a, theta: Optional[Sequence[int]] = None, B: int = 3, D: int = 4) -> Result:
    """a is a comma separated string or a sequence of ints, fractions.Fraction or "p/q" strings."""
    return _wrap("verify", _weightcat.verify(module, _csv(a), None if theta is None else list(theta), B, D))


def ext(module: str, a, b=None, B: int = 3) -> Result:
    return _wrap("ext", _weightcat.ext(module, _csv(a), "" if b is None else _csv(b), B))


def lab(id: str, a=None, c=None, type: str = "", theta: Sequence[int] = (), B: int = 3, D: int = 4,
        seed: int = 1) -> Result:
    return _wrap(
        "lab",
        _weightcat.lab(id, "" if a is None else _csv(a), "" if c is None else _csv(c), type, list(theta), B, D, seed),
    )
