"""Violation and check records shared by every verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exactlin import format_rat


class PreconditionError(ValueError):
    """An operation was handed an object that fails its axiom checks."""


@dataclass(frozen=True)
class AxiomViolation:
    axiom_id: str
    witness: tuple
    lhs: tuple
    rhs: tuple

    def describe(self, labels: dict | None = None) -> str:
        wit = ", ".join(_label(w, labels) for w in self.witness)
        return "%s at (%s): lhs=%s rhs=%s" % (
            self.axiom_id, wit, _vec_str(self.lhs), _vec_str(self.rhs))

    def to_json(self) -> dict:
        return {
            "id": self.axiom_id,
            "witness": [list(w) if isinstance(w, tuple) else w for w in self.witness],
            "lhs": [format_rat(x) for x in self.lhs],
            "rhs": [format_rat(x) for x in self.rhs],
        }


def _label(w, labels):
    # witnesses are (space, index) pairs
    if isinstance(w, tuple) and len(w) == 2 and labels and w[0] in labels:
        names = labels[w[0]]
        if 0 <= w[1] < len(names):
            return names[w[1]]
    if isinstance(w, tuple):
        return "%s%d" % w
    return str(w)


def _vec_str(v) -> str:
    return "(" + ", ".join(format_rat(x) for x in v) + ")"


@dataclass
class Check:
    id: str
    passed: bool
    detail: str = ""
    witness: Any = None

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        text = "%s  %s" % (mark, self.id)
        if self.detail:
            text += ": " + self.detail
        return text

    def to_json(self) -> dict:
        out = {"id": self.id, "pass": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    # False when a result's hypotheses fail and its conclusions were not asserted
    applicable: bool = True

    def add(self, id: str, passed: bool, detail: str = "", witness: Any = None) -> Check:
        c = Check(id, bool(passed), detail, witness)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def __contains__(self, id: str) -> bool:
        return any(c.id == id for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def to_json(self) -> dict:
        out = {"title": self.title, "checks": [c.to_json() for c in self.checks]}
        if not self.applicable:
            out["applicable"] = False
        return out


def _jsonable(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return format_rat(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)
