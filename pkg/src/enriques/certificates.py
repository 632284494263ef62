"""Step-chain certificates shared by the exceptional and limit-surface pipelines.

A step records a claim, a citation key naming the fact it rests on, and an
arithmetic check that :func:`validate_steps` re-evaluates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

_OPS = {
    "eq": lambda a, b: a == b,
    "ne": lambda a, b: a != b,
    "lt": lambda a, b: a < b,
    "le": lambda a, b: a <= b,
    "gt": lambda a, b: a > b,
    "ge": lambda a, b: a >= b,
    "is": lambda a, b: bool(a) is bool(b),
}


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _num(x):
    if isinstance(x, str):
        return Fraction(x)
    return x


@dataclass(frozen=True)
class Check:
    op: str
    lhs: object
    rhs: object

    @property
    def holds(self):
        return _OPS[self.op](_num(self.lhs), _num(self.rhs))

    def to_json(self):
        return {"op": self.op, "lhs": _plain(self.lhs), "rhs": _plain(self.rhs), "holds": self.holds}


@dataclass(frozen=True)
class Step:
    claim: str
    citation: str
    check: Check
    expected: bool = True

    @property
    def ok(self):
        return self.check.holds is self.expected

    def to_json(self):
        return {
            "claim": self.claim,
            "citation": self.citation,
            "check": self.check.to_json(),
            "expected": self.expected,
        }


def step(claim, citation, op, lhs, rhs, expected=True):
    return Step(claim, citation, Check(op, lhs, rhs), expected)


def validate_steps(steps):
    """True iff every step has a citation and its arithmetic check comes out as recorded."""
    return all(s.citation and s.ok for s in steps)


@dataclass(frozen=True)
class ObstructionCertificate:
    """Result of the multiplicity pipeline on the limit surface."""

    m: int
    twist: int
    obstructed: bool
    steps: tuple
    failed: tuple = field(default=())

    def to_json(self):
        return {
            "m": self.m,
            "twist": self.twist,
            "obstructed": self.obstructed,
            "failed_steps": list(self.failed),
            "steps": [s.to_json() for s in self.steps],
        }

    def validate(self):
        return validate_steps(self.steps)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
