"""Verification reports shared by the identity-checking operations.

A report records both sides of one checked identity instance and an exact
equality flag; JSON form is {identity, n, lhs, rhs, equal} plus any extra
fields the producing module supplies (basis and set sizes for two-set
identities, the family echo for specialization rows).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

from .exact_ring import elem_to_jsonable


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    n: int
    lhs: Any
    rhs: Any
    equal: bool
    details: Mapping[str, Any] = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "lhs": elem_to_jsonable(self.lhs),
            "rhs": elem_to_jsonable(self.rhs),
            "equal": self.equal,
        }
        for k, v in self.details.items():
            out[k] = elem_to_jsonable(v) if not isinstance(v, (dict, bool, int, str)) else v
        return out


def all_equal(reports) -> bool:
    return all(r.equal for r in reports)
