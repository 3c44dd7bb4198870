"""Checker output types: identity ids, violations and reports."""

from __future__ import annotations

import dataclasses
from enum import Enum
from typing import Tuple

from .superspace import SuperBasis, format_vector


class IdentityId(Enum):
    """Every identity the checkers know, one residual formula per member."""

    SLY1 = "SLY1"
    SLY2 = "SLY2"
    SLY3 = "SLY3"
    SLY4 = "SLY4"
    SLY5 = "SLY5"
    SLY6 = "SLY6"
    SHLY1 = "SHLY1"
    SHLY2 = "SHLY2"
    SHLY3 = "SHLY3"
    SHLY4 = "SHLY4"
    SHLY5 = "SHLY5"
    SHLY6 = "SHLY6"
    SHLY7 = "SHLY7"
    SHLY8 = "SHLY8"
    SKEW2 = "SKEW2"
    SKEW3 = "SKEW3"
    HOM_JACOBI = "HOM_JACOBI"
    HOM_ASSOC = "HOM_ASSOC"
    STS_I = "STS_I"
    STS_II = "STS_II"
    NAMBU = "NAMBU"
    MULT2 = "MULT2"
    MULT3 = "MULT3"


@dataclasses.dataclass(frozen=True)
class Violation:
    """One identity instance with a nonzero residual."""

    identity: IdentityId
    indices: Tuple[int, ...]
    residual: tuple

    def key(self):
        return (self.identity.value, self.indices)


@dataclasses.dataclass(frozen=True)
class Report:
    """Outcome of sweeping one or more identities over all basis tuples."""

    algebra_name: str
    basis: SuperBasis
    identities_checked: Tuple[IdentityId, ...]
    violations: Tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def violations_for(self, identity: IdentityId) -> Tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.identity is identity)

    def violation_at(self, identity: IdentityId, names: Tuple[str, ...]):
        indices = tuple(self.basis.index(n) for n in names)
        for v in self.violations:
            if v.identity is identity and v.indices == indices:
                return v
        return None

    def describe(self) -> str:
        lines = [
            f"algebra: {self.algebra_name}",
            "identities: " + ", ".join(i.value for i in self.identities_checked),
            f"result: {'PASS' if self.passed else 'FAIL'} "
            f"({len(self.violations)} violation(s))",
        ]
        names = self.basis.names
        for v in self.violations:
            tup = ", ".join(names[i] for i in v.indices)
            lines.append(
                f"  {v.identity.value} ({tup}): residual = "
                + format_vector(self.basis, v.residual)
            )
        return "\n".join(lines)


@dataclasses.dataclass(frozen=True)
class TableDiff:
    """One tensor entry where a published table and a computed one disagree."""

    op: str  # "binary" | "ternary"
    indices: Tuple[int, ...]
    printed: tuple
    computed: tuple


@dataclasses.dataclass(frozen=True)
class CrossCheckReport:
    """Entrywise comparison of a published table against a construction."""

    entry_name: str
    params: dict
    basis: SuperBasis
    diffs: Tuple[TableDiff, ...]

    @property
    def match(self) -> bool:
        return not self.diffs

    def diff_at(self, op: str, names: Tuple[str, ...]):
        indices = tuple(self.basis.index(n) for n in names)
        for d in self.diffs:
            if d.op == op and d.indices == indices:
                return d
        return None

    def describe(self) -> str:
        lines = [
            f"entry: {self.entry_name}",
            f"params: {self.params}",
            f"result: {'MATCH' if self.match else f'{len(self.diffs)} difference(s)'}",
        ]
        names = self.basis.names
        for d in self.diffs:
            tup = ", ".join(names[i] for i in d.indices)
            lines.append(
                f"  {d.op} ({tup}): printed = "
                + format_vector(self.basis, d.printed)
                + " / computed = "
                + format_vector(self.basis, d.computed)
            )
        return "\n".join(lines)
